#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padiclab/ode.hpp"

namespace padiclab {

/// Built-in equation builders. Keys follow the catalog's stable equation
/// numbering; parametric families take their parameters as arguments.
namespace equations {

/// x^2 w' + (x-1) w = -1, satisfied by sum n! x^n.
FirstOrderEquation eq_2_1();
/// x^2 w'' + (3x-1) w' + w = 0.
LinearODE eq_1_3();
/// x^2(x-1) w' + (x^2-3x+1) w = x, for sum n! n x^n.
LinearODE eq_3_7();
/// x^3 w'' + x(3x-1) w' + (x+1) w = 0.
LinearODE eq_3_8();
/// x^2 w' + (2x-1) w = -1, for sum n! (n+1) x^n.
FirstOrderEquation eq_3_9();
LinearODE eq_3_10();
/// x^2 w' + (3x-1) w = -2, for sum n! (n+1)(n+2) x^n.
FirstOrderEquation eq_3_11();
LinearODE eq_3_12();
/// First-order equation for Phi_alpha = sum n! (n+alpha) x^n.
FirstOrderEquation eq_3_13(const Rational& alpha);
/// Its homogeneous second-order companion.
LinearODE eq_3_14(const Rational& alpha);
/// x^2 w' + ((k+1)x-1) w = -k!, for sum n! (n+1)...(n+k) x^n.
FirstOrderEquation eq_3_15(unsigned k);
LinearODE eq_3_16(unsigned k);
/// x^2 w'' + ((2k+3)x-1) w' + (k+1)^2 w = 0, for sum n! [(n+1)...(n+k)]^2 x^n.
LinearODE eq_3_17(unsigned k);
/// The printed first-order equation for Phi_{alpha,beta} =
/// sum n! (n+alpha)(n+beta) x^n, transcribed literally.
LinearODE eq_3_18(const Rational& alpha, const Rational& beta);
/// x^2(x^2-3x+1) w' + (x^3-7x^2+6x-1) w = -x(x+1), for sum n! n^2 x^n.
LinearODE eq_3_19();
LinearODE eq_3_20();
/// t^4 q'' + 2t^3 q' + (2t-1) q = t-1.
LinearODE eq_6_4();
/// The two first-order factors of the product equation
/// [x^2u' + (x-1)u + 1][x^2u' + (2x-1)u + 1] = 0.
std::vector<LinearODE> eq_7_4_factors();

/// Equation for Phi_{alpha,beta} derived from first principles: with
/// G = x^beta Phi_alpha one has Phi_{alpha,beta} = x Phi_alpha' + beta
/// Phi_alpha; eliminating Phi_alpha through eq_3_13 yields a first-order
/// equation with polynomial coefficients.
LinearODE derive_phi_alphabeta(const Rational& alpha, const Rational& beta);

}  // namespace equations

/// Solutions of the catalog equations.
namespace solutions {
FactorialSeries f0();                          // sum n! x^n
FactorialSeries n_power(unsigned k);           // sum n! n^k x^n
FactorialSeries shifted_product(unsigned k);   // sum n! (n+1)...(n+k) x^n
FactorialSeries shifted_square(unsigned k);    // sum n! [(n+1)...(n+k)]^2 x^n
FactorialSeries phi_alpha(const Rational& a);  // sum n! (n+alpha) x^n
FactorialSeries phi_alphabeta(const Rational& a, const Rational& b);
}  // namespace solutions

enum class EntryStatus { Verified, PaperDiscrepancy };

struct EquationCatalogEntry {
  std::string key;
  std::map<std::string, Rational> params;
  std::optional<LinearODE> first_order;
  std::optional<LinearODE> second_order;
  FactorialSeries solution;
  EntryStatus status = EntryStatus::Verified;
  std::optional<VerifyResult> first_check;
  std::optional<VerifyResult> second_check;
  /// Populated for entries whose printed equation failed verification and
  /// was re-derived from first principles.
  std::optional<LinearODE> rederived;
  std::optional<VerifyResult> rederived_check;

  std::string params_text() const;
};

struct CatalogOptions {
  long order = 60;
  unsigned k_max = 8;
  std::vector<Rational> alphas = {Rational(0), Rational(1), Rational(2), make_rational(1, 2),
                                  make_rational(-1, 3)};
  std::vector<std::pair<Rational, Rational>> alphabeta_pairs = {
      {Rational(0), Rational(0)},
      {Rational(1), Rational(2)},
      {make_rational(1, 2), make_rational(-1, 3)},
      {Rational(2), Rational(3)},
      {Rational(-1), make_rational(1, 2)}};
};

/// Builds the full catalog; every entry is verified at construction and
/// failures are reported through the entry status, never by aborting.
std::vector<EquationCatalogEntry> catalog(const CatalogOptions& options = {});

}  // namespace padiclab
