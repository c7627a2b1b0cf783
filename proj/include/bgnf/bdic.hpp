#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "bgnf/frequency.hpp"
#include "bgnf/phase_polynomial.hpp"
#include "bgnf/series.hpp"

namespace bgnf {

/// Nullspace basis for (alpha, beta, beta', gamma, gamma') of the
/// Bertrand-Darboux identity.
struct BdicWitness {
  std::vector<std::array<Rational, 5>> basis;
  bool nontrivial() const noexcept { return !basis.empty(); }
};

/// Standard: the second bracket is alpha q2^2 - alpha q1^2 + beta q2 - beta' q1 + gamma'.
/// AsPrinted: the same with -gamma q1^2 in place of -alpha q1^2.
enum class BdicForm { Standard, AsPrinted };

/// Assembles the Bertrand-Darboux identity for F = p^2/2 + V(q) (n = 2) as a
/// linear system in (alpha, beta, beta', gamma, gamma') and returns its exact
/// nullspace. V must not depend on the momenta; parameters must all be
/// given numeric values in `instance`.
BdicWitness bdic_general(const PhasePolynomial& V, const std::map<SymbolId, Rational>& instance = {},
                         BdicForm form = BdicForm::Standard);

/// The Bertrand-Darboux expression for one choice of the five constants.
PhasePolynomial bdic_expression(const PhasePolynomial& V, const std::array<ParamScalar, 5>& constants,
                                BdicForm form = BdicForm::Standard);

using CubicCoefficients = std::array<ParamScalar, 4>;
using QuarticCoefficients = std::array<ParamScalar, 5>;

struct PhocpReport {
  ParamScalar residual;           // 3(f1 f3 + f2 f4) - (f2^2 + f3^2)
  bool branch_b = false;          // f1 = 2 f3, f2 = f4 = 0
  bool branch_c = false;          // f4 = 2 f2, f1 = f3 = 0
  std::optional<bool> satisfied;  // decided for numeric input only
};

struct PhoqpReport {
  std::array<ParamScalar, 3> residuals;
  bool branch_a = false;  // g3 = 2 g1 = 2 g5, g2 = g4 = 0
  std::optional<bool> satisfied;
};

PhocpReport bdic_phocp(const CubicCoefficients& f);
PhoqpReport bdic_phoqp(const QuarticCoefficients& g);
QuarticCoefficients map_g_from_f(const CubicCoefficients& f);

/// f1 q1^3 + f2 q1^2 q2 + f3 q1 q2^2 + f4 q2^3 (real basis, n = 2).
PhasePolynomial cubic_potential(const CubicCoefficients& f);
/// g1 q1^4 + g2 q1^3 q2 + g3 q1^2 q2^2 + g4 q1 q2^3 + g5 q2^4.
PhasePolynomial quartic_potential(const QuarticCoefficients& g);
/// (q1^2 + q2^2)/2.
PhasePolynomial harmonic_potential();

/// First degree (3 or 4) where the degree-4 normal forms of the cubic and the
/// mapped quartic oscillator differ; nullopt if they agree.
std::optional<int> normal_form_mismatch(const CubicCoefficients& f);

/// Requires a vanishing BDIC-PHOCP residual; true iff both oscillators share
/// their degree-4 normal form.
bool verify_shared_normal_form(const CubicCoefficients& f);

}  // namespace bgnf
