#include "bgnf/bdic.hpp"

#include "bgnf/error.hpp"
#include "bgnf/linalg.hpp"
#include "bgnf/normalizer.hpp"

namespace bgnf {
namespace {

PhasePolynomial q_monomial(int a, int b) {
  return PhasePolynomial::monomial(Basis::Real, 2, ExponentVector{a, b, 0, 0});
}

bool is_zero_scalar(const ParamScalar& s) { return s.is_zero(); }

std::optional<bool> decide(bool numeric, bool holds) {
  if (!numeric) return std::nullopt;
  return holds;
}

template <std::size_t N>
bool all_constant(const std::array<ParamScalar, N>& xs) {
  for (const auto& x : xs)
    if (!x.is_constant()) return false;
  return true;
}

}  // namespace

PhasePolynomial bdic_expression(const PhasePolynomial& V, const std::array<ParamScalar, 5>& c, BdicForm form) {
  if (V.basis() != Basis::Real || V.n() != 2) throw argument_error("BDIC needs a real-basis potential with n = 2");
  for (const auto& [e, coef] : V.terms())
    if (e[2] != 0 || e[3] != 0) throw argument_error("potential depends on the momenta");
  const auto& [alpha, beta, beta_p, gamma, gamma_p] = c;
  PhasePolynomial q1 = q_monomial(1, 0), q2 = q_monomial(0, 1);
  PhasePolynomial one = q_monomial(0, 0);
  PhasePolynomial v1 = partial(V, 0), v2 = partial(V, 1);
  PhasePolynomial v11 = partial(v1, 0), v22 = partial(v2, 1), v12 = partial(v1, 1);
  const ParamScalar& q1_squared = form == BdicForm::Standard ? alpha : gamma;
  PhasePolynomial first = q1 * q2 * (ParamScalar(-2) * alpha) - q2 * beta_p - q1 * beta + one * gamma;
  PhasePolynomial second = q2 * q2 * alpha - q1 * q1 * q1_squared + q2 * beta - q1 * beta_p + one * gamma_p;
  PhasePolynomial third = q2 * (ParamScalar(6) * alpha) + one * (ParamScalar(3) * beta);
  PhasePolynomial fourth = q1 * (ParamScalar(6) * alpha) + one * (ParamScalar(3) * beta_p);
  return (v22 - v11) * first + v12 * second * ParamScalar(2) + v1 * third - v2 * fourth;
}

BdicWitness bdic_general(const PhasePolynomial& V, const std::map<SymbolId, Rational>& instance, BdicForm form) {
  std::map<SymbolId, ParamScalar> values;
  for (const auto& [s, v] : instance) values.emplace(s, ParamScalar(v));
  PhasePolynomial v = substitute_parameters(V, values);
  for (const auto& [e, coef] : v.terms()) {
    auto c = coef.constant_value();
    if (!c) throw argument_error("potential has symbolic parameters without instance values");
    if (!c->is_real()) throw argument_error("potential has a non-real coefficient");
  }
  std::array<PhasePolynomial, 5> columns;
  for (std::size_t u = 0; u < 5; ++u) {
    std::array<ParamScalar, 5> c{};
    c[u] = 1;
    columns[u] = bdic_expression(v, c, form);
  }
  std::map<ExponentVector, std::size_t> rows;
  for (const auto& col : columns)
    for (const auto& [e, coef] : col.terms()) rows.try_emplace(e, rows.size());
  RationalMatrix m(rows.size(), std::vector<Rational>(5));
  for (std::size_t u = 0; u < 5; ++u)
    for (const auto& [e, coef] : columns[u].terms()) m[rows.at(e)][u] = coef.constant_value()->re;
  BdicWitness out;
  for (const auto& vec : nullspace(std::move(m), 5)) out.basis.push_back({vec[0], vec[1], vec[2], vec[3], vec[4]});
  return out;
}

PhocpReport bdic_phocp(const CubicCoefficients& f) {
  const auto& [f1, f2, f3, f4] = f;
  PhocpReport r;
  r.residual = ParamScalar(3) * (f1 * f3 + f2 * f4) - (f2 * f2 + f3 * f3);
  r.branch_b = is_zero_scalar(f1 - ParamScalar(2) * f3) && f2.is_zero() && f4.is_zero();
  r.branch_c = is_zero_scalar(f4 - ParamScalar(2) * f2) && f1.is_zero() && f3.is_zero();
  r.satisfied = decide(all_constant(f), r.residual.is_zero() || r.branch_b || r.branch_c);
  return r;
}

PhoqpReport bdic_phoqp(const QuarticCoefficients& g) {
  const auto& [g1, g2, g3, g4, g5] = g;
  PhoqpReport r;
  r.residuals[0] = ParamScalar(9) * g2 * g2 + ParamScalar(4) * g3 * g3 - ParamScalar(24) * g1 * g3 -
                   ParamScalar(9) * g2 * g4;
  r.residuals[1] = ParamScalar(9) * g4 * g4 + ParamScalar(4) * g3 * g3 - ParamScalar(24) * g3 * g5 -
                   ParamScalar(9) * g2 * g4;
  r.residuals[2] = (g2 + g4) * g3 - ParamScalar(6) * (g1 * g4 + g2 * g5);
  r.branch_a = is_zero_scalar(g3 - ParamScalar(2) * g1) && is_zero_scalar(g3 - ParamScalar(2) * g5) &&
               g2.is_zero() && g4.is_zero();
  bool all_zero = r.residuals[0].is_zero() && r.residuals[1].is_zero() && r.residuals[2].is_zero();
  r.satisfied = decide(all_constant(g), all_zero || r.branch_a);
  return r;
}

QuarticCoefficients map_g_from_f(const CubicCoefficients& f) {
  const auto& [f1, f2, f3, f4] = f;
  auto c = [](long a, long b) { return ParamScalar(Rational(a, b)); };
  return {c(-5, 18) * (ParamScalar(9) * f1 * f1 + f2 * f2), c(-10, 9) * (ParamScalar(3) * f1 + f3) * f2,
          c(-5, 3) * (f2 * f2 + f3 * f3), c(-10, 9) * (ParamScalar(3) * f4 + f2) * f3,
          c(-5, 18) * (ParamScalar(9) * f4 * f4 + f3 * f3)};
}

PhasePolynomial cubic_potential(const CubicCoefficients& f) {
  PhasePolynomial out(Basis::Real, 2);
  for (int a = 3; a >= 0; --a) out += q_monomial(a, 3 - a) * f[static_cast<std::size_t>(3 - a)];
  return out;
}

PhasePolynomial quartic_potential(const QuarticCoefficients& g) {
  PhasePolynomial out(Basis::Real, 2);
  for (int a = 4; a >= 0; --a) out += q_monomial(a, 4 - a) * g[static_cast<std::size_t>(4 - a)];
  return out;
}

PhasePolynomial harmonic_potential() { return (q_monomial(2, 0) + q_monomial(0, 2)) * ParamScalar(Rational(1, 2)); }

std::optional<int> normal_form_mismatch(const CubicCoefficients& f) {
  FrequencyVector nu{1, 1};
  GradedSeries cubic(Basis::Real, 2, 4, true);
  cubic.set_piece(3, cubic_potential(f));
  GradedSeries quartic(Basis::Real, 2, 4, true);
  quartic.set_piece(4, quartic_potential(map_g_from_f(f)));
  GradedSeries a = normalize(cubic, nu, 4).G;
  GradedSeries b = normalize(quartic, nu, 4).G;
  for (int k = 3; k <= 4; ++k)
    if (a.piece(k) != b.piece(k)) return k;
  return std::nullopt;
}

bool verify_shared_normal_form(const CubicCoefficients& f) {
  if (!bdic_phocp(f).residual.is_zero())
    throw precondition_error("coefficients do not satisfy 3(f1 f3 + f2 f4) - (f2^2 + f3^2) = 0");
  return !normal_form_mismatch(f).has_value();
}

}  // namespace bgnf
