#include "bgnf/normalizer.hpp"

#include "bgnf/canonical.hpp"
#include "bgnf/error.hpp"
#include "bgnf/mechanics.hpp"

namespace bgnf {
namespace {

PhasePolynomial pieces_below(const GeneratingFunction& F, int k) {
  PhasePolynomial out(Basis::Real, F.n());
  for (const auto& [d, p] : F.pieces())
    if (d < k) out += in_basis(p, Basis::Real);
  return out;
}

void require_inputs(const GradedSeries& K, const FrequencyVector& nu) {
  if (K.n() != nu.n())
    throw argument_error("Hamiltonian has n = " + std::to_string(K.n()) + " but nu has " + std::to_string(nu.n()) +
                         " entries");
  if (!K.has_quadratic()) throw Error(Error::Category::QuadraticPart, "Hamiltonian has no quadratic part");
}

}  // namespace

PhasePolynomial ordinary_residual(const GradedSeries& K, const GradedSeries& G, const GeneratingFunction& W,
                                  const FrequencyVector& nu, int k) {
  PhasePolynomial w = pieces_below(W, k);
  PhasePolynomial k_poly = in_basis(K.polynomial(nu, k), Basis::Real);
  PhasePolynomial g_poly = in_basis(G.polynomial(nu, k - 1), Basis::Real);
  return (shift_momenta(k_poly, w, k) - shift_positions(g_poly, w, k)).homogeneous_part(k);
}

NormalForm normalize(const GradedSeries& K, const FrequencyVector& nu, int rho) {
  require_inputs(K, nu);
  if (rho < 3) throw argument_error("normalization degree must be at least 3");
  const int n = K.n();
  GradedSeries k_real = K.in_basis(Basis::Real).truncated(rho);
  GradedSeries G(Basis::Real, n, rho, true);
  GeneratingFunction W(GeneratingFunction::Kind::SecondType, Basis::Real, n, rho);
  for (int k = 3; k <= rho; ++k) {
    Decomposition d = decompose(ordinary_residual(k_real, G, W, nu, k), nu);
    G.set_piece(k, d.kernel_part);
    W.set_piece(k, invert_D_on_image(d.image_part, nu));
  }
  return {G.in_basis(K.basis()), W.in_basis(K.basis())};
}

std::optional<NormalFormViolation> find_normal_form_violation(const GradedSeries& G, const FrequencyVector& nu) {
  if (G.n() != nu.n()) throw argument_error("series arity does not match the frequency vector");
  for (const auto& [k, p] : G.pieces()) {
    PhasePolynomial c = in_basis(p, Basis::Complex);
    for (const auto& [e, coef] : c.terms()) {
      if (!nu.is_resonant_monomial(e))
        return NormalFormViolation{k, to_string(PhasePolynomial::monomial(Basis::Complex, G.n(), e, coef))};
    }
  }
  return std::nullopt;
}

bool check_normal_form(const GradedSeries& G, const FrequencyVector& nu) {
  return !find_normal_form_violation(G, nu).has_value();
}

bool verify_defining_equation(const GradedSeries& K, const GradedSeries& G, const GeneratingFunction& W,
                              const FrequencyVector& nu, int rho) {
  PhasePolynomial w = pieces_below(W, rho + 1);
  PhasePolynomial k_poly = in_basis(K.polynomial(nu, rho), Basis::Real);
  PhasePolynomial g_poly = in_basis(G.polynomial(nu, rho), Basis::Real);
  return (shift_positions(g_poly, w, rho) - shift_momenta(k_poly, w, rho)).is_zero();
}

}  // namespace bgnf
