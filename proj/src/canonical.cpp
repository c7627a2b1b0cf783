#include "bgnf/canonical.hpp"

#include <algorithm>

#include "bgnf/error.hpp"

namespace bgnf {
namespace {

void require_arity(const PhasePolynomial& p, const FrequencyVector& nu) {
  if (p.n() != nu.n())
    throw argument_error("polynomial has n = " + std::to_string(p.n()) + " but nu has " + std::to_string(nu.n()) +
                         " entries");
}

PhasePolynomial apply_D_complex(const PhasePolynomial& p, const FrequencyVector& nu) {
  PhasePolynomial out(Basis::Complex, p.n());
  for (const auto& [e, c] : p.terms()) {
    Rational w = nu.eigenvalue_weight(e);
    if (!w.is_zero()) out.add_term(e, c * GaussianRational(Rational(0), w));
  }
  return out;
}

}  // namespace

ExponentVector conjugate_exponent(const ExponentVector& e) {
  const int n = e.size() / 2;
  ExponentVector out(e.size());
  for (int j = 0; j < n; ++j) {
    out.set(j, e[n + j]);
    out.set(n + j, e[j]);
  }
  return out;
}

PhasePolynomial apply_D(const PhasePolynomial& p, const FrequencyVector& nu) {
  require_arity(p, nu);
  if (p.basis() == Basis::Complex) return apply_D_complex(p, nu);
  const int n = p.n();
  PhasePolynomial out(Basis::Real, n);
  for (int j = 0; j < n; ++j) {
    PhasePolynomial q = PhasePolynomial::variable(Basis::Real, n, j);
    PhasePolynomial eta = PhasePolynomial::variable(Basis::Real, n, n + j);
    out += (q * partial(p, n + j) - eta * partial(p, j)) * ParamScalar(nu[j]);
  }
  return out;
}

Decomposition decompose(const PhasePolynomial& p, const FrequencyVector& nu) {
  require_arity(p, nu);
  if (!p.is_zero() && p.low_degree() != p.degree())
    throw argument_error("decompose expects a homogeneous polynomial");
  PhasePolynomial c = in_basis(p, Basis::Complex);
  PhasePolynomial kernel(Basis::Complex, p.n());
  PhasePolynomial image(Basis::Complex, p.n());
  for (const auto& [e, coef] : c.terms()) (nu.is_resonant_monomial(e) ? kernel : image).add_term(e, coef);
  return {in_basis(image, p.basis()), in_basis(kernel, p.basis())};
}

PhasePolynomial invert_D_on_image(const PhasePolynomial& p, const FrequencyVector& nu) {
  require_arity(p, nu);
  PhasePolynomial c = in_basis(p, Basis::Complex);
  PhasePolynomial out(Basis::Complex, p.n());
  for (const auto& [e, coef] : c.terms()) {
    Rational w = nu.eigenvalue_weight(e);
    if (w.is_zero())
      throw precondition_error("cannot invert D: input has a kernel component on " +
                               to_string(PhasePolynomial::monomial(Basis::Complex, p.n(), e)));
    out.add_term(e, coef * GaussianRational(Rational(0), -Rational(1) / w));
  }
  return in_basis(out, p.basis());
}

bool in_kernel(const PhasePolynomial& p, const FrequencyVector& nu) { return apply_D(p, nu).is_zero(); }

std::vector<ExponentVector> kernel_basis(int k, int n, const FrequencyVector& nu) {
  if (n != nu.n()) throw argument_error("n does not match the frequency vector");
  std::vector<ExponentVector> out;
  for (const auto& e : monomials_of_degree(2 * n, k))
    if (nu.is_resonant_monomial(e)) out.push_back(e);
  return out;
}

std::vector<ExponentVector> image_representatives(int k, int n, const FrequencyVector& nu) {
  if (n != nu.n()) throw argument_error("n does not match the frequency vector");
  std::vector<ExponentVector> out;
  for (const auto& e : monomials_of_degree(2 * n, k))
    if (nu.eigenvalue_sign(e) > 0) out.push_back(e);
  auto key = [n](const ExponentVector& e) {
    std::vector<int> v;
    int za = 0;
    for (int j = 0; j < n; ++j) za += e[j];
    v.push_back(za);
    for (int s = 0; s < 2 * n; ++s) v.push_back(e[s]);
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) > key(b); });
  return out;
}

}  // namespace bgnf
