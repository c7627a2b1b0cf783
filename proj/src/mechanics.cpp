#include "bgnf/mechanics.hpp"

#include "bgnf/error.hpp"

namespace bgnf {
namespace {

void require_real(const PhasePolynomial& p) {
  if (p.basis() != Basis::Real) throw argument_error("expected a real-basis polynomial");
}

}  // namespace

std::vector<PhasePolynomial> identity_images(int n) {
  std::vector<PhasePolynomial> out;
  for (int s = 0; s < 2 * n; ++s) out.push_back(PhasePolynomial::variable(Basis::Real, n, s));
  return out;
}

PhasePolynomial shift_momenta(const PhasePolynomial& P, const PhasePolynomial& pieces, int rho) {
  require_real(P);
  require_real(pieces);
  const int n = P.n();
  auto images = identity_images(n);
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(n + j)] += partial(pieces, j).truncated(rho - 1);
  return substitute_truncated(P, images, rho);
}

PhasePolynomial shift_positions(const PhasePolynomial& P, const PhasePolynomial& pieces, int rho) {
  require_real(P);
  require_real(pieces);
  const int n = P.n();
  auto images = identity_images(n);
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] += partial(pieces, n + j).truncated(rho - 1);
  return substitute_truncated(P, images, rho);
}

PhasePolynomial poisson_bracket(const PhasePolynomial& a, const PhasePolynomial& b) {
  require_compatible(a, b);
  require_real(a);
  const int n = a.n();
  PhasePolynomial out(Basis::Real, n);
  for (int j = 0; j < n; ++j) out += partial(a, j) * partial(b, n + j) - partial(a, n + j) * partial(b, j);
  return out;
}

}  // namespace bgnf
