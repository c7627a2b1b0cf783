#include "bgnf/compose.hpp"

#include <stdexcept>

#include "bgnf/error.hpp"
#include "bgnf/mechanics.hpp"

namespace bgnf {
namespace {

void require_third(const GeneratingFunction& f) {
  if (f.kind() != GeneratingFunction::Kind::ThirdType)
    throw argument_error("composition expects third-type generating functions");
}

PhasePolynomial real_pieces(const GeneratingFunction& f, int rho) {
  PhasePolynomial out(Basis::Real, f.n());
  for (const auto& [k, p] : f.pieces())
    if (k <= rho) out += in_basis(p, Basis::Real);
  return out;
}

GeneratingFunction from_polynomial(const PhasePolynomial& s, Basis basis, int rho) {
  GeneratingFunction out(GeneratingFunction::Kind::ThirdType, basis, s.n(), rho);
  for (int k = 3; k <= rho; ++k) out.set_piece(k, in_basis(s.homogeneous_part(k), basis));
  return out;
}

}  // namespace

GeneratingFunction compose_pair(const GeneratingFunction& f1, const GeneratingFunction& f2, int rho) {
  require_third(f1);
  require_third(f2);
  if (f1.n() != f2.n()) throw argument_error("generating functions have different n");
  if (rho < 3) throw argument_error("composition degree must be at least 3");
  const int n = f1.n();
  PhasePolynomial s1 = real_pieces(f1, rho);
  PhasePolynomial s2 = real_pieces(f2, rho);
  std::vector<PhasePolynomial> ds1_du, ds2_dv;
  for (int j = 0; j < n; ++j) {
    ds1_du.push_back(partial(s1, j));
    ds2_dv.push_back(partial(s2, n + j));
  }
  // Arguments of s1: (u~, v0); arguments of s2: (u2, v~).
  std::vector<PhasePolynomial> args1 = identity_images(n);
  std::vector<PhasePolynomial> args2 = identity_images(n);
  for (int iteration = 0;; ++iteration) {
    if (iteration > rho + 2) throw std::logic_error("fixed-point iteration did not stabilise");
    std::vector<PhasePolynomial> next1 = args1;
    std::vector<PhasePolynomial> next2 = args2;
    for (int j = 0; j < n; ++j) {
      auto u = static_cast<std::size_t>(j);
      auto v = static_cast<std::size_t>(n + j);
      next1[u] = PhasePolynomial::variable(Basis::Real, n, j) + substitute_truncated(ds2_dv[u], args2, rho - 1);
      next2[v] = PhasePolynomial::variable(Basis::Real, n, n + j) + substitute_truncated(ds1_du[u], args1, rho - 1);
    }
    if (next1 == args1 && next2 == args2) break;
    args1 = std::move(next1);
    args2 = std::move(next2);
  }
  PhasePolynomial s = substitute_truncated(s1, args1, rho) + substitute_truncated(s2, args2, rho);
  for (int j = 0; j < n; ++j) {
    PhasePolynomial du = args1[static_cast<std::size_t>(j)] - PhasePolynomial::variable(Basis::Real, n, j);
    PhasePolynomial dv = args2[static_cast<std::size_t>(n + j)] - PhasePolynomial::variable(Basis::Real, n, n + j);
    s -= mul_truncated(du, dv, rho);
  }
  return from_polynomial(s, f1.basis(), rho);
}

GeneratingFunction compose_chain(const std::map<int, PhasePolynomial>& pieces, int n, int rho, Basis basis) {
  if (rho < 3) throw argument_error("composition degree must be at least 3");
  auto stage = [&](int h) {
    GeneratingFunction f(GeneratingFunction::Kind::ThirdType, basis, n, rho);
    auto it = pieces.find(h);
    if (it != pieces.end() && !it->second.is_zero()) {
      if (!it->second.is_homogeneous(h))
        throw argument_error("chain piece at index " + std::to_string(h) + " is not homogeneous of that degree");
      f.set_piece(h, in_basis(it->second, basis));
    }
    return f;
  };
  for (const auto& [h, p] : pieces)
    if (h < 3 || h > rho) throw argument_error("chain piece index " + std::to_string(h) + " outside 3.." + std::to_string(rho));
  GeneratingFunction total = stage(3);
  for (int h = 4; h <= rho; ++h) total = compose_pair(total, stage(h), rho);
  return total;
}

GradedSeries transform_hamiltonian(const GradedSeries& H, const GeneratingFunction& S, const FrequencyVector& nu,
                                   int rho) {
  require_third(S);
  if (H.n() != S.n() || H.n() != nu.n()) throw argument_error("Hamiltonian and generating function have different n");
  if (!H.has_quadratic()) throw Error(Error::Category::QuadraticPart, "Hamiltonian has no quadratic part");
  const int n = H.n();
  PhasePolynomial s = real_pieces(S, rho);
  PhasePolynomial old_side = shift_positions(in_basis(H.polynomial(nu, rho), Basis::Real), s, rho);
  GradedSeries out(Basis::Real, n, rho, true);
  for (int k = 3; k <= rho; ++k) {
    PhasePolynomial known = shift_momenta(out.polynomial(nu, k - 1), s, k).homogeneous_part(k);
    out.set_piece(k, old_side.homogeneous_part(k) - known);
  }
  return out.in_basis(H.basis());
}

GeneratingFunction inverse_generating_function(const GeneratingFunction& S, int rho) {
  require_third(S);
  GeneratingFunction T(GeneratingFunction::Kind::ThirdType, Basis::Real, S.n(), rho);
  GeneratingFunction s = S.in_basis(Basis::Real).truncated(rho);
  for (int k = 3; k <= rho; ++k) {
    GeneratingFunction c = compose_pair(s.truncated(k), T.truncated(k), k);
    T.set_piece(k, -c.piece(k));
  }
  return T.in_basis(S.basis());
}

std::vector<PhasePolynomial> explicit_map(const GeneratingFunction& S, int rho) {
  require_third(S);
  const int n = S.n();
  PhasePolynomial s = real_pieces(S, S.truncation());
  // x = x0 - dS/dy(x, y0), y = y0 + dS/dx(x, y0).
  std::vector<PhasePolynomial> args = identity_images(n);
  for (int iteration = 0;; ++iteration) {
    if (iteration > rho + 2) throw std::logic_error("fixed-point iteration did not stabilise");
    std::vector<PhasePolynomial> next = args;
    for (int j = 0; j < n; ++j)
      next[static_cast<std::size_t>(j)] =
          PhasePolynomial::variable(Basis::Real, n, j) - substitute_truncated(partial(s, n + j), args, rho);
    if (next == args) break;
    args = std::move(next);
  }
  std::vector<PhasePolynomial> out = args;
  for (int j = 0; j < n; ++j)
    out[static_cast<std::size_t>(n + j)] =
        PhasePolynomial::variable(Basis::Real, n, n + j) + substitute_truncated(partial(s, j), args, rho);
  return out;
}

bool preserves_brackets(const GeneratingFunction& S, int through) {
  const int n = S.n();
  std::vector<PhasePolynomial> m = explicit_map(S, through + 1);
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = a + 1; b < 2 * n; ++b) {
      PhasePolynomial br = poisson_bracket(m[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(b)]);
      if (b == a + n) br -= PhasePolynomial::constant(Basis::Real, n, 1);
      if (!br.truncated(through).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace bgnf
