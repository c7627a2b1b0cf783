#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "bgnf/canonical.hpp"
#include "bgnf/frequency.hpp"
#include "bgnf/linalg.hpp"
#include "bgnf/mechanics.hpp"
#include "bgnf/series.hpp"
#include "bgnf/text.hpp"

namespace bgnf::testing {

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }
  Rational rational(int max_num = 5, int max_den = 4) {
    int num = 0;
    while (num == 0) num = integer(-max_num, max_num);
    return Rational(num, integer(1, max_den));
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline PhasePolynomial parse(const std::string& text, int n = 2, Basis basis = Basis::Real) {
  ParseOptions o;
  o.n = n;
  o.basis = basis;
  return parse_polynomial(text, o);
}

/// Homogeneous degree-k real-basis polynomial with rational coefficients
/// on about `terms` random monomials.
inline PhasePolynomial random_homogeneous(Random& rng, int n, int k, int terms) {
  auto monomials = monomials_of_degree(2 * n, k);
  PhasePolynomial out(Basis::Real, n);
  for (int t = 0; t < terms; ++t)
    out.add_term(monomials[static_cast<std::size_t>(rng.integer(0, static_cast<int>(monomials.size()) - 1))],
                 rng.rational());
  return out;
}

/// Random real polynomial of degree 0..max_degree.
inline PhasePolynomial random_polynomial(Random& rng, int n, int max_degree, int terms) {
  PhasePolynomial out(Basis::Real, n);
  for (int t = 0; t < terms; ++t) out += random_homogeneous(rng, n, rng.integer(0, max_degree), 1);
  return out;
}

inline GradedSeries random_hamiltonian(Random& rng, const FrequencyVector& nu, int rho, int terms = 4) {
  GradedSeries out(Basis::Real, nu.n(), rho, true);
  for (int k = 3; k <= rho; ++k) out.set_piece(k, random_homogeneous(rng, nu.n(), k, terms));
  return out;
}

inline GradedSeries random_normal_form(Random& rng, const FrequencyVector& nu, int rho, int terms = 4) {
  GradedSeries out(Basis::Real, nu.n(), rho, true);
  for (int k = 3; k <= rho; ++k)
    out.set_piece(k, decompose(random_homogeneous(rng, nu.n(), k, terms), nu).kernel_part);
  return out;
}

inline PhasePolynomial random_image(Random& rng, const FrequencyVector& nu, int k, int terms = 4) {
  return decompose(random_homogeneous(rng, nu.n(), k, terms), nu).image_part;
}

/// Matrix of D on V_k in the real monomial basis, from the action on each
/// monomial q^a eta^b written out by hand (independent of apply_D).
inline RationalMatrix d_matrix(int k, const FrequencyVector& nu) {
  const int n = nu.n();
  auto basis = monomials_of_degree(2 * n, k);
  std::map<ExponentVector, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  RationalMatrix m(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const ExponentVector& e = basis[col];
    for (int j = 0; j < n; ++j) {
      if (e[n + j] > 0) {  // nu_j q_j d/deta_j
        ExponentVector f = e;
        f.set(j, e[j] + 1);
        f.set(n + j, e[n + j] - 1);
        m[index.at(f)][col] += nu[j] * Rational(e[n + j]);
      }
      if (e[j] > 0) {  // -nu_j eta_j d/dq_j
        ExponentVector f = e;
        f.set(j, e[j] - 1);
        f.set(n + j, e[n + j] + 1);
        m[index.at(f)][col] -= nu[j] * Rational(e[j]);
      }
    }
  }
  return m;
}

/// sum_j ( nu_j/2 (dW3/dq_j)^2 + dK3/dp_j dW3/dq_j - nu_j/2 (dW3/deta_j)^2 - dG3/dxi_j dW3/deta_j ).
inline PhasePolynomial phi4_closed_form(const PhasePolynomial& K3, const PhasePolynomial& W3,
                                        const PhasePolynomial& G3, const FrequencyVector& nu) {
  const int n = nu.n();
  PhasePolynomial out(Basis::Real, n);
  for (int j = 0; j < n; ++j) {
    PhasePolynomial wq = partial(W3, j), we = partial(W3, n + j);
    ParamScalar half_nu(nu[j] * Rational(1, 2));
    out += wq * wq * half_nu + partial(K3, n + j) * wq - we * we * half_nu - partial(G3, j) * we;
  }
  return out;
}

/// Same shape with (H3, S3, G3): the degree-4 inverse residual.
inline PhasePolynomial psi4_closed_form(const PhasePolynomial& H3, const PhasePolynomial& S3,
                                        const PhasePolynomial& G3, const FrequencyVector& nu) {
  return phi4_closed_form(H3, S3, G3, nu);
}

/// Images (q, eta + dF/dq) and (q + dF/deta, eta) for the pieces F of a
/// generating function.
struct ShiftImages {
  std::vector<PhasePolynomial> momenta, positions;
};

inline ShiftImages shift_images(const PhasePolynomial& f, int n) {
  ShiftImages out{identity_images(n), identity_images(n)};
  for (int j = 0; j < n; ++j) {
    out.momenta[static_cast<std::size_t>(n + j)] += partial(f, j);
    out.positions[static_cast<std::size_t>(j)] += partial(f, n + j);
  }
  return out;
}

/// H^(r) from H^(r)(x, y + dS/dx) = H^(r-1)(x + dS/dy, y), one degree at a
/// time by plain substitution.
inline GradedSeries stage_by_substitution(const GradedSeries& prev, const PhasePolynomial& s,
                                          const FrequencyVector& nu, int rho) {
  ShiftImages img = shift_images(s, nu.n());
  PhasePolynomial target = substitute_truncated(prev.polynomial(nu, rho), img.positions, rho);
  GradedSeries cur(Basis::Real, nu.n(), rho, true);
  for (int k = 3; k <= rho; ++k) {
    PhasePolynomial known = substitute_truncated(cur.polynomial(nu, k), img.momenta, k).homogeneous_part(k);
    cur.set_piece(k, target.homogeneous_part(k) - known);
  }
  return cur;
}

}  // namespace bgnf::testing
