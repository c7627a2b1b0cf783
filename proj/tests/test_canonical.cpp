#include "bgnf/canonical.hpp"
#include "bgnf/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bgnf;
using bgnf::testing::parse;
using bgnf::testing::Random;

namespace {

// Coefficient vector of a rational homogeneous polynomial on the monomial basis.
std::vector<Rational> coordinates(const PhasePolynomial& p, int k) {
  auto basis = monomials_of_degree(2 * p.n(), k);
  std::vector<Rational> out;
  for (const auto& m : basis) out.push_back(p.coefficient(m).constant_value()->re);
  return out;
}

std::vector<Rational> times(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

}  // namespace

TEST_CASE("D on small examples") {
  FrequencyVector nu{1, 1};
  CHECK(apply_D(parse("q1"), nu) == parse("-eta1"));
  CHECK(apply_D(parse("eta2"), nu) == parse("q2"));
  CHECK(apply_D(parse("q1^2 + eta1^2"), nu).is_zero());
  PhasePolynomial z = parse("z1^2*zb2", 2, Basis::Complex);
  CHECK(apply_D(z, nu) == z * ParamScalar::imaginary_unit());
  CHECK(to_real(apply_D(z, nu)) == apply_D(to_real(z), nu));
}

TEST_CASE("D agrees with its matrix") {
  Random rng(31);
  for (const FrequencyVector& nu : {FrequencyVector{1, 1}, FrequencyVector{1, 2}, FrequencyVector{2, 3}}) {
    for (int k = 1; k <= 5; ++k) {
      PhasePolynomial p = bgnf::testing::random_homogeneous(rng, 2, k, 6);
      CHECK(coordinates(apply_D(p, nu), k) == times(bgnf::testing::d_matrix(k, nu), coordinates(p, k)));
    }
  }
}

TEST_CASE("kernel dimension equals the nullspace of D") {
  for (const FrequencyVector& nu : {FrequencyVector{1, 1}, FrequencyVector{1, 2}, FrequencyVector{2, 3}}) {
    for (int k = 1; k <= 6; ++k) {
      RationalMatrix m = bgnf::testing::d_matrix(k, nu);
      int cols = static_cast<int>(m.size());
      CHECK(kernel_basis(k, 2, nu).size() == nullspace(m, cols).size());
      CHECK(2 * image_representatives(k, 2, nu).size() + kernel_basis(k, 2, nu).size() == m.size());
    }
  }
}

TEST_CASE("one-to-one resonance") {
  FrequencyVector nu{1, 1};
  for (int k : {1, 3, 5}) CHECK(kernel_basis(k, 2, nu).empty());
  CHECK(kernel_basis(4, 2, nu).size() == 9);
  CHECK(image_representatives(3, 2, nu).size() == 10);
  CHECK(image_representatives(4, 2, nu).size() == 13);
  CHECK(kernel_basis(2, 2, nu).size() == 4);
}

TEST_CASE("image representatives have positive eigenvalue") {
  FrequencyVector nu{1, 2};
  for (int k = 2; k <= 5; ++k)
    for (const auto& e : image_representatives(k, 2, nu)) {
      CHECK(nu.eigenvalue_weight(e) > 0);
      CHECK(conjugate_exponent(conjugate_exponent(e)) == e);
    }
}

TEST_CASE("image and kernel decomposition") {
  Random rng(32);
  for (const FrequencyVector& nu : {FrequencyVector{1, 1}, FrequencyVector{1, 2}, FrequencyVector{2, 3}}) {
    for (int k = 2; k <= 6; ++k) {
      PhasePolynomial p = bgnf::testing::random_homogeneous(rng, 2, k, 8);
      Decomposition d = decompose(p, nu);
      CHECK(d.image_part + d.kernel_part == p);
      CHECK(apply_D(d.kernel_part, nu).is_zero());
      CHECK(in_kernel(d.kernel_part, nu));
      CHECK(is_real(d.image_part));
      PhasePolynomial w = invert_D_on_image(d.image_part, nu);
      CHECK(apply_D(w, nu) == d.image_part);
      CHECK(decompose(w, nu).kernel_part.is_zero());
      CHECK(decompose(to_complex(p), nu).kernel_part == to_complex(d.kernel_part));
    }
  }
}

TEST_CASE("invert D rejects kernel components") {
  FrequencyVector nu{1, 1};
  CHECK_THROWS_AS(invert_D_on_image(parse("q1^2 + eta1^2"), nu), Error);
  CHECK_THROWS_AS(decompose(parse("q1 + q1^2"), nu), Error);
}
