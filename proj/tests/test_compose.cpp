#include "bgnf/compose.hpp"
#include "bgnf/restorer.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bgnf;
using bgnf::testing::parse;
using bgnf::testing::Random;

namespace {

GeneratingFunction random_third_type(Random& rng, int n, int rho) {
  GeneratingFunction s(GeneratingFunction::Kind::ThirdType, Basis::Real, n, rho);
  for (int k = 3; k <= rho; ++k) s.set_piece(k, bgnf::testing::random_homogeneous(rng, n, k, 3));
  return s;
}

PhasePolynomial sum_of_pieces(const GeneratingFunction& s) {
  PhasePolynomial out(Basis::Real, s.n());
  for (const auto& [k, p] : s.pieces()) out += p;
  return out;
}

// Checks x = x0 - dS/dy(x, y0) and y = y0 + dS/dx(x, y0) for the returned map.
bool solves_implicit_relations(const GeneratingFunction& S, const std::vector<PhasePolynomial>& map, int rho) {
  const int n = S.n();
  PhasePolynomial s = sum_of_pieces(S);
  std::vector<PhasePolynomial> at(2 * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    at[static_cast<std::size_t>(j)] = map[static_cast<std::size_t>(j)];
    at[static_cast<std::size_t>(n + j)] = PhasePolynomial::variable(Basis::Real, n, n + j);
  }
  for (int j = 0; j < n; ++j) {
    PhasePolynomial x0 = PhasePolynomial::variable(Basis::Real, n, j);
    PhasePolynomial y0 = PhasePolynomial::variable(Basis::Real, n, n + j);
    if (map[static_cast<std::size_t>(j)] != x0 - substitute_truncated(partial(s, n + j), at, rho)) return false;
    if (map[static_cast<std::size_t>(n + j)] != y0 + substitute_truncated(partial(s, j), at, rho)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("explicit map solves the implicit relations") {
  Random rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    int rho = rng.integer(3, 6);
    GeneratingFunction s = random_third_type(rng, 2, rho);
    CHECK(solves_implicit_relations(s, explicit_map(s, rho), rho));
  }
}

TEST_CASE("composition is the composite map") {
  Random rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    int rho = rng.integer(3, 6);
    GeneratingFunction s1 = random_third_type(rng, 2, rho), s2 = random_third_type(rng, 2, rho);
    auto m1 = explicit_map(s1, rho), m2 = explicit_map(s2, rho);
    auto m12 = explicit_map(compose_pair(s1, s2, rho), rho);
    // A degree-rho generating function fixes its map through degree rho - 1.
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(m12[i].truncated(rho - 1) == substitute_truncated(m2[i], m1, rho - 1));
  }
}

TEST_CASE("composition is associative") {
  Random rng(63);
  for (int trial = 0; trial < 6; ++trial) {
    int rho = rng.integer(3, 6);
    GeneratingFunction a = random_third_type(rng, 2, rho), b = random_third_type(rng, 2, rho),
                       c = random_third_type(rng, 2, rho);
    CHECK(compose_pair(compose_pair(a, b, rho), c, rho) == compose_pair(a, compose_pair(b, c, rho), rho));
  }
}

TEST_CASE("identity and inverse") {
  Random rng(64);
  for (int trial = 0; trial < 6; ++trial) {
    int rho = rng.integer(3, 6);
    GeneratingFunction s = random_third_type(rng, 2, rho);
    GeneratingFunction id(GeneratingFunction::Kind::ThirdType, Basis::Real, 2, rho);
    CHECK(compose_pair(s, id, rho) == s);
    CHECK(compose_pair(id, s, rho) == s);
    GeneratingFunction inv = inverse_generating_function(s, rho);
    CHECK(compose_pair(s, inv, rho).is_identity());
    CHECK(compose_pair(inv, s, rho).is_identity());
  }
}

TEST_CASE("transformations are symplectic") {
  Random rng(65);
  for (int trial = 0; trial < 8; ++trial) {
    int rho = rng.integer(3, 6);
    GeneratingFunction s = random_third_type(rng, 2, rho);
    CHECK(preserves_brackets(s, rho - 1));
    auto m = explicit_map(s, rho);
    // The lowest possible defect sits at degree rho - 1.
    PhasePolynomial b = poisson_bracket(m[0], m[2]).truncated(rho - 2) - PhasePolynomial::constant(Basis::Real, 2, 1);
    CHECK(b.is_zero());
  }
}

TEST_CASE("single pieces compose to themselves") {
  Random rng(66);
  for (int trial = 0; trial < 6; ++trial) {
    int rho = rng.integer(3, 6), h = rng.integer(3, rho);
    std::map<int, PhasePolynomial> pieces{{h, bgnf::testing::random_homogeneous(rng, 2, h, 3)}};
    GeneratingFunction chain = compose_chain(pieces, 2, rho);
    CHECK(chain.truncated(rho).piece(h) == pieces[h]);
  }
}

TEST_CASE("chains through degree four keep their pieces") {
  Random rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, PhasePolynomial> pieces{{3, bgnf::testing::random_homogeneous(rng, 2, 3, 3)},
                                          {4, bgnf::testing::random_homogeneous(rng, 2, 4, 3)}};
    GeneratingFunction chain = compose_chain(pieces, 2, 4);
    CHECK(chain.piece(3) == pieces[3]);
    CHECK(chain.piece(4) == pieces[4]);
  }
}

TEST_CASE("chains pick up cross terms from degree five") {
  std::map<int, PhasePolynomial> pieces{{3, parse("q1^2*eta1")}, {4, parse("eta1^4")}};
  GeneratingFunction chain = compose_chain(pieces, 2, 5);
  CHECK(chain.piece(3) == pieces[3]);
  CHECK(chain.piece(4) == pieces[4]);
  CHECK_FALSE(chain.piece(5).is_zero());
  GeneratingFunction s3(GeneratingFunction::Kind::ThirdType, Basis::Real, 2, 5);
  s3.set_piece(3, pieces[3]);
  GeneratingFunction s4(GeneratingFunction::Kind::ThirdType, Basis::Real, 2, 5);
  s4.set_piece(4, pieces[4]);
  CHECK(compose_pair(s3, s4, 5) == chain);
}

TEST_CASE("transform_hamiltonian matches substitution") {
  Random rng(68);
  FrequencyVector nu{1, 2};
  for (int trial = 0; trial < 6; ++trial) {
    int rho = rng.integer(3, 6);
    GradedSeries H = bgnf::testing::random_hamiltonian(rng, nu, rho, 3);
    GeneratingFunction s = random_third_type(rng, 2, rho);
    GradedSeries out = transform_hamiltonian(H, s, nu, rho);
    PhasePolynomial w = sum_of_pieces(s);
    std::vector<PhasePolynomial> left = identity_images(2), right = identity_images(2);
    for (int j = 0; j < 2; ++j) {
      left[static_cast<std::size_t>(2 + j)] += partial(w, j);
      right[static_cast<std::size_t>(j)] += partial(w, 2 + j);
    }
    CHECK(substitute_truncated(out.polynomial(nu, rho), left, rho) ==
          substitute_truncated(H.polynomial(nu, rho), right, rho));
  }
}
