#include "bgnf/bdic.hpp"
#include "bgnf/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bgnf;
using bgnf::testing::parse;
using bgnf::testing::Random;

namespace {

ParamScalar f(const char* s) { return ParamScalar::symbol(s); }
ParamScalar r(Rational x) { return ParamScalar(x); }

CubicCoefficients cubic(Rational a, Rational b, Rational c, Rational d) { return {r(a), r(b), r(c), r(d)}; }

// A random point with 3(f1 f3 + f2 f4) = f2^2 + f3^2, solved for f1.
CubicCoefficients on_phocp_variety(Random& rng) {
  Rational f2 = rng.coin() ? rng.rational() : Rational(0), f3 = rng.rational(), f4 = rng.rational();
  Rational f1 = (f2 * f2 + f3 * f3 - Rational(3) * f2 * f4) / (Rational(3) * f3);
  return cubic(f1, f2, f3, f4);
}

PhasePolynomial full_cubic(const CubicCoefficients& c) { return harmonic_potential() + cubic_potential(c); }

std::map<SymbolId, Rational> no_params() { return {}; }

}  // namespace

TEST_CASE("potentials") {
  CHECK(cubic_potential({f("f1"), f("f2"), f("f3"), f("f4")}) ==
        parse("f1*q1^3 + f2*q1^2*q2 + f3*q1*q2^2 + f4*q2^3"));
  CHECK(harmonic_potential() == parse("1/2*(q1^2 + q2^2)"));
  CHECK(quartic_potential({r(1), r(0), r(2), r(0), r(1)}) == parse("(q1^2 + q2^2)^2"));
}

TEST_CASE("phocp residual and branches") {
  PhocpReport hh = bdic_phocp(cubic(0, 1, 0, Rational(1, 3)));
  CHECK(hh.residual.is_zero());
  CHECK(hh.satisfied == std::optional<bool>(true));
  PhocpReport generic = bdic_phocp(cubic(1, 1, 1, 1));
  CHECK(generic.residual == ParamScalar(4));
  CHECK(generic.satisfied == std::optional<bool>(false));
  CHECK(bdic_phocp(cubic(2, 0, 1, 0)).branch_b);
  CHECK(bdic_phocp(cubic(0, 1, 0, 2)).branch_c);
  PhocpReport symbolic = bdic_phocp({f("f1"), f("f2"), f("f3"), f("f4")});
  CHECK_FALSE(symbolic.satisfied.has_value());
  CHECK(symbolic.residual == (f("f1") * f("f3") + f("f2") * f("f4")) * r(3) - f("f2") * f("f2") - f("f3") * f("f3"));
}

TEST_CASE("phoqp residuals") {
  PhoqpReport a = bdic_phoqp({r(1), r(0), r(2), r(0), r(1)});
  CHECK(a.branch_a);
  CHECK(a.satisfied == std::optional<bool>(true));
  PhoqpReport sep = bdic_phoqp({r(-5), r(20), r(-30), r(20), r(-5)});
  CHECK(sep.satisfied == std::optional<bool>(true));
  CHECK(bdic_phoqp({r(1), r(1), r(0), r(0), r(0)}).satisfied == std::optional<bool>(false));
}

TEST_CASE("quartic relations follow from the cubic relation") {
  CubicCoefficients sym{f("f1"), f("f2"), f("f3"), f("f4")};
  ParamScalar cubic_relation = bdic_phocp(sym).residual;
  PhoqpReport q = bdic_phoqp(map_g_from_f(sym));
  for (const ParamScalar& residual : q.residuals) {
    auto d = divide(residual, cubic_relation);
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient * cubic_relation == residual);
  }
}

TEST_CASE("quartic coefficients from the cubic") {
  QuarticCoefficients g = map_g_from_f(cubic(1, 3, 3, 1));
  CHECK(g[0] == r(Rational(-5, 18) * Rational(18)));
  CHECK(g[1] == r(Rational(-10, 9) * Rational(18)));
  CHECK(g[2] == r(Rational(-5, 3) * Rational(18)));
}

TEST_CASE("shared normal form on the cubic relation") {
  Random rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    CubicCoefficients c = on_phocp_variety(rng);
    CHECK(bdic_phocp(c).residual.is_zero());
    CHECK(verify_shared_normal_form(c));
    CHECK_FALSE(normal_form_mismatch(c).has_value());
  }
  CHECK(normal_form_mismatch(cubic(1, 1, 1, 1)) == std::optional<int>(4));
  CHECK_THROWS_AS(verify_shared_normal_form(cubic(1, 1, 1, 1)), Error);
}

TEST_CASE("general identity agrees with the cubic conditions") {
  Random rng(72);
  int satisfied = 0, violated = 0;
  for (int trial = 0; trial < 50; ++trial) {
    CubicCoefficients c;
    switch (trial % 4) {
      case 0: c = on_phocp_variety(rng); break;
      case 1: {
        Rational t = rng.rational();
        c = cubic(Rational(2) * t, 0, t, 0);
        break;
      }
      case 2: {
        Rational t = rng.rational();
        c = cubic(0, t, 0, Rational(2) * t);
        break;
      }
      default: c = cubic(rng.rational(), rng.rational(), rng.rational(), rng.rational());
    }
    PhocpReport report = bdic_phocp(c);
    bool lemma = report.residual.is_zero() || report.branch_b || report.branch_c;
    BdicWitness w = bdic_general(full_cubic(c), no_params());
    CHECK(w.nontrivial() == lemma);
    if (w.nontrivial()) {
      ++satisfied;
      const auto& v = w.basis.front();
      std::array<ParamScalar, 5> k{r(v[0]), r(v[1]), r(v[2]), r(v[3]), r(v[4])};
      CHECK(bdic_expression(full_cubic(c), k).is_zero());
    } else {
      ++violated;
    }
  }
  CHECK(satisfied > 0);
  CHECK(violated > 0);
}

TEST_CASE("general identity agrees with the quartic conditions") {
  CHECK(bdic_general(harmonic_potential() + quartic_potential({r(1), r(0), r(2), r(0), r(1)})).nontrivial());
  CHECK(bdic_general(harmonic_potential() + quartic_potential({r(-5), r(20), r(-30), r(20), r(-5)})).nontrivial());
  CHECK_FALSE(bdic_general(harmonic_potential() + quartic_potential({r(1), r(1), r(0), r(0), r(0)})).nontrivial());
}

TEST_CASE("symbolic parameters are substituted") {
  std::map<SymbolId, Rational> mu{{symbols::intern("mu"), Rational(1, 3)}};
  PhasePolynomial hh = harmonic_potential() + parse("q1^2*q2 + mu*q2^3");
  CHECK(bdic_general(hh, mu).nontrivial());
  CHECK_THROWS_AS(bdic_general(hh), Error);
  CHECK_THROWS_AS(bdic_general(parse("eta1^2")), Error);
}

TEST_CASE("the printed bracket finds no witness for Henon-Heiles") {
  std::map<SymbolId, Rational> mu{{symbols::intern("mu"), Rational(1, 3)}};
  PhasePolynomial hh = harmonic_potential() + parse("q1^2*q2 + mu*q2^3");
  CHECK_FALSE(bdic_general(hh, mu, BdicForm::AsPrinted).nontrivial());
  CHECK(bdic_general(hh, mu, BdicForm::Standard).nontrivial());
}
