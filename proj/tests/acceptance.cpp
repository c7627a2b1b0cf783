// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "bgnf/bdic.hpp"
#include "bgnf/compose.hpp"
#include "golden.hpp"

using namespace bgnf;
using bgnf::testing::Random;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string count(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

Outcome golden_normal_form() {
  NormalForm nf = normalize(bgnf::testing::cubic_oscillator(), bgnf::testing::one_one(), 4);
  PhasePolynomial expected = bgnf::testing::data_polynomial("cal_g.txt", Basis::Complex);
  PhasePolynomial diff = nf.G.in_basis(Basis::Complex).polynomial(bgnf::testing::one_one(), 4) - expected;
  std::size_t terms = to_complex(nf.G.piece(4)).terms().size();
  return {diff.is_zero(), std::to_string(terms) + " degree-4 terms, difference " + to_string(diff)};
}

Outcome golden_inverse_family() {
  const FrequencyVector& nu = bgnf::testing::one_one();
  NormalForm nf = normalize(bgnf::testing::cubic_oscillator(), nu, 4);
  GradedSeries G = nf.G.in_basis(Basis::Complex);
  InverseSolution sol = restore_direct(G, nu, 4, RestoreChoices::fresh({"a", "c"}));
  PhasePolynomial h3 = bgnf::testing::data_polynomial("cal_h3.txt", Basis::Complex);
  PhasePolynomial c_block = bgnf::testing::data_polynomial("cal_h4_c_block.txt", Basis::Complex);
  PhasePolynomial a_blocks = bgnf::testing::data_polynomial("cal_h4_a_blocks.txt", Basis::Complex);
  bool h3_ok = sol.H.piece(3) == h3;
  bool h4_ok = sol.H.piece(4) == c_block + a_blocks + G.piece(4);
  int a = 0, c = 0;
  for (SymbolId s : parameters_used(sol.H.polynomial(nu, 4))) {
    const std::string& name = symbols::name(s);
    if (name.back() == 'c' && name[0] != 'c') continue;
    if (name[0] == 'a') ++a;
    if (name[0] == 'c' && name.back() != 'c') ++c;
  }
  bool counts = a == 10 && c == 13 && image_representatives(3, 2, nu).size() == 10 &&
                image_representatives(4, 2, nu).size() == 13;
  return {h3_ok && h4_ok && counts, "fresh parameters a:" + std::to_string(a) + " c:" + std::to_string(c) +
                                        ", H3 " + (h3_ok ? "exact" : "differs") + ", H4 " +
                                        (h4_ok ? "exact" : "differs")};
}

Outcome henon_heiles() {
  const FrequencyVector& nu = bgnf::testing::one_one();
  NormalForm nf = normalize(bgnf::testing::cubic_oscillator(), nu, 4);
  InverseSolution sol = restore_direct(nf.G.in_basis(Basis::Complex), nu, 4, RestoreChoices::fresh({"a", "c"}));
  PhasePolynomial h = substitute_parameters(to_real(sol.H.polynomial(nu, 4)), bgnf::testing::henon_heiles_values());
  PhasePolynomial diff = h - bgnf::testing::henon_heiles();
  return {diff.is_zero(), "H - (Henon-Heiles) = " + to_string(diff)};
}

CubicCoefficients on_phocp_variety(Random& rng) {
  Rational f2 = rng.coin() ? rng.rational() : Rational(0), f3 = rng.rational(), f4 = rng.rational();
  Rational f1 = (f2 * f2 + f3 * f3 - Rational(3) * f2 * f4) / (Rational(3) * f3);
  return {ParamScalar(f1), ParamScalar(f2), ParamScalar(f3), ParamScalar(f4)};
}

Outcome bdic_bridge() {
  CubicCoefficients sym{ParamScalar::symbol("f1"), ParamScalar::symbol("f2"), ParamScalar::symbol("f3"),
                        ParamScalar::symbol("f4")};
  ParamScalar relation = bdic_phocp(sym).residual;
  int divisible = 0;
  for (const ParamScalar& r : bdic_phoqp(map_g_from_f(sym)).residuals)
    if (divide(r, relation).remainder.is_zero()) ++divisible;
  Random rng(4004);
  int shared = 0;
  for (int i = 0; i < 20; ++i)
    if (verify_shared_normal_form(on_phocp_variety(rng))) ++shared;
  return {divisible == 3 && shared == 20,
          "divisible " + count(divisible, 3) + ", shared normal form " + count(shared, 20)};
}

Outcome roundtrip() {
  Random rng(5005);
  const FrequencyVector& nu = bgnf::testing::one_one();
  int good = 0;
  for (int i = 0; i < 100; ++i) {
    int rho = 4 + i % 3;
    GradedSeries K = bgnf::testing::random_hamiltonian(rng, nu, rho, 4);
    NormalForm nf = normalize(K, nu, rho);
    InverseSolution sol = restore_direct(nf.G, nu, rho, RestoreChoices());
    NormalForm again = normalize(sol.H, nu, rho);
    if (verify_defining_equation(K, nf.G, nf.W, nu, rho) && verify_inverse_equation(sol.H, nf.G, sol.S, nu, rho) &&
        verify_defining_equation(sol.H, again.G, again.W, nu, rho) && again.G == nf.G)
      ++good;
  }
  return {good == 100, count(good, 100) + " cycles exact"};
}

Outcome staged_equals_direct() {
  Random rng(6006);
  const FrequencyVector nus[] = {FrequencyVector{1, 1}, FrequencyVector{1, 2}, FrequencyVector{2, 3}};
  int good = 0, per_nu[3] = {0, 0, 0}, tried[3] = {0, 0, 0};
  for (int i = 0; i < 100; ++i) {
    const FrequencyVector& nu = nus[i % 3];
    ++tried[i % 3];
    int rho = 3 + (i / 3) % 4;
    GradedSeries G = bgnf::testing::random_normal_form(rng, nu, rho, 3);
    RestoreChoices choices;
    for (int k = 3; k <= rho; ++k)
      if (rng.coin()) choices.set(k, RestoreChoice::explicit_polynomial(bgnf::testing::random_image(rng, nu, k, 3)));
    if (restore_staged(G, nu, rho, choices).H == restore_direct(G, nu, rho, choices).H) {
      ++good;
      ++per_nu[i % 3];
    }
  }
  std::string detail = count(good, 100) + " instances equal (";
  for (int j = 0; j < 3; ++j)
    detail += (j ? ", nu=" : "nu=") + nus[j].str() + " " + count(per_nu[j], tried[j]);
  return {good == 100, detail + ")"};
}

Outcome closed_forms() {
  Random rng(7007);
  const FrequencyVector nus[] = {FrequencyVector{1, 1}, FrequencyVector{1, 2}};
  int phi = 0, psi = 0;
  for (int i = 0; i < 50; ++i) {
    const FrequencyVector& nu = nus[i % 2];
    GradedSeries K = bgnf::testing::random_hamiltonian(rng, nu, 3, 5);
    NormalForm nf = normalize(K, nu, 3);
    GradedSeries K4(Basis::Real, 2, 4, true);
    K4.set_piece(3, K.piece(3));
    if (ordinary_residual(K4, nf.G, nf.W, nu, 4) ==
        bgnf::testing::phi4_closed_form(K.piece(3), nf.W.piece(3), nf.G.piece(3), nu))
      ++phi;

    GradedSeries G = bgnf::testing::random_normal_form(rng, nu, 3, 4);
    RestoreChoices choices;
    choices.set(3, RestoreChoice::explicit_polynomial(bgnf::testing::random_image(rng, nu, 3, 3)));
    InverseSolution sol = restore_direct(G, nu, 3, choices);
    GradedSeries H4(Basis::Real, 2, 4, true), G4(Basis::Real, 2, 4, true);
    H4.set_piece(3, sol.H.piece(3));
    G4.set_piece(3, G.piece(3));
    if (inverse_residual(H4, G4, sol.S, nu, 4) ==
        bgnf::testing::psi4_closed_form(sol.H.piece(3), sol.S.piece(3), G.piece(3), nu))
      ++psi;
  }
  int theta = 0, theta_total = 0;
  for (int i = 0; i < 10; ++i) {
    const FrequencyVector& nu = nus[i % 2];
    for (int r : {3, 4}) {
      GradedSeries prev = bgnf::testing::random_hamiltonian(rng, nu, 6, 3);
      PhasePolynomial s = bgnf::testing::random_image(rng, nu, r, 3);
      GradedSeries next = bgnf::testing::stage_by_substitution(prev, s, nu, 6);
      GradedSeries cur(Basis::Real, 2, 6, true);
      for (int k = 3; k <= 6; ++k) {
        if (k > r) {
          ++theta_total;
          if (compute_theta(r, k, s, prev, cur, nu) == next.piece(k) - prev.piece(k)) ++theta;
        }
        cur.set_piece(k, next.piece(k));
      }
    }
  }
  return {phi == 50 && psi == 50 && theta == theta_total,
          "Phi4 " + count(phi, 50) + ", Psi4 " + count(psi, 50) + ", Theta " + count(theta, theta_total)};
}

Outcome kernel_structure() {
  int good = 0, total = 0;
  bool odd_empty = true;
  for (const FrequencyVector& nu : {FrequencyVector{1, 1}, FrequencyVector{1, 2}, FrequencyVector{2, 3}}) {
    for (int k = 1; k <= 6; ++k) {
      RationalMatrix m = bgnf::testing::d_matrix(k, nu);
      ++total;
      if (kernel_basis(k, 2, nu).size() == nullspace(m, static_cast<int>(m.size())).size()) ++good;
    }
  }
  for (int k : {1, 3, 5}) odd_empty = odd_empty && kernel_basis(k, 2, FrequencyVector{1, 1}).empty();
  return {good == total && odd_empty, "dimensions " + count(good, total) + ", odd degrees empty for nu=(1,1): " +
                                          (odd_empty ? "yes" : "no")};
}

Outcome composition_expansion() {
  Random rng(9009);
  int exact = 0, symplectic = 0;
  int by_rho_exact[7] = {}, by_rho_total[7] = {};
  for (int i = 0; i < 50; ++i) {
    int rho = 4 + i % 3;
    std::map<int, PhasePolynomial> pieces;
    for (int k = 3; k <= rho; ++k) pieces[k] = bgnf::testing::random_homogeneous(rng, 2, k, 3);
    GeneratingFunction chain = compose_chain(pieces, 2, rho);
    bool same = true;
    for (int k = 3; k <= rho; ++k) same = same && chain.piece(k) == pieces[k];
    ++by_rho_total[rho];
    if (same) {
      ++exact;
      ++by_rho_exact[rho];
    }
    if (preserves_brackets(chain, rho - 1)) ++symplectic;
  }
  std::string detail = "pieces reproduced " + count(exact, 50) + " (rho=4: " + count(by_rho_exact[4], by_rho_total[4]) +
                       ", rho=5: " + count(by_rho_exact[5], by_rho_total[5]) +
                       ", rho=6: " + count(by_rho_exact[6], by_rho_total[6]) + "), symplectic " +
                       count(symplectic, 50);
  return {exact == 50 && symplectic == 50, detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"golden normal form", 5, golden_normal_form},
      {"golden inverse family", 30, golden_inverse_family},
      {"Henon-Heiles specialization", 5, henon_heiles},
      {"BDIC bridge", 10, bdic_bridge},
      {"roundtrip property", 120, roundtrip},
      {"staged equals direct", 120, staged_equals_direct},
      {"closed-form oracles", 1e9, closed_forms},
      {"kernel structure", 1e9, kernel_structure},
      {"composition expansion", 1e9, composition_expansion},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && s <= c.budget_s;
    if (!pass) ++failed;
    std::printf("criterion %d %s: %s  %s  [%.2f s]\n", index, c.name, pass ? "PASS" : "FAIL", o.detail.c_str(), s);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
