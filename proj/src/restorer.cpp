#include "bgnf/restorer.hpp"

#include "bgnf/canonical.hpp"
#include "bgnf/error.hpp"
#include "bgnf/mechanics.hpp"
#include "bgnf/normalizer.hpp"

namespace bgnf {
namespace {

PhasePolynomial pieces_below(const GeneratingFunction& F, int k) {
  PhasePolynomial out(Basis::Real, F.n());
  for (const auto& [d, p] : F.pieces())
    if (d < k) out += in_basis(p, Basis::Real);
  return out;
}

void require_normal_form(const GradedSeries& G, const FrequencyVector& nu, int rho) {
  if (G.n() != nu.n())
    throw argument_error("normal form has n = " + std::to_string(G.n()) + " but nu has " + std::to_string(nu.n()) +
                         " entries");
  if (!G.has_quadratic()) throw Error(Error::Category::QuadraticPart, "normal form has no quadratic part");
  if (rho < 3) throw argument_error("restoration degree must be at least 3");
  if (auto v = find_normal_form_violation(G.truncated(rho), nu))
    throw Error(Error::Category::NotNormalForm,
                "input is not in normal form: degree " + std::to_string(v->degree) + " has image term " + v->monomial);
}

// Quadratic part (k = 2) or stored piece, in the real basis.
PhasePolynomial real_piece(const GradedSeries& s, int k, const FrequencyVector& nu) {
  if (k == 2) return s.has_quadratic() ? quadratic_part(nu, Basis::Real) : PhasePolynomial(Basis::Real, s.n());
  return in_basis(s.piece(k), Basis::Real);
}

PhasePolynomial power(const PhasePolynomial& p, int e) {
  PhasePolynomial out = PhasePolynomial::constant(p.basis(), p.n(), 1);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

// Calls f(alpha) for every multi-index of length n with |alpha| = total.
template <class F>
void for_each_multi_index(int n, int total, F&& f) {
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == n - 1) {
      alpha[static_cast<std::size_t>(j)] = remaining;
      f(alpha);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      alpha[static_cast<std::size_t>(j)] = a;
      self(self, j + 1, remaining - a);
    }
  };
  rec(rec, 0, total);
}

}  // namespace

RestoreChoice RestoreChoice::fresh(std::string prefix) {
  if (!symbols::is_valid_name(prefix + "1")) throw argument_error("invalid parameter prefix '" + prefix + "'");
  RestoreChoice c;
  c.kind = Kind::Fresh;
  c.prefix = std::move(prefix);
  return c;
}

RestoreChoice RestoreChoice::explicit_polynomial(PhasePolynomial image) {
  RestoreChoice c;
  c.kind = Kind::Explicit;
  c.explicit_image = std::move(image);
  return c;
}

RestoreChoices RestoreChoices::fresh(const std::vector<std::string>& prefixes) {
  if (prefixes.empty()) throw argument_error("fresh choices need at least one prefix");
  RestoreChoices out(RestoreChoice::fresh(prefixes.back()));
  for (std::size_t i = 0; i + 1 < prefixes.size(); ++i)
    out.set(3 + static_cast<int>(i), RestoreChoice::fresh(prefixes[i]));
  return out;
}

const RestoreChoice& RestoreChoices::at(int k) const {
  auto it = by_degree_.find(k);
  return it == by_degree_.end() ? fallback_ : it->second;
}

PhasePolynomial fresh_image_polynomial(int k, int n, const FrequencyVector& nu, const std::string& prefix,
                                       int& next_index) {
  PhasePolynomial out(Basis::Complex, n);
  for (const auto& e : image_representatives(k, n, nu)) {
    auto [a, ac] = symbols::intern_complex(prefix + std::to_string(next_index++));
    out.add_term(e, ParamScalar::symbol(a));
    out.add_term(conjugate_exponent(e), ParamScalar::symbol(ac));
  }
  return out;
}

std::map<int, PhasePolynomial> realize_choices(const RestoreChoices& choices, int n, const FrequencyVector& nu,
                                               int rho, Basis basis) {
  std::map<int, PhasePolynomial> out;
  std::map<std::string, int> next_index;
  for (int k = 3; k <= rho; ++k) {
    const RestoreChoice& c = choices.at(k);
    PhasePolynomial p(basis, n);
    switch (c.kind) {
      case RestoreChoice::Kind::Zero:
        break;
      case RestoreChoice::Kind::Fresh: {
        auto [it, inserted] = next_index.try_emplace(c.prefix, 1);
        p = in_basis(fresh_image_polynomial(k, n, nu, c.prefix, it->second), basis);
        break;
      }
      case RestoreChoice::Kind::Explicit: {
        const PhasePolynomial& e = c.explicit_image;
        if (e.is_zero()) break;
        if (e.n() != n) throw argument_error("explicit choice at degree " + std::to_string(k) + " has the wrong n");
        if (!e.is_homogeneous(k))
          throw argument_error("explicit choice at degree " + std::to_string(k) + " is not homogeneous of degree " +
                               std::to_string(k));
        if (!decompose(e, nu).kernel_part.is_zero())
          throw argument_error("explicit choice at degree " + std::to_string(k) + " has a kernel component");
        p = in_basis(e, basis);
        break;
      }
    }
    out.emplace(k, std::move(p));
  }
  return out;
}

PhasePolynomial inverse_residual(const GradedSeries& H, const GradedSeries& G, const GeneratingFunction& S,
                                 const FrequencyVector& nu, int k) {
  PhasePolynomial s = pieces_below(S, k);
  PhasePolynomial h_poly = in_basis(H.polynomial(nu, k - 1), Basis::Real);
  PhasePolynomial g_poly = in_basis(G.polynomial(nu, k - 1), Basis::Real);
  return (shift_momenta(h_poly, s, k) - shift_positions(g_poly, s, k)).homogeneous_part(k);
}

InverseSolution restore_direct(const GradedSeries& G, const FrequencyVector& nu, int rho,
                               const RestoreChoices& choices) {
  require_normal_form(G, nu, rho);
  const int n = G.n();
  auto images = realize_choices(choices, n, nu, rho, Basis::Real);
  GradedSeries g_real = G.in_basis(Basis::Real).truncated(rho);
  GradedSeries H(Basis::Real, n, rho, true);
  GeneratingFunction S(GeneratingFunction::Kind::ThirdType, Basis::Real, n, rho);
  for (int k = 3; k <= rho; ++k) {
    Decomposition psi = decompose(inverse_residual(H, g_real, S, nu, k), nu);
    const PhasePolynomial& image = images.at(k);
    H.set_piece(k, g_real.piece(k) - psi.kernel_part + image);
    S.set_piece(k, invert_D_on_image(image + psi.image_part, nu));
  }
  return {H.in_basis(G.basis()), S.in_basis(G.basis())};
}

PhasePolynomial compute_theta(int r, int k, const PhasePolynomial& S_r, const GradedSeries& H_prev,
                              const GradedSeries& H_cur, const FrequencyVector& nu) {
  if (r < 3 || k < r + 1) throw argument_error("compute_theta needs 3 <= r < k");
  if (!S_r.is_zero() && !S_r.is_homogeneous(r)) throw argument_error("S_r must be homogeneous of degree r");
  const int n = H_prev.n();
  PhasePolynomial s = in_basis(S_r, Basis::Real);
  if (s.is_zero()) return PhasePolynomial(H_prev.basis(), n);
  std::vector<PhasePolynomial> ds_dq, ds_deta;
  for (int j = 0; j < n; ++j) {
    ds_dq.push_back(partial(s, j));
    ds_deta.push_back(partial(s, n + j));
  }
  PhasePolynomial out(Basis::Real, n);
  for (int order = 1; order <= (k - 2) / (r - 2); ++order) {
    int lower = k - (r - 2) * order;
    PhasePolynomial prev = real_piece(H_prev, lower, nu);
    PhasePolynomial cur = real_piece(H_cur, lower, nu);
    if (prev.is_zero() && cur.is_zero()) continue;
    for_each_multi_index(n, order, [&](const std::vector<int>& alpha) {
      Rational factorial = 1;
      PhasePolynomial factor_prev = PhasePolynomial::constant(Basis::Real, n, 1);
      PhasePolynomial factor_cur = PhasePolynomial::constant(Basis::Real, n, 1);
      PhasePolynomial d_prev = prev;
      PhasePolynomial d_cur = cur;
      for (int j = 0; j < n; ++j) {
        int a = alpha[static_cast<std::size_t>(j)];
        for (int m = 2; m <= a; ++m) factorial *= Rational(m);
        if (a == 0) continue;
        factor_prev = factor_prev * power(ds_deta[static_cast<std::size_t>(j)], a);
        factor_cur = factor_cur * power(ds_dq[static_cast<std::size_t>(j)], a);
        for (int m = 0; m < a; ++m) {
          d_prev = partial(d_prev, j);
          d_cur = partial(d_cur, n + j);
        }
      }
      out += (factor_prev * d_prev - factor_cur * d_cur) * ParamScalar(Rational(1) / factorial);
    });
  }
  return in_basis(out, H_prev.basis());
}

StagedSolution restore_staged(const GradedSeries& G, const FrequencyVector& nu, int rho,
                              const RestoreChoices& choices) {
  require_normal_form(G, nu, rho);
  const int n = G.n();
  auto images = realize_choices(choices, n, nu, rho, Basis::Real);
  GradedSeries prev = G.in_basis(Basis::Real).truncated(rho);
  StagedSolution out;
  for (int r = 3; r <= rho; ++r) {
    GradedSeries cur(Basis::Real, n, rho, true);
    for (int k = 3; k < r; ++k) cur.set_piece(k, prev.piece(k));
    Decomposition d = decompose(prev.piece(r), nu);
    const PhasePolynomial& image = images.at(r);
    cur.set_piece(r, d.kernel_part + image);
    PhasePolynomial s_r = invert_D_on_image(image - d.image_part, nu);
    for (int k = r + 1; k <= rho; ++k) cur.set_piece(k, prev.piece(k) + compute_theta(r, k, s_r, prev, cur, nu));
    out.S_pieces[r] = in_basis(s_r, G.basis());
    prev = std::move(cur);
  }
  out.H = prev.in_basis(G.basis());
  return out;
}

bool verify_inverse_equation(const GradedSeries& H, const GradedSeries& G, const GeneratingFunction& S,
                             const FrequencyVector& nu, int rho) {
  PhasePolynomial s = pieces_below(S, rho + 1);
  PhasePolynomial h_poly = in_basis(H.polynomial(nu, rho), Basis::Real);
  PhasePolynomial g_poly = in_basis(G.polynomial(nu, rho), Basis::Real);
  return (shift_momenta(h_poly, s, rho) - shift_positions(g_poly, s, rho)).is_zero();
}

}  // namespace bgnf
