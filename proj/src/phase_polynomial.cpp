#include "bgnf/phase_polynomial.hpp"

#include <algorithm>

#include "bgnf/error.hpp"

namespace bgnf {

ExponentVector::ExponentVector(int slots) {
  if (slots < 0 || slots > 2 * kMaxDegreesOfFreedom)
    throw argument_error("unsupported number of phase variables: " + std::to_string(slots));
  size_ = static_cast<std::uint8_t>(slots);
}

ExponentVector::ExponentVector(std::initializer_list<int> exponents)
    : ExponentVector(static_cast<int>(exponents.size())) {
  int slot = 0;
  for (int e : exponents) set(slot++, e);
}

void ExponentVector::set(int slot, int exponent) {
  if (slot < 0 || slot >= size_) throw argument_error("exponent slot out of range");
  if (exponent < 0 || exponent > 255) throw argument_error("exponent out of range");
  auto& cell = exponents_[static_cast<std::size_t>(slot)];
  degree_ = static_cast<std::uint16_t>(degree_ - cell + exponent);
  cell = static_cast<std::uint8_t>(exponent);
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size_);
  for (int s = 0; s < a.size_; ++s) out.set(s, a[s] + b[s]);
  return out;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (int s = 0; s < a.size_; ++s)
    if (auto c = a[s] <=> b[s]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::vector<ExponentVector> monomials_of_degree(int slots, int k) {
  std::vector<ExponentVector> out;
  if (k < 0) return out;
  ExponentVector e(slots);
  if (slots == 0) {
    if (k == 0) out.push_back(e);
    return out;
  }
  // Enumerate compositions of k into `slots` parts.
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == slots - 1) {
      e.set(slot, remaining);
      out.push_back(e);
      e.set(slot, 0);
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      e.set(slot, x);
      self(self, slot + 1, remaining - x);
    }
    e.set(slot, 0);
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

PhasePolynomial::PhasePolynomial(Basis basis, int n) : basis_(basis), n_(n) {
  if (n < 0 || n > kMaxDegreesOfFreedom)
    throw argument_error("unsupported number of degrees of freedom: " + std::to_string(n));
}

PhasePolynomial PhasePolynomial::constant(Basis basis, int n, const ParamScalar& c) {
  PhasePolynomial p(basis, n);
  p.add_term(ExponentVector(2 * n), c);
  return p;
}

PhasePolynomial PhasePolynomial::variable(Basis basis, int n, int slot) {
  PhasePolynomial p(basis, n);
  ExponentVector e(2 * n);
  e.set(slot, 1);
  p.add_term(e, 1);
  return p;
}

PhasePolynomial PhasePolynomial::monomial(Basis basis, int n, const ExponentVector& e, const ParamScalar& c) {
  if (e.size() != 2 * n) throw argument_error("exponent vector has the wrong number of slots");
  PhasePolynomial p(basis, n);
  p.add_term(e, c);
  return p;
}

int PhasePolynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
int PhasePolynomial::low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

bool PhasePolynomial::is_homogeneous(int k) const {
  return terms_.empty() || (low_degree() == k && degree() == k);
}

ParamScalar PhasePolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamScalar() : it->second;
}

void PhasePolynomial::add_term(const ExponentVector& e, const ParamScalar& c) {
  if (c.is_zero()) return;
  if (e.size() != slots()) throw argument_error("exponent vector has the wrong number of slots");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhasePolynomial PhasePolynomial::homogeneous_part(int k) const {
  PhasePolynomial out(basis_, n_);
  for (const auto& [e, c] : terms_)
    if (e.degree() == k) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

PhasePolynomial PhasePolynomial::truncated(int rho) const {
  PhasePolynomial out(basis_, n_);
  for (const auto& [e, c] : terms_) {
    if (e.degree() > rho) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

PhasePolynomial PhasePolynomial::operator-() const {
  PhasePolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void require_compatible(const PhasePolynomial& a, const PhasePolynomial& b) {
  if (a.basis() != b.basis()) throw argument_error("polynomials are written in different bases");
  if (a.n() != b.n()) throw argument_error("polynomials have different numbers of degrees of freedom");
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& o) {
  require_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PhasePolynomial& PhasePolynomial::operator-=(const PhasePolynomial& o) {
  require_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PhasePolynomial& PhasePolynomial::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const PhasePolynomial& a, const PhasePolynomial& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.basis_ == b.basis_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b) {
  int rho = std::max(0, a.degree()) + std::max(0, b.degree());
  return mul_truncated(a, b, rho);
}

PhasePolynomial add(const PhasePolynomial& a, const PhasePolynomial& b) { return a + b; }

PhasePolynomial mul_truncated(const PhasePolynomial& a, const PhasePolynomial& b, int rho) {
  require_compatible(a, b);
  PhasePolynomial out(a.basis(), a.n());
  for (const auto& [ea, ca] : a.terms()) {
    if (ea.degree() + std::max(0, b.low_degree()) > rho) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.degree() + eb.degree() > rho) break;
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

PhasePolynomial partial(const PhasePolynomial& p, int slot) {
  if (slot < 0 || slot >= p.slots())
    throw argument_error("unknown phase variable slot " + std::to_string(slot));
  PhasePolynomial out(p.basis(), p.n());
  for (const auto& [e, c] : p.terms()) {
    int k = e[slot];
    if (k == 0) continue;
    ExponentVector d = e;
    d.set(slot, k - 1);
    out.add_term(d, c * ParamScalar(static_cast<long>(k)));
  }
  return out;
}

PhasePolynomial substitute_truncated(const PhasePolynomial& p, const std::vector<PhasePolynomial>& images,
                                     int rho) {
  if (static_cast<int>(images.size()) != p.slots())
    throw argument_error("substitution needs one image per phase variable");
  if (images.empty()) return p.truncated(rho);
  const Basis basis = images.front().basis();
  const int n = images.front().n();
  std::vector<int> low(images.size());
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (images[s].basis() != basis || images[s].n() != n)
      throw argument_error("substitution images must share one basis and arity");
    if (!images[s].coefficient(ExponentVector(2 * n)).is_zero())
      throw argument_error("substitution image has a constant term");
    low[s] = images[s].is_zero() ? rho + 1 : images[s].low_degree();
  }
  // powers[s][e] = images[s]^e truncated at rho, built lazily.
  std::vector<std::vector<PhasePolynomial>> powers(images.size());
  auto power = [&](std::size_t s, int e) -> const PhasePolynomial& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(PhasePolynomial::constant(basis, n, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(mul_truncated(cache.back(), images[s], rho));
    return cache[static_cast<std::size_t>(e)];
  };

  PhasePolynomial out(basis, n);
  for (const auto& [e, c] : p.terms()) {
    long min_degree = 0;
    for (int s = 0; s < p.slots(); ++s) min_degree += static_cast<long>(e[s]) * low[static_cast<std::size_t>(s)];
    if (min_degree > rho) continue;
    PhasePolynomial term = PhasePolynomial::constant(basis, n, c);
    for (int s = 0; s < p.slots() && !term.is_zero(); ++s) {
      if (e[s] == 0) continue;
      term = mul_truncated(term, power(static_cast<std::size_t>(s), e[s]), rho);
    }
    out += term;
  }
  return out;
}

namespace {

PhasePolynomial change_basis(const PhasePolynomial& p, Basis target) {
  const int n = p.n();
  std::vector<PhasePolynomial> images;
  const ParamScalar half(Rational(1, 2));
  const ParamScalar i = ParamScalar::imaginary_unit();
  for (int s = 0; s < 2 * n; ++s) {
    int j = s % n;
    bool second = s >= n;
    PhasePolynomial a = PhasePolynomial::variable(target, n, j);
    PhasePolynomial b = PhasePolynomial::variable(target, n, n + j);
    if (target == Basis::Complex) {
      // q = (z + zb)/2, eta = -i (z - zb)/2
      images.push_back(second ? (a - b) * (-i * half) : (a + b) * half);
    } else {
      // z = q + i eta, zb = q - i eta
      images.push_back(second ? a - b * i : a + b * i);
    }
  }
  return substitute_truncated(p, images, std::max(0, p.degree()));
}

}  // namespace

PhasePolynomial to_complex(const PhasePolynomial& p) {
  if (p.basis() == Basis::Complex) throw argument_error("polynomial is already in the complex basis");
  if (p.is_zero()) return PhasePolynomial(Basis::Complex, p.n());
  return change_basis(p, Basis::Complex);
}

PhasePolynomial to_real(const PhasePolynomial& p) {
  if (p.basis() == Basis::Real) throw argument_error("polynomial is already in the real basis");
  if (p.is_zero()) return PhasePolynomial(Basis::Real, p.n());
  return change_basis(p, Basis::Real);
}

PhasePolynomial in_basis(const PhasePolynomial& p, Basis basis) {
  if (p.basis() == basis) return p;
  return basis == Basis::Complex ? to_complex(p) : to_real(p);
}

PhasePolynomial conjugate(const PhasePolynomial& p) {
  PhasePolynomial out(p.basis(), p.n());
  const int n = p.n();
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f = e;
    if (p.basis() == Basis::Complex) {
      for (int j = 0; j < n; ++j) {
        f.set(j, e[n + j]);
        f.set(n + j, e[j]);
      }
    }
    out.add_term(f, c.conj());
  }
  return out;
}

PhasePolynomial substitute_parameters(const PhasePolynomial& p, const std::map<SymbolId, ParamScalar>& values) {
  return p.map_coefficients([&](const ParamScalar& c) { return c.substitute(values); });
}

std::vector<SymbolId> parameters_used(const PhasePolynomial& p) {
  std::vector<SymbolId> out;
  for (const auto& [e, c] : p.terms()) {
    auto s = c.symbols_used();
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string slot_name(Basis basis, int n, int slot) {
  bool second = slot >= n;
  int j = (slot % n) + 1;
  if (basis == Basis::Real) return (second ? "eta" : "q") + std::to_string(j);
  return (second ? "zb" : "z") + std::to_string(j);
}

namespace {

std::string phase_monomial_string(Basis basis, int n, const ExponentVector& e) {
  std::string out;
  for (int s = 0; s < 2 * n; ++s) {
    if (e[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += slot_name(basis, n, s);
    if (e[s] > 1) out += "^" + std::to_string(e[s]);
  }
  return out;
}

void append_chunk(std::string& out, const Rational& value, bool imaginary, const std::string& params,
                  const std::string& phase) {
  if (value.is_zero()) return;
  bool negative = value.sign() < 0;
  Rational magnitude = negative ? -value : value;
  std::vector<std::string> factors;
  if (!magnitude.is_one()) factors.push_back(magnitude.str());
  if (imaginary) factors.push_back("i");
  if (!params.empty()) factors.push_back(params);
  if (!phase.empty()) factors.push_back(phase);
  if (factors.empty()) factors.push_back("1");
  std::string chunk;
  for (const auto& f : factors) chunk += (chunk.empty() ? "" : "*") + f;
  if (out.empty()) {
    out = (negative ? "-" : "") + chunk;
  } else {
    out += negative ? " - " : " + ";
    out += chunk;
  }
}

}  // namespace

std::string to_string(const PhasePolynomial& p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string phase = phase_monomial_string(p.basis(), p.n(), it->first);
    for (const auto& [m, c] : canonical_terms(it->second)) {
      std::string params = monomial_string(m);
      append_chunk(out, c.re, false, params, phase);
      append_chunk(out, c.im, true, params, phase);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace bgnf
