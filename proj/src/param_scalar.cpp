#include "bgnf/param_scalar.hpp"

#include <algorithm>

#include "bgnf/error.hpp"

namespace bgnf {

unsigned ParamMonomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors) d += f.second;
  return d;
}

unsigned ParamMonomial::exponent(SymbolId s) const {
  for (const auto& f : factors)
    if (f.first == s) return f.second;
  return 0;
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  auto i = a.factors.begin();
  auto j = b.factors.begin();
  while (i != a.factors.end() || j != b.factors.end()) {
    if (j == b.factors.end() || (i != a.factors.end() && i->first < j->first)) {
      out.factors.push_back(*i++);
    } else if (i == a.factors.end() || j->first < i->first) {
      out.factors.push_back(*j++);
    } else {
      out.factors.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

// Merges sorted term lists; sign = +1 or -1 applied to b.
std::vector<ParamScalar::Term> merge(const std::vector<ParamScalar::Term>& a,
                                     const std::vector<ParamScalar::Term>& b, bool negate_b) {
  std::vector<ParamScalar::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, negate_b ? -j->second : j->second);
      ++j;
    } else {
      GaussianRational c = negate_b ? i->second - j->second : i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize_terms(std::vector<ParamScalar::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ParamScalar::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms = std::move(out);
}

}  // namespace

class ParamScalarBuilder {
 public:
  static ParamScalar from_terms(std::vector<ParamScalar::Term> terms) {
    normalize_terms(terms);
    ParamScalar s;
    s.terms_ = std::move(terms);
    return s;
  }
  static ParamScalar from_sorted(std::vector<ParamScalar::Term> terms) {
    ParamScalar s;
    s.terms_ = std::move(terms);
    return s;
  }
};

ParamScalar::ParamScalar(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace_back(ParamMonomial{}, std::move(c));
}

ParamScalar ParamScalar::symbol(SymbolId s, unsigned exponent) {
  ParamMonomial m;
  if (exponent > 0) m.factors.emplace_back(s, exponent);
  return ParamScalarBuilder::from_sorted({{std::move(m), GaussianRational(1)}});
}

std::optional<GaussianRational> ParamScalar::constant_value() const {
  if (terms_.empty()) return GaussianRational();
  if (terms_.size() == 1 && terms_[0].first.is_one()) return terms_[0].second;
  return std::nullopt;
}

GaussianRational ParamScalar::constant_term() const {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return {};
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

ParamScalar& ParamScalar::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;
  std::vector<ParamScalar::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.emplace_back(x.first * y.first, x.second * y.second);
  return ParamScalarBuilder::from_terms(std::move(terms));
}

ParamScalar ParamScalar::conj() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    ParamMonomial cm;
    for (const auto& [s, e] : m.factors) cm.factors.emplace_back(symbols::conjugate(s), e);
    std::sort(cm.factors.begin(), cm.factors.end());
    terms.emplace_back(std::move(cm), c.conj());
  }
  return ParamScalarBuilder::from_terms(std::move(terms));
}

ParamScalar ParamScalar::substitute(const std::map<SymbolId, ParamScalar>& values) const {
  ParamScalar out;
  for (const auto& [m, c] : terms_) {
    ParamScalar term(c);
    ParamMonomial rest;
    for (const auto& [s, e] : m.factors) {
      auto it = values.find(s);
      if (it == values.end()) {
        rest.factors.emplace_back(s, e);
      } else {
        for (unsigned k = 0; k < e; ++k) term = term * it->second;
      }
    }
    if (!rest.is_one()) term = term * ParamScalarBuilder::from_sorted({{rest, GaussianRational(1)}});
    out += term;
  }
  return out;
}

std::vector<SymbolId> ParamScalar::symbols_used() const {
  std::vector<SymbolId> out;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors) out.push_back(f.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool grlex_less(const ParamMonomial& a, const ParamMonomial& b) {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) return da < db;
  // Lex: the monomial with the larger exponent on the smallest symbol id is larger.
  auto i = a.factors.begin();
  auto j = b.factors.begin();
  while (i != a.factors.end() && j != b.factors.end()) {
    if (i->first != j->first) return i->first > j->first;
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  return i == a.factors.end() && j != b.factors.end();
}

const ParamScalar::Term& leading_term(const ParamScalar& s) {
  const auto& t = s.terms();
  return *std::max_element(t.begin(), t.end(),
                           [](const auto& x, const auto& y) { return grlex_less(x.first, y.first); });
}

// Returns a/b when b divides a as monomials.
std::optional<ParamMonomial> monomial_quotient(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  for (const auto& [s, e] : a.factors) {
    unsigned d = b.exponent(s);
    if (d > e) return std::nullopt;
    if (e > d) out.factors.emplace_back(s, e - d);
  }
  for (const auto& [s, e] : b.factors)
    if (a.exponent(s) == 0) return std::nullopt;
  return out;
}

}  // namespace

DivisionResult divide(const ParamScalar& dividend, const ParamScalar& divisor) {
  if (divisor.is_zero()) throw argument_error("division by the zero polynomial");
  const auto& [lead_m, lead_c] = leading_term(divisor);
  GaussianRational lead_inv = lead_c.inverse();
  DivisionResult r;
  ParamScalar p = dividend;
  while (!p.is_zero()) {
    const auto& [pm, pc] = leading_term(p);
    if (auto q = monomial_quotient(pm, lead_m)) {
      ParamScalar t = ParamScalarBuilder::from_sorted({{*q, pc * lead_inv}});
      r.quotient += t;
      p -= t * divisor;
    } else {
      ParamScalar t = ParamScalarBuilder::from_sorted({{pm, pc}});
      r.remainder += t;
      p -= t;
    }
  }
  return r;
}

namespace {

std::vector<std::pair<std::string, unsigned>> named_factors(const ParamMonomial& m) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& [s, e] : m.factors) out.emplace_back(symbols::name(s), e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string monomial_string(const ParamMonomial& m) {
  std::string out;
  for (const auto& [n, e] : named_factors(m)) {
    if (!out.empty()) out += '*';
    out += n;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<ParamScalar::Term> canonical_terms(const ParamScalar& s) {
  struct Keyed {
    unsigned degree;
    std::vector<std::pair<std::string, unsigned>> names;
    const ParamScalar::Term* term;
  };
  std::vector<Keyed> keyed;
  for (const auto& t : s.terms()) keyed.push_back({t.first.degree(), named_factors(t.first), &t});
  // Descending degree, then lexicographic by names with larger exponent first.
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    auto i = a.names.begin();
    auto j = b.names.begin();
    for (; i != a.names.end() && j != b.names.end(); ++i, ++j) {
      if (i->first != j->first) return i->first < j->first;
      if (i->second != j->second) return i->second > j->second;
    }
    return i != a.names.end() && j == b.names.end();
  });
  std::vector<ParamScalar::Term> out;
  for (const auto& k : keyed) out.push_back(*k.term);
  return out;
}

std::string to_string(const ParamScalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : canonical_terms(s)) {
    std::string coeff = c.str();
    std::string mono = monomial_string(m);
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (c == GaussianRational(1)) {
      term = mono;
    } else if (c == GaussianRational(-1)) {
      term = "-" + mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace bgnf
