#include "bgnf/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "bgnf/error.hpp"

namespace bgnf {
namespace {

constexpr int kWide = kMaxDegreesOfFreedom;

struct Token {
  enum class Type { Number, Identifier, Op, End } type;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text, int first_line) {
  std::vector<Token> out;
  int line = first_line;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line;
    int col = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Type::Number, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Type::Identifier, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Type::Op, std::string(1, c), l, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, col);
    }
  }
  out.push_back({Token::Type::End, "", line, column});
  return out;
}

// Parses an identifier of the form <prefix><digits>; returns the index or 0.
int indexed(const std::string& id, std::string_view prefix) {
  if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return 0;
  int value = 0;
  for (std::size_t k = prefix.size(); k < id.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(id[k]))) return 0;
    value = value * 10 + (id[k] - '0');
    if (value > 1000) return 1000;
  }
  return value == 0 ? -1 : value;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : tokens_(tokenize(text, options.first_line)), options_(options) {}

  PhasePolynomial parse() {
    if (peek().type == Token::Type::End) throw ParseError("empty expression", peek().line, peek().column);
    PhasePolynomial value = expression();
    if (peek().type != Token::Type::End) throw ParseError("unexpected '" + peek().text + "'", peek().line, peek().column);
    return finish(value);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(const char* op) {
    if (peek().type == Token::Type::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  static PhasePolynomial constant(const ParamScalar& c) { return PhasePolynomial::constant(Basis::Real, kWide, c); }

  PhasePolynomial expression() {
    PhasePolynomial value = term();
    while (true) {
      if (accept("+")) {
        value += term();
      } else if (accept("-")) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  PhasePolynomial term() {
    PhasePolynomial value = unary();
    while (true) {
      if (accept("*")) {
        value = value * unary();
      } else if (peek().type == Token::Type::Op && peek().text == "/") {
        const Token& slash = next();
        PhasePolynomial divisor = unary();
        auto c = divisor.coefficient(ExponentVector(2 * kWide)).constant_value();
        if (divisor.size() > 1 || (divisor.size() == 1 && divisor.degree() != 0) || !c || c->is_zero())
          throw ParseError("division is only allowed by a nonzero numeric constant", slash.line, slash.column);
        value *= ParamScalar(c->inverse());
      } else {
        return value;
      }
    }
  }

  PhasePolynomial unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  PhasePolynomial power() {
    PhasePolynomial base = atom();
    if (peek().type == Token::Type::Op && peek().text == "^") {
      next();
      const Token& t = next();
      if (t.type != Token::Type::Number) throw ParseError("exponent must be a nonnegative integer", t.line, t.column);
      if (t.text.size() > 4) throw ParseError("exponent too large", t.line, t.column);
      int e = std::stoi(t.text);
      PhasePolynomial out = constant(1);
      for (int k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  PhasePolynomial atom() {
    const Token& t = next();
    switch (t.type) {
      case Token::Type::Number: {
        Rational value = Rational::parse(t.text);
        return constant(value);
      }
      case Token::Type::Identifier:
        return identifier(t);
      case Token::Type::Op:
        if (t.text == "(") {
          PhasePolynomial inner = expression();
          const Token& close = next();
          if (close.type != Token::Type::Op || close.text != ")")
            throw ParseError("expected ')'", close.line, close.column);
          return inner;
        }
        throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
      case Token::Type::End:
        break;
    }
    throw ParseError("unexpected end of expression", t.line, t.column);
  }

  PhasePolynomial phase_variable(const Token& t, Basis basis, int index, bool second) {
    if (index < 0) throw ParseError("variable index starts at 1: '" + t.text + "'", t.line, t.column);
    if (index > kWide) throw ParseError("variable index too large: '" + t.text + "'", t.line, t.column);
    if (options_.n && index > *options_.n)
      throw ParseError("variable '" + t.text + "' exceeds n = " + std::to_string(*options_.n), t.line, t.column);
    if (basis_ && *basis_ != basis)
      throw ParseError("variable '" + t.text + "' mixes real (q, eta) and complex (z, zb) bases", t.line, t.column);
    basis_ = basis;
    max_index_ = std::max(max_index_, index);
    return PhasePolynomial::variable(Basis::Real, kWide, (second ? kWide : 0) + index - 1);
  }

  PhasePolynomial identifier(const Token& t) {
    const std::string& id = t.text;
    if (id == "i") return constant(ParamScalar::imaginary_unit());
    if (int k = indexed(id, "q")) return phase_variable(t, Basis::Real, k, false);
    if (int k = indexed(id, "eta")) return phase_variable(t, Basis::Real, k, true);
    if (int k = indexed(id, "zb")) return phase_variable(t, Basis::Complex, k, true);
    if (int k = indexed(id, "z")) return phase_variable(t, Basis::Complex, k, false);
    if (int k = indexed(id, "p")) {
      if (!options_.momentum_alias)
        throw ParseError("'" + id + "' is a momentum name; use eta" + id.substr(1) + " or enable the qp alias",
                         t.line, t.column);
      return phase_variable(t, Basis::Real, k, true);
    }
    return constant(ParamScalar::symbol(symbols::intern(id)));
  }

  PhasePolynomial finish(const PhasePolynomial& wide) {
    Basis basis = basis_.value_or(options_.basis.value_or(Basis::Real));
    if (options_.basis && basis_ && *options_.basis != *basis_)
      throw ParseError(std::string("expected ") + (*options_.basis == Basis::Real ? "real (q, eta)" : "complex (z, zb)") +
                           " variables",
                       tokens_.front().line, tokens_.front().column);
    int n = options_.n.value_or(std::max(1, max_index_));
    PhasePolynomial out(basis, n);
    for (const auto& [e, c] : wide.terms()) {
      ExponentVector f(2 * n);
      for (int j = 0; j < n; ++j) {
        f.set(j, e[j]);
        f.set(n + j, e[kWide + j]);
      }
      out.add_term(f, c);
    }
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  std::optional<Basis> basis_;
  int max_index_ = 0;
};

PhasePolynomial widen(const PhasePolynomial& p, int n) {
  if (p.n() == n) return p;
  PhasePolynomial out(p.basis(), n);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f(2 * n);
    for (int j = 0; j < p.n(); ++j) {
      f.set(j, e[j]);
      f.set(n + j, e[p.n() + j]);
    }
    out.add_term(f, c);
  }
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

PhasePolynomial parse_polynomial(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).parse();
}

ParamScalar parse_scalar(std::string_view text) {
  PhasePolynomial p = parse_polynomial(text);
  if (p.degree() > 0) throw ParseError("coefficient expression mentions a phase variable", 1, 1);
  return p.coefficient(ExponentVector(p.slots()));
}

SeriesDocument parse_series_document(std::string_view text, const ParseOptions& options) {
  SeriesDocument doc;
  struct Section {
    std::optional<int> degree;  // nullopt: plain expression
    std::string body;
    int first_line;
  };
  std::vector<Section> sections;
  std::optional<Basis> basis = options.basis;
  std::optional<int> n = options.n;

  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string t = trim(line);
    if (!t.empty() && t[0] == '#') {
      std::istringstream h(t.substr(1));
      std::string key;
      h >> key;
      std::string rest;
      std::getline(h, rest);
      rest = trim(rest);
      auto bad = [&](const std::string& what) { return ParseError(what, number, 1); };
      if (key == "kind") {
        if (rest == "series") doc.kind = SeriesDocument::Kind::Series;
        else if (rest == "second") doc.kind = SeriesDocument::Kind::SecondType;
        else if (rest == "third") doc.kind = SeriesDocument::Kind::ThirdType;
        else throw bad("unknown kind '" + rest + "'");
      } else if (key == "basis") {
        Basis b;
        if (rest == "real") b = Basis::Real;
        else if (rest == "complex") b = Basis::Complex;
        else throw bad("unknown basis '" + rest + "'");
        if (basis && *basis != b) throw bad("basis header contradicts the requested basis");
        basis = b;
      } else if (key == "n") {
        try {
          n = std::stoi(rest);
        } catch (const std::exception&) {
          throw bad("malformed n header");
        }
        if (*n < 1 || *n > kMaxDegreesOfFreedom) throw bad("unsupported n");
      } else if (key == "nu") {
        try {
          doc.nu = FrequencyVector::parse(rest);
        } catch (const Error& e) {
          throw bad(e.what());
        }
      } else if (key == "truncation") {
        try {
          doc.truncation = std::stoi(rest);
        } catch (const std::exception&) {
          throw bad("malformed truncation header");
        }
      } else if (key == "quadratic") {
        doc.quadratic = true;
      } else if (key == "degree") {
        int k = 0;
        try {
          k = std::stoi(rest);
        } catch (const std::exception&) {
          throw bad("malformed degree header");
        }
        if (k < 2) throw bad("degree sections start at 2");
        for (const auto& s : sections)
          if (s.degree == k) throw bad("duplicate section for degree " + std::to_string(k));
        sections.push_back({k, "", number + 1});
      }
      // Any other '#' line is a comment.
      continue;
    }
    if (t.empty()) continue;
    if (sections.empty() || (!sections.back().degree && sections.back().body.empty() && false))
      sections.push_back({std::nullopt, "", number});
    sections.back().body += line + "\n";
  }

  bool plain = false;
  for (const auto& s : sections) plain = plain || !s.degree;
  if (plain && sections.size() > 1)
    throw ParseError("expression text before the first '# degree' section", sections.front().first_line, 1);

  // Parse each section, then unify arity.
  std::vector<std::pair<std::optional<int>, PhasePolynomial>> parsed;
  int max_n = n.value_or(1);
  for (const auto& s : sections) {
    ParseOptions o = options;
    o.basis = basis;
    o.n = n;
    o.first_line = s.first_line;
    PhasePolynomial p = parse_polynomial(s.body, o);
    if (!basis && !p.is_zero() && p.degree() > 0) basis = p.basis();
    max_n = std::max(max_n, p.n());
    parsed.emplace_back(s.degree, std::move(p));
  }
  doc.basis = basis.value_or(Basis::Real);
  doc.n = max_n;
  if (doc.nu && doc.nu->n() != doc.n && !n) doc.n = doc.nu->n();

  for (auto& [degree, p] : parsed) {
    PhasePolynomial q = widen(p, doc.n);
    if (q.basis() != doc.basis) {
      if (!q.is_zero() && q.degree() > 0) throw ParseError("sections use different bases", 1, 1);
      PhasePolynomial retagged(doc.basis, doc.n);
      for (const auto& [e, c] : q.terms()) retagged.add_term(e, c);
      q = retagged;
    }
    if (degree) {
      if (!q.is_homogeneous(*degree))
        throw ParseError("section '# degree " + std::to_string(*degree) + "' is not homogeneous of that degree", 1, 1);
      if (*degree == 2) {
        doc.explicit_quadratic = q;
      } else if (!q.is_zero()) {
        doc.pieces[*degree] = q;
      }
    } else {
      for (int k = 0; k <= std::max(2, q.degree()); ++k) {
        PhasePolynomial part = q.homogeneous_part(k);
        if (k < 2) {
          if (!part.is_zero())
            throw Error(Error::Category::QuadraticPart,
                        "Hamiltonian has a nonzero degree-" + std::to_string(k) + " part");
        } else if (k == 2) {
          doc.explicit_quadratic = part;
        } else if (!part.is_zero()) {
          doc.pieces[k] = part;
        }
      }
    }
  }
  return doc;
}

namespace {

std::string header(const char* kind, Basis basis, int n, int truncation, const std::optional<FrequencyVector>& nu) {
  std::string out = std::string("# kind ") + kind + "\n";
  out += std::string("# basis ") + (basis == Basis::Real ? "real" : "complex") + "\n";
  out += "# n " + std::to_string(n) + "\n";
  if (nu) out += "# nu " + nu->str() + "\n";
  out += "# truncation " + std::to_string(truncation) + "\n";
  return out;
}

std::string sections(const std::map<int, PhasePolynomial>& pieces) {
  std::string out;
  for (const auto& [k, p] : pieces) {
    if (p.is_zero()) continue;
    out += "# degree " + std::to_string(k) + "\n" + to_string(p) + "\n";
  }
  return out;
}

}  // namespace

std::string format_series(const GradedSeries& s, const std::optional<FrequencyVector>& nu) {
  std::string out = header("series", s.basis(), s.n(), s.truncation(), nu);
  if (s.has_quadratic()) out += "# quadratic\n";
  return out + sections(s.pieces());
}

std::string format_generating_function(const GeneratingFunction& g, const std::optional<FrequencyVector>& nu) {
  const char* kind = g.kind() == GeneratingFunction::Kind::SecondType ? "second" : "third";
  return header(kind, g.basis(), g.n(), g.truncation(), nu) + sections(g.pieces());
}

GradedSeries series_from_document(const SeriesDocument& doc, const FrequencyVector& nu, int truncation) {
  if (doc.kind != SeriesDocument::Kind::Series) throw argument_error("file holds a generating function, not a series");
  if (nu.n() != doc.n)
    throw argument_error("frequency vector has " + std::to_string(nu.n()) + " entries but the file has n = " +
                         std::to_string(doc.n));
  if (doc.explicit_quadratic) {
    if (*doc.explicit_quadratic != quadratic_part(nu, doc.basis))
      throw Error(Error::Category::QuadraticPart,
                  "quadratic part is not sum_j nu_j/2 (q_j^2 + eta_j^2) for nu = (" + nu.str() +
                      "): got " + to_string(*doc.explicit_quadratic));
  } else if (!doc.quadratic) {
    throw Error(Error::Category::QuadraticPart, "series has no quadratic part");
  }
  GradedSeries out(doc.basis, doc.n, truncation, true);
  for (const auto& [k, p] : doc.pieces)
    if (k <= truncation) out.set_piece(k, p);
  return out;
}

GeneratingFunction generating_function_from_document(const SeriesDocument& doc, int truncation) {
  GeneratingFunction::Kind kind;
  if (doc.kind == SeriesDocument::Kind::SecondType) kind = GeneratingFunction::Kind::SecondType;
  else if (doc.kind == SeriesDocument::Kind::ThirdType) kind = GeneratingFunction::Kind::ThirdType;
  else throw argument_error("file holds a series, not a generating function");
  GeneratingFunction out(kind, doc.basis, doc.n, truncation);
  for (const auto& [k, p] : doc.pieces)
    if (k <= truncation) out.set_piece(k, p);
  return out;
}

}  // namespace bgnf
