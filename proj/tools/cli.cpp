#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "bgnf/bdic.hpp"
#include "bgnf/compose.hpp"
#include "bgnf/error.hpp"
#include "bgnf/normalizer.hpp"
#include "bgnf/restorer.hpp"
#include "bgnf/text.hpp"

namespace bgnf::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw argument_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw argument_error("cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

Basis parse_basis(const std::string& s) {
  if (s == "real") return Basis::Real;
  if (s == "complex") return Basis::Complex;
  throw argument_error("unknown basis '" + s + "'");
}

// Shared state of one invocation: the report and where artifacts go.
struct Report {
  std::string command;
  json inputs = json::object();
  std::string verdict;
  json residuals = json::object();
  json extra = json::object();
  double timing_ms = 0;

  json to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["verdict"] = verdict;
    j["residuals"] = residuals;
    j["timing_ms"] = timing_ms;
    for (const auto& [k, v] : extra.items()) j[k] = v;
    return j;
  }
};

// Writes an artifact to a file, or keeps it for stdout.
struct Sink {
  std::optional<std::string> path;
  std::string text;
};

FrequencyVector resolve_nu(const std::string& flag, const SeriesDocument& doc) {
  if (!flag.empty()) return FrequencyVector::parse(flag);
  if (doc.nu) return *doc.nu;
  throw argument_error("no frequencies given: pass --nu or add a '# nu' header");
}

// Every emitted series file must parse back to the value it came from.
void check_series_roundtrip(const std::string& text, const GradedSeries& s, const FrequencyVector& nu) {
  SeriesDocument doc = parse_series_document(text);
  if (!(series_from_document(doc, nu, s.truncation()) == s))
    throw precondition_error("emitted series does not re-parse to the computed value");
}

void check_generating_roundtrip(const std::string& text, const GeneratingFunction& g) {
  SeriesDocument doc = parse_series_document(text);
  if (!(generating_function_from_document(doc, g.truncation()) == g))
    throw precondition_error("emitted generating function does not re-parse to the computed value");
}

// ---- normalize -------------------------------------------------------------

struct NormalizeArgs {
  std::string input, output, emit_generating, nu, basis, vars = "qeta";
  int degree = 0;
};

int cmd_normalize(const NormalizeArgs& a, Report& report, std::vector<Sink>& sinks) {
  report.inputs = {{"input", a.input}, {"degree", a.degree}, {"nu", a.nu}, {"vars", a.vars}};
  if (a.degree < 2) throw argument_error("--degree must be at least 2");
  ParseOptions opts;
  opts.momentum_alias = a.vars == "qp";
  SeriesDocument doc = parse_series_document(read_file(a.input), opts);
  FrequencyVector nu = resolve_nu(a.nu, doc);
  GradedSeries K = series_from_document(doc, nu, a.degree);
  NormalForm nf = normalize(K, nu, a.degree);
  bool ok = verify_defining_equation(K, nf.G, nf.W, nu, a.degree);

  Basis basis = a.basis.empty() ? K.basis() : parse_basis(a.basis);
  GradedSeries G = nf.G.in_basis(basis);
  GeneratingFunction W = nf.W.in_basis(basis);
  std::string g_text = format_series(G, nu);
  check_series_roundtrip(g_text, G, nu);
  sinks.push_back({a.output.empty() ? std::nullopt : std::optional<std::string>(a.output), g_text});
  if (!a.emit_generating.empty()) {
    std::string w_text = format_generating_function(W, nu);
    check_generating_roundtrip(w_text, W);
    sinks.push_back({a.emit_generating, w_text});
  }
  report.residuals["defining_equation"] = ok ? "0" : "nonzero";
  report.verdict = ok ? "OK" : "FAILED";
  return ok ? kOk : kPropertyFailure;
}

// ---- restore ---------------------------------------------------------------

RestoreChoices parse_choice_file(const std::string& text, int n) {
  RestoreChoices choices;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (t.rfind("degree", 0) != 0 || colon == std::string::npos)
      throw ParseError("expected 'degree k: zero | fresh <prefix> | explicit <polynomial>'", line_no, 1);
    int k = 0;
    try {
      k = std::stoi(trim(t.substr(6, colon - 6)));
    } catch (const std::exception&) {
      throw ParseError("bad degree", line_no, 8);
    }
    std::string rest = trim(t.substr(colon + 1));
    if (rest == "zero") {
      choices.set(k, RestoreChoice::zero());
    } else if (rest.rfind("fresh", 0) == 0) {
      std::string prefix = trim(rest.substr(5));
      if (prefix.empty()) throw ParseError("fresh needs a prefix", line_no, static_cast<int>(colon) + 2);
      choices.set(k, RestoreChoice::fresh(prefix));
    } else if (rest.rfind("explicit", 0) == 0) {
      ParseOptions o;
      o.n = n;
      o.first_line = line_no;
      choices.set(k, RestoreChoice::explicit_polynomial(parse_polynomial(rest.substr(8), o)));
    } else {
      throw ParseError("unknown choice '" + rest + "'", line_no, static_cast<int>(colon) + 2);
    }
  }
  return choices;
}

RestoreChoices resolve_choices(const std::string& spec, int n) {
  if (spec.empty() || spec == "zero") return RestoreChoices();
  if (spec.rfind("fresh:", 0) == 0) {
    std::vector<std::string> prefixes;
    for (const auto& p : split(spec.substr(6), ',')) {
      if (trim(p).empty()) throw argument_error("empty prefix in --choices");
      prefixes.push_back(trim(p));
    }
    return RestoreChoices::fresh(prefixes);
  }
  return parse_choice_file(read_file(spec), n);
}

struct RestoreArgs {
  std::string input, output, emit_generating, nu, choices = "zero", basis;
  int degree = 0;
  bool staged = false, direct = false, both = false;
};

int cmd_restore(const RestoreArgs& a, Report& report, std::vector<Sink>& sinks) {
  std::string mode = a.both ? "both" : (a.staged ? "staged" : "direct");
  report.inputs = {{"input", a.input}, {"degree", a.degree}, {"nu", a.nu}, {"choices", a.choices}, {"mode", mode}};
  if (a.degree < 2) throw argument_error("--degree must be at least 2");
  SeriesDocument doc = parse_series_document(read_file(a.input));
  FrequencyVector nu = resolve_nu(a.nu, doc);
  GradedSeries G = series_from_document(doc, nu, a.degree);
  RestoreChoices choices = resolve_choices(a.choices, G.n());
  Basis basis = a.basis.empty() ? G.basis() : parse_basis(a.basis);

  bool ok = true;
  GradedSeries H;
  std::string s_text;
  if (mode != "staged") {
    InverseSolution sol = restore_direct(G, nu, a.degree, choices);
    bool eq = verify_inverse_equation(sol.H, G, sol.S, nu, a.degree);
    report.residuals["inverse_equation"] = eq ? "0" : "nonzero";
    ok = ok && eq;
    H = sol.H;
    GeneratingFunction S = sol.S.in_basis(basis);
    s_text = format_generating_function(S, nu);
    check_generating_roundtrip(s_text, S);
  }
  if (mode != "direct") {
    StagedSolution st = restore_staged(G, nu, a.degree, choices);
    GeneratingFunction chain = compose_chain(st.S_pieces, G.n(), a.degree, G.basis());
    bool eq = transform_hamiltonian(G, chain, nu, a.degree) == st.H;
    report.residuals["staged_chain"] = eq ? "0" : "nonzero";
    ok = ok && eq;
    if (mode == "both") {
      bool same = st.H == H;
      report.residuals["staged_minus_direct"] = same ? "0" : "nonzero";
      ok = ok && same;
    } else {
      H = st.H;
      GeneratingFunction stages(GeneratingFunction::Kind::ThirdType, G.basis(), G.n(), a.degree);
      for (const auto& [r, p] : st.S_pieces) stages.set_piece(r, p);
      stages = stages.in_basis(basis);
      s_text = "# stages: one generator per degree, applied in order\n" + format_generating_function(stages, nu);
      check_generating_roundtrip(s_text, stages);
    }
  }
  GradedSeries out = H.in_basis(basis);
  std::string h_text = format_series(out, nu);
  check_series_roundtrip(h_text, out, nu);
  sinks.push_back({a.output.empty() ? std::nullopt : std::optional<std::string>(a.output), h_text});
  if (!a.emit_generating.empty()) sinks.push_back({a.emit_generating, s_text});
  report.verdict = ok ? "OK" : "FAILED";
  return ok ? kOk : kPropertyFailure;
}

// ---- bdic ------------------------------------------------------------------

template <std::size_t N>
std::array<ParamScalar, N> parse_coefficients(const std::string& text, const char* flag) {
  auto parts = split(text, ',');
  if (parts.size() != N)
    throw argument_error(std::string(flag) + " expects " + std::to_string(N) + " comma-separated coefficients");
  std::array<ParamScalar, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = parse_scalar(parts[i]);
  return out;
}

std::string verdict_of(const std::optional<bool>& satisfied) {
  if (!satisfied) return "SYMBOLIC";
  return *satisfied ? "SATISFIED" : "VIOLATED";
}

struct BdicArgs {
  std::string type, f, g, input, form = "standard";
  std::vector<std::string> values;
};

int cmd_bdic(const BdicArgs& a, Report& report, std::ostream& out) {
  report.inputs = {{"type", a.type}};
  if (a.type == "phocp") {
    if (a.f.empty()) throw argument_error("--type phocp needs --f");
    report.inputs["f"] = a.f;
    CubicCoefficients f = parse_coefficients<4>(a.f, "--f");
    PhocpReport r = bdic_phocp(f);
    report.residuals["bdic_phocp"] = to_string(r.residual);
    report.residuals["branch_b"] = r.branch_b;
    report.residuals["branch_c"] = r.branch_c;
    QuarticCoefficients g = map_g_from_f(f);
    json gj = json::array();
    for (const auto& c : g) gj.push_back(to_string(c));
    report.extra["quartic_partner"] = gj;
    report.verdict = verdict_of(r.satisfied);
    out << "residual 3(f1 f3 + f2 f4) - (f2^2 + f3^2) = " << to_string(r.residual) << "\n";
    out << "branch f1 = 2 f3, f2 = f4 = 0: " << (r.branch_b ? "yes" : "no") << "\n";
    out << "branch f4 = 2 f2, f1 = f3 = 0: " << (r.branch_c ? "yes" : "no") << "\n";
    out << "quartic partner g =";
    for (const auto& c : g) out << " [" << to_string(c) << "]";
    out << "\n";
  } else if (a.type == "phoqp") {
    if (a.g.empty()) throw argument_error("--type phoqp needs --g");
    report.inputs["g"] = a.g;
    PhoqpReport r = bdic_phoqp(parse_coefficients<5>(a.g, "--g"));
    json res = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      res.push_back(to_string(r.residuals[i]));
      out << "residual " << i + 1 << " = " << to_string(r.residuals[i]) << "\n";
    }
    report.residuals["bdic_phoqp"] = res;
    report.residuals["branch_a"] = r.branch_a;
    out << "branch g3 = 2 g1 = 2 g5, g2 = g4 = 0: " << (r.branch_a ? "yes" : "no") << "\n";
    report.verdict = verdict_of(r.satisfied);
  } else if (a.type == "general") {
    PhasePolynomial V;
    if (!a.input.empty()) {
      ParseOptions o;
      o.n = 2;
      o.basis = Basis::Real;
      V = parse_polynomial(read_file(a.input), o);
      report.inputs["input"] = a.input;
    } else if (!a.f.empty()) {
      V = harmonic_potential() + cubic_potential(parse_coefficients<4>(a.f, "--f"));
      report.inputs["f"] = a.f;
    } else if (!a.g.empty()) {
      V = harmonic_potential() + quartic_potential(parse_coefficients<5>(a.g, "--g"));
      report.inputs["g"] = a.g;
    } else {
      throw argument_error("--type general needs --input, --f or --g");
    }
    std::map<SymbolId, Rational> instance;
    for (const auto& v : a.values) {
      auto eq = v.find('=');
      if (eq == std::string::npos) throw argument_error("--set expects name=value");
      std::string name = trim(v.substr(0, eq));
      if (!symbols::is_valid_name(name)) throw argument_error("bad parameter name '" + name + "'");
      instance[symbols::intern(name)] = Rational::parse(trim(v.substr(eq + 1)));
    }
    if (a.form != "standard" && a.form != "printed") throw argument_error("--form is standard or printed");
    report.inputs["form"] = a.form;
    BdicWitness w = bdic_general(V, instance, a.form == "printed" ? BdicForm::AsPrinted : BdicForm::Standard);
    json basis = json::array();
    out << "witness basis (alpha, beta, beta', gamma, gamma'): " << w.basis.size() << "\n";
    for (const auto& vec : w.basis) {
      json row = json::array();
      out << " ";
      for (const auto& x : vec) {
        row.push_back(x.str());
        out << " " << x.str();
      }
      out << "\n";
      basis.push_back(row);
    }
    report.residuals["witness_dimension"] = w.basis.size();
    report.extra["witness_basis"] = basis;
    report.verdict = w.nontrivial() ? "SATISFIED" : "VIOLATED";
  } else {
    throw argument_error("--type must be phocp, phoqp or general");
  }
  out << report.verdict << "\n";
  return kOk;
}

// ---- roundtrip -------------------------------------------------------------

struct RoundtripArgs {
  std::uint64_t seed = 1;
  int cases = 10, degree = 4, terms = 4;
  std::string nu = "1,1";
  bool inject_fault = false;
};

GradedSeries random_case(std::uint64_t seed, const FrequencyVector& nu, int rho, int terms) {
  std::mt19937_64 gen(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  GradedSeries K(Basis::Real, nu.n(), rho, true);
  for (int k = 3; k <= rho; ++k) {
    auto monomials = monomials_of_degree(2 * nu.n(), k);
    PhasePolynomial p(Basis::Real, nu.n());
    for (int t = 0; t < terms; ++t) {
      int num = 0;
      while (num == 0) num = uniform(-5, 5);
      p.add_term(monomials[static_cast<std::size_t>(uniform(0, static_cast<int>(monomials.size()) - 1))],
                 Rational(num, uniform(1, 4)));
    }
    K.set_piece(k, p);
  }
  return K;
}

// Empty string when the cycle holds; otherwise the first property that broke.
std::string check_cycle(const GradedSeries& K, const FrequencyVector& nu, int rho, bool inject_fault) {
  NormalForm nf = normalize(K, nu, rho);
  if (!verify_defining_equation(K, nf.G, nf.W, nu, rho)) return "ordinary defining equation";
  InverseSolution sol = restore_direct(nf.G, nu, rho, RestoreChoices());
  if (!verify_inverse_equation(sol.H, nf.G, sol.S, nu, rho)) return "inverse defining equation";
  StagedSolution st = restore_staged(nf.G, nu, rho, RestoreChoices());
  if (!(st.H == sol.H)) return "staged differs from direct";
  GradedSeries H = sol.H;
  if (inject_fault) {
    ExponentVector e(2 * nu.n());
    e.set(0, 2);
    e.set(nu.n(), 2);
    H.set_piece(4, H.piece(4) + PhasePolynomial::monomial(Basis::Real, nu.n(), e));
  }
  NormalForm again = normalize(H, nu, rho);
  if (!verify_defining_equation(H, again.G, again.W, nu, rho)) return "ordinary defining equation on H";
  if (!(again.G == nf.G)) return "normalize(restore(G)) differs from G";
  return "";
}

// Greedy term deletion while the failure persists.
GradedSeries minimize(GradedSeries K, const FrequencyVector& nu, int rho, bool inject_fault) {
  bool progress = true;
  while (progress) {
    progress = false;
    const auto pieces = K.pieces();
    for (const auto& [k, piece] : pieces) {
      for (const auto& [e, c] : piece.terms()) {
        GradedSeries trial = K;
        PhasePolynomial p = trial.piece(k);
        p.add_term(e, -c);
        trial.set_piece(k, p);
        if (!check_cycle(trial, nu, rho, inject_fault).empty()) {
          K = trial;
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  return K;
}

int cmd_roundtrip(const RoundtripArgs& a, Report& report, std::ostream& out) {
  report.inputs = {{"seed", a.seed},   {"cases", a.cases}, {"degree", a.degree},
                   {"nu", a.nu},       {"terms", a.terms}, {"inject_fault", a.inject_fault}};
  if (a.cases < 0) throw argument_error("--cases must be non-negative");
  if (a.degree < 4 && a.inject_fault) throw argument_error("--inject-fault needs --degree >= 4");
  if (a.degree < 3) throw argument_error("--degree must be at least 3");
  FrequencyVector nu = FrequencyVector::parse(a.nu);
  json cases = json::array();
  int failures = 0;
  for (int i = 0; i < a.cases; ++i) {
    auto start = Clock::now();
    std::uint64_t seed = a.seed * 1000003u + static_cast<std::uint64_t>(i);
    GradedSeries K = random_case(seed, nu, a.degree, a.terms);
    std::string failure = check_cycle(K, nu, a.degree, a.inject_fault);
    double ms = elapsed_ms(start);
    json c = {{"case", i}, {"ok", failure.empty()}, {"timing_ms", ms}};
    out << "case " << i << ": " << (failure.empty() ? "ok" : "FAILED (" + failure + ")") << " " << ms << " ms\n";
    if (!failure.empty()) {
      ++failures;
      GradedSeries small = minimize(K, nu, a.degree, a.inject_fault);
      std::string text = format_series(small, nu);
      out << "minimized counterexample:\n" << text;
      c["failure"] = failure;
      c["counterexample"] = text;
    }
    cases.push_back(c);
    if (!failure.empty()) break;
  }
  report.residuals["failures"] = failures;
  report.extra["cases"] = cases;
  report.verdict = failures == 0 ? "OK" : "FAILED";
  out << report.verdict << "\n";
  return failures == 0 ? kOk : kPropertyFailure;
}

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case Error::Category::Parse:
    case Error::Category::Argument:
      return kParseFailure;
    case Error::Category::QuadraticPart:
      return kQuadraticPart;
    case Error::Category::NotNormalForm:
      return kNotNormalForm;
    case Error::Category::Precondition:
      return kPropertyFailure;
  }
  return kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birkhoff-Gustavson normalization, inverse problem and Bertrand-Darboux checks", "bgnf"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "print the report as one JSON object");

  NormalizeArgs na;
  auto* normalize_cmd = app.add_subcommand("normalize", "BG-normalize a Hamiltonian");
  normalize_cmd->add_option("--input", na.input, "Hamiltonian file")->required();
  normalize_cmd->add_option("--degree", na.degree, "truncation degree")->required();
  normalize_cmd->add_option("--nu", na.nu, "frequencies, comma separated");
  normalize_cmd->add_option("--output", na.output, "normal form file (stdout if absent)");
  normalize_cmd->add_option("--emit-generating", na.emit_generating, "generating function file");
  normalize_cmd->add_option("--basis", na.basis, "output basis: real or complex");
  normalize_cmd->add_option("--vars", na.vars, "qp accepts p1..pn for eta1..etan");

  RestoreArgs ra;
  auto* restore_cmd = app.add_subcommand("restore", "solve the inverse problem for a normal form");
  restore_cmd->add_option("--input", ra.input, "normal form file")->required();
  restore_cmd->add_option("--degree", ra.degree, "truncation degree")->required();
  restore_cmd->add_option("--nu", ra.nu, "frequencies, comma separated");
  restore_cmd->add_option("--choices", ra.choices, "zero, fresh:PREFIX[,PREFIX...] or a choice file");
  restore_cmd->add_option("--output", ra.output, "Hamiltonian file (stdout if absent)");
  restore_cmd->add_option("--emit-generating", ra.emit_generating, "generating function file");
  restore_cmd->add_option("--basis", ra.basis, "output basis: real or complex");
  auto* staged = restore_cmd->add_flag("--staged", ra.staged, "stage by stage");
  auto* direct = restore_cmd->add_flag("--direct", ra.direct, "single generating function (default)");
  auto* both = restore_cmd->add_flag("--both", ra.both, "run both and require equal results");
  staged->excludes(direct)->excludes(both);
  direct->excludes(both);

  BdicArgs ba;
  auto* bdic_cmd = app.add_subcommand("bdic", "Bertrand-Darboux integrability conditions");
  bdic_cmd->add_option("--type", ba.type, "phocp, phoqp or general")->required();
  bdic_cmd->add_option("--f", ba.f, "cubic coefficients f1,f2,f3,f4");
  bdic_cmd->add_option("--g", ba.g, "quartic coefficients g1,...,g5");
  bdic_cmd->add_option("--input", ba.input, "potential file (general)");
  bdic_cmd->add_option("--set", ba.values, "parameter value name=rational (general)");
  bdic_cmd->add_option("--form", ba.form, "standard or printed (general)");

  RoundtripArgs ta;
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "normalize -> restore -> normalize fuzzing");
  roundtrip_cmd->add_option("--seed", ta.seed, "random seed");
  roundtrip_cmd->add_option("--cases", ta.cases, "number of cases");
  roundtrip_cmd->add_option("--degree", ta.degree, "truncation degree");
  roundtrip_cmd->add_option("--nu", ta.nu, "frequencies, comma separated");
  roundtrip_cmd->add_option("--terms", ta.terms, "random terms per degree");
  roundtrip_cmd->add_flag("--inject-fault", ta.inject_fault, "corrupt each restored H (harness self-test)");

  for (auto* sub : {normalize_cmd, restore_cmd, bdic_cmd, roundtrip_cmd})
    sub->add_flag("--json", as_json, "print the report as one JSON object");

  std::vector<const char*> argv{"bgnf"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  }

  Report report;
  std::vector<Sink> sinks;
  std::ostringstream text;
  auto start = Clock::now();
  int code = kOk;
  try {
    if (normalize_cmd->parsed()) {
      report.command = "normalize";
      code = cmd_normalize(na, report, sinks);
    } else if (restore_cmd->parsed()) {
      report.command = "restore";
      code = cmd_restore(ra, report, sinks);
    } else if (bdic_cmd->parsed()) {
      report.command = "bdic";
      code = cmd_bdic(ba, report, text);
    } else {
      report.command = "roundtrip";
      code = cmd_roundtrip(ta, report, text);
    }
    for (const auto& s : sinks)
      if (s.path) write_file(*s.path, s.text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = exit_code_for(e);
    report.verdict = "ERROR";
    report.extra["error"] = e.what();
    if (!as_json) return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPropertyFailure;
  }
  report.timing_ms = elapsed_ms(start);

  std::string stdout_artifact;
  for (const auto& s : sinks)
    if (!s.path) stdout_artifact += s.text;
  if (as_json) {
    json j = report.to_json();
    if (!stdout_artifact.empty()) j["output"] = stdout_artifact;
    out << j.dump(2) << "\n";
  } else {
    out << stdout_artifact << text.str();
    if (!stdout_artifact.empty() || report.command == "normalize" || report.command == "restore")
      err << report.command << ": " << report.verdict << "\n";
  }
  return code;
}

}  // namespace bgnf::cli
