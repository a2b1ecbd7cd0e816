#include "foliate/problem.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "foliate/error.hpp"

namespace foliate {

namespace {

struct Value {
  std::string text;
  int line = 0;
  // 1-based column of text[0] in the source line.
  int column = 0;
};

[[noreturn]] void fail(const Value& v, const std::string& what, std::size_t offset = 0) {
  throw ParseError(what, v.line, v.column + static_cast<int>(offset));
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Pieces of v split at `sep`, each trimmed, with their own columns.
std::vector<Value> split(const Value& v, char sep) {
  std::vector<Value> out;
  std::size_t start = 0;
  const std::string& s = v.text;
  while (true) {
    std::size_t end = s.find(sep, start);
    if (end == std::string::npos) end = s.size();
    std::size_t a = start;
    std::size_t b = end;
    while (a < b && is_space(s[a])) ++a;
    while (b > a && is_space(s[b - 1])) --b;
    out.push_back(Value{s.substr(a, b - a), v.line, v.column + static_cast<int>(a)});
    if (end == s.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<Value> words(const Value& v) {
  std::vector<Value> out;
  const std::string& s = v.text;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (is_space(s[i]) || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j]) && s[j] != ',') ++j;
    if (j > i) out.push_back(Value{s.substr(i, j - i), v.line, v.column + static_cast<int>(i)});
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(const Value& v) {
  std::uint64_t out = 0;
  const char* first = v.text.data();
  const char* last = first + v.text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (v.text.empty() || ec != std::errc() || ptr != last) fail(v, "expected a non-negative integer");
  return out;
}

Rational parse_rational(const Value& v) {
  const std::string& s = v.text;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  bool slash = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      ++digits;
    } else if (s[k] == '/' && !slash && digits > 0 && k + 1 < s.size()) {
      slash = true;
    } else {
      fail(v, "expected a rational number", k);
    }
  }
  if (digits == 0) fail(v, "expected a rational number");
  std::string text = s[0] == '+' ? s.substr(1) : s;
  Rational q;
  const auto bar = text.find('/');
  if (bar != std::string::npos && mpz_class(text.substr(bar + 1)) == 0) fail(v, "zero denominator", bar + 1);
  q.set_str(text, 10);
  q.canonicalize();
  return q;
}

Polynomial parse_poly(const Value& v, const VariableNames& names) {
  try {
    return parse_polynomial(v.text, names);
  } catch (const ParseError& e) {
    fail(v, e.message(), static_cast<std::size_t>(e.column() - 1));
  }
}

std::vector<Polynomial> parse_poly_list(const Value& v, const VariableNames& names) {
  std::vector<Polynomial> out;
  if (v.text.empty()) fail(v, "expected a comma-separated list of polynomials");
  for (const auto& piece : split(v, ',')) {
    if (piece.text.empty()) fail(piece, "empty list entry");
    out.push_back(parse_poly(piece, names));
  }
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

const std::set<std::string> kKeys = {"variables", "ring",  "weights", "derivation", "ideal",      "denominator",
                                     "X",         "T",     "max_steps", "degree_bound", "table_rows", "audit",
                                     "seed"};

std::string join_polys(const std::vector<Polynomial>& ps, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].to_string(names);
  }
  return out;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  std::map<std::string, Value> single;
  std::vector<Value> derivation_lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Value whole{raw, line_no, 1};
    std::size_t a = 0;
    while (a < raw.size() && is_space(raw[a])) ++a;
    if (a == raw.size()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) fail(whole, "expected `key = value`", a);
    std::size_t kb = eq;
    while (kb > a && is_space(raw[kb - 1])) --kb;
    const std::string key = raw.substr(a, kb - a);
    if (!kKeys.contains(key)) fail(whole, "unknown key `" + key + "`", a);
    std::size_t vb = eq + 1;
    while (vb < raw.size() && is_space(raw[vb])) ++vb;
    std::size_t ve = raw.size();
    while (ve > vb && is_space(raw[ve - 1])) --ve;
    Value value{raw.substr(vb, ve - vb), line_no, static_cast<int>(vb) + 1};
    if (key == "derivation") {
      derivation_lines.push_back(value);
    } else if (!single.emplace(key, value).second) {
      fail(whole, "duplicate key `" + key + "`", a);
    }
  }

  ProblemSpec spec;
  auto vars = single.find("variables");
  if (vars == single.end()) throw ParseError("missing `variables`", line_no > 0 ? line_no : 1, 1);
  for (const auto& w : words(vars->second)) {
    if (!valid_identifier(w.text)) fail(w, "invalid variable name `" + w.text + "`");
    for (const auto& prev : spec.variables) {
      if (prev == w.text) fail(w, "repeated variable `" + w.text + "`");
    }
    spec.variables.push_back(w.text);
  }
  if (spec.variables.empty()) fail(vars->second, "expected at least one variable");
  const std::size_t n = spec.nvars();
  const VariableNames& names = spec.variables;

  if (auto it = single.find("ring"); it != single.end()) {
    auto ws = words(it->second);
    if (ws.empty()) fail(it->second, "expected `polynomial` or `semigroup g1 g2 ...`");
    if (ws[0].text == "semigroup") {
      if (ws.size() < 2) fail(ws[0], "semigroup needs generator exponents");
      if (n != 1) fail(ws[0], "semigroup rings take exactly one variable");
      for (std::size_t k = 1; k < ws.size(); ++k) {
        const auto g = parse_uint(ws[k]);
        if (g == 0 || g > (1u << 16)) fail(ws[k], "generator exponents must lie in 1..65536");
        spec.semigroup.push_back(static_cast<Exponent>(g));
      }
      try {
        NumericalSemigroup check(spec.semigroup);
      } catch (const Error& e) {
        fail(ws[1], e.what());
      }
    } else if (ws[0].text != "polynomial" || ws.size() != 1) {
      fail(ws[0], "expected `polynomial` or `semigroup g1 g2 ...`");
    }
  }

  if (auto it = single.find("weights"); it != single.end()) {
    if (!derivation_lines.empty()) fail(it->second, "give either `weights` or `derivation` lines, not both");
    for (const auto& group : split(it->second, ';')) {
      std::vector<Rational> row;
      for (const auto& w : words(group)) row.push_back(parse_rational(w));
      if (row.size() != n) {
        fail(group, "expected " + std::to_string(n) + " weights, got " + std::to_string(row.size()));
      }
      spec.weights.push_back(std::move(row));
    }
  }
  for (const auto& d : derivation_lines) {
    if (!spec.semigroup.empty()) fail(d, "semigroup rings take `weights` only");
    auto coeffs = parse_poly_list(d, names);
    if (coeffs.size() != n) {
      fail(d, "expected " + std::to_string(n) + " coefficients, got " + std::to_string(coeffs.size()));
    }
    spec.derivations.push_back(std::move(coeffs));
  }

  if (auto it = single.find("ideal"); it != single.end()) {
    spec.ideal = parse_poly_list(it->second, names);
    bool nonzero = false;
    for (const auto& g : spec.ideal) nonzero = nonzero || !g.is_zero();
    if (!nonzero) fail(it->second, "the ideal must be nonzero");
  }
  if (auto it = single.find("denominator"); it != single.end()) {
    spec.denominator = parse_poly(it->second, names);
    if (spec.denominator->is_zero()) fail(it->second, "zero denominator");
  }
  if (auto it = single.find("X"); it != single.end()) spec.x_space = parse_poly_list(it->second, names);
  if (auto it = single.find("T"); it != single.end()) spec.t_space = parse_poly_list(it->second, names);
  if (auto it = single.find("max_steps"); it != single.end()) {
    spec.max_steps = parse_uint(it->second);
    if (spec.max_steps < 1 || spec.max_steps > 64) fail(it->second, "max_steps must lie in 1..64");
  }
  if (auto it = single.find("degree_bound"); it != single.end()) {
    const auto b = parse_uint(it->second);
    if (b > 4096) fail(it->second, "degree_bound must be at most 4096");
    spec.degree_bound = static_cast<std::uint32_t>(b);
  }
  if (auto it = single.find("table_rows"); it != single.end()) {
    const auto b = parse_uint(it->second);
    if (b > 256) fail(it->second, "table_rows must be at most 256");
    spec.table_rows = static_cast<std::uint32_t>(b);
  }
  if (auto it = single.find("audit"); it != single.end()) {
    if (it->second.text == "true") {
      spec.audit = true;
    } else if (it->second.text != "false") {
      fail(it->second, "expected `true` or `false`");
    }
  }
  if (auto it = single.find("seed"); it != single.end()) spec.seed = parse_uint(it->second);
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem(text.str());
}

std::string print_problem(const ProblemSpec& spec) {
  const VariableNames& names = spec.variables;
  std::ostringstream out;
  out << "variables = ";
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
  out << "\n";
  if (spec.semigroup.empty()) {
    out << "ring = polynomial\n";
  } else {
    out << "ring = semigroup";
    for (auto g : spec.semigroup) out << " " << g;
    out << "\n";
  }
  if (!spec.weights.empty()) {
    out << "weights = ";
    for (std::size_t d = 0; d < spec.weights.size(); ++d) {
      if (d) out << "; ";
      for (std::size_t k = 0; k < spec.weights[d].size(); ++k) out << (k ? " " : "") << spec.weights[d][k].get_str();
    }
    out << "\n";
  }
  for (const auto& d : spec.derivations) out << "derivation = " << join_polys(d, names) << "\n";
  if (!spec.ideal.empty()) out << "ideal = " << join_polys(spec.ideal, names) << "\n";
  if (spec.denominator) out << "denominator = " << spec.denominator->to_string(names) << "\n";
  if (!spec.x_space.empty()) out << "X = " << join_polys(spec.x_space, names) << "\n";
  if (!spec.t_space.empty()) out << "T = " << join_polys(spec.t_space, names) << "\n";
  out << "max_steps = " << spec.max_steps << "\n";
  out << "degree_bound = " << spec.degree_bound << "\n";
  out << "table_rows = " << spec.table_rows << "\n";
  out << "audit = " << (spec.audit ? "true" : "false") << "\n";
  out << "seed = " << spec.seed << "\n";
  return out.str();
}

Ambient spec_ambient(const ProblemSpec& spec) {
  return spec.semigroup.empty() ? Ambient::polynomial(spec.nvars()) : Ambient::semigroup_ring(spec.semigroup);
}

Foliation spec_foliation(const ProblemSpec& spec) {
  if (!spec.has_foliation()) throw Error("the problem defines no foliation (`weights` or `derivation`)");
  if (!spec.weights.empty()) {
    // Stored per derivation; the foliation wants one row per variable.
    std::vector<std::vector<Rational>> rows(spec.nvars(), std::vector<Rational>(spec.weights.size()));
    for (std::size_t d = 0; d < spec.weights.size(); ++d) {
      for (std::size_t k = 0; k < spec.nvars(); ++k) rows[k][d] = spec.weights[d][k];
    }
    return Foliation::diagonal(rows);
  }
  std::vector<Derivation> ds;
  for (const auto& c : spec.derivations) ds.emplace_back(c);
  return Foliation(std::move(ds));
}

FoliatedRing spec_ring(const ProblemSpec& spec) { return FoliatedRing(spec_ambient(spec), spec_foliation(spec)); }

FractionalIdeal spec_ideal(const ProblemSpec& spec) {
  const Ambient ambient = spec_ambient(spec);
  const Polynomial den = spec.denominator ? *spec.denominator : Polynomial::one(spec.nvars());
  if (spec.ideal.empty()) return FractionalIdeal(MonomialIdeal::unit(ambient), den);
  std::vector<Polynomial> gens;
  for (const auto& g : spec.ideal) {
    if (!g.is_zero()) gens.push_back(g);
  }
  bool monomial = true;
  for (const auto& g : gens) monomial = monomial && g.is_term();
  if (monomial) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) {
      if (ambient.semigroup && !ambient.semigroup->contains(g.leading_monomial()[0])) {
        throw Error("generator " + g.to_string(spec.variables) + " is not in the semigroup ring");
      }
      ms.push_back(g.leading_monomial());
    }
    return FractionalIdeal(MonomialIdeal(ambient, std::move(ms)), den);
  }
  if (ambient.is_semigroup()) throw Error("semigroup rings take monomial generators only");
  return FractionalIdeal(PolyIdeal(spec.nvars(), std::move(gens)), den);
}

}  // namespace foliate
