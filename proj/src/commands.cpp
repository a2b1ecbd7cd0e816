#include "foliate/commands.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "foliate/error.hpp"
#include "foliate/graded.hpp"
#include "foliate/linsys.hpp"
#include "foliate/toric.hpp"

namespace foliate {

std::string Report::sidecar() const {
  std::string out = "command=" + command + "\nexit_code=" + std::to_string(exit_code) + "\n";
  for (const auto& [k, v] : fields) out += k + "=" + v + "\n";
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string elapsed_since(Clock::time_point start) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << std::chrono::duration<double>(Clock::now() - start).count() << " s";
  return s.str();
}

std::string describe_ring(const ProblemSpec& spec) {
  std::string vars;
  for (std::size_t i = 0; i < spec.variables.size(); ++i) vars += (i ? ", " : "") + spec.variables[i];
  if (spec.semigroup.empty()) return "k[" + vars + "]";
  std::string gens;
  for (std::size_t i = 0; i < spec.semigroup.size(); ++i) {
    gens += (i ? ", " : "") + spec.variables[0] + "^" + std::to_string(spec.semigroup[i]);
  }
  return "k[" + gens + "]";
}

std::string describe_foliation(const ProblemSpec& spec) {
  const VariableNames& names = spec.variables;
  std::string out;
  auto add = [&](const std::string& d) { out += (out.empty() ? "" : "; ") + d; };
  for (const auto& w : spec.weights) {
    std::string d;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == 0) continue;
      if (!d.empty()) d += " + ";
      d += (w[k] == 1 ? "" : w[k].get_str() + "*") + names[k] + " d/d" + names[k];
    }
    add(d.empty() ? "0" : d);
  }
  for (const auto& c : spec.derivations) {
    std::string d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      if (!d.empty()) d += " + ";
      d += "(" + c[k].to_string(names) + ") d/d" + names[k];
    }
    add(d.empty() ? "0" : d);
  }
  return out;
}

IterateOptions iterate_options(const ProblemSpec& spec, const CommandOptions& options) {
  IterateOptions it;
  it.max_steps = options.max_steps.value_or(spec.max_steps);
  it.audit = options.audit || spec.audit;
  return it;
}

std::uint64_t seed_of(const ProblemSpec* spec, const CommandOptions& options) {
  return options.seed.value_or(spec ? spec->seed : 0);
}

PolySpan span_of(const ProblemSpec& spec, const std::vector<Polynomial>& ps) {
  return span_reduce(spec.nvars(), ps);
}

// Random polynomial with small integer coefficients.
Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<unsigned> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Polynomial p(nvars);
  const unsigned terms = count(rng);
  for (unsigned k = 0; k < terms; ++k) {
    std::vector<Exponent> e(nvars, 0);
    const unsigned d = deg(rng);
    for (unsigned j = 0; j < d; ++j) ++e[var(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(c, Monomial(e));
  }
  return p;
}

Foliation random_foliation(std::mt19937_64& rng, std::size_t nvars, std::size_t r) {
  std::vector<Derivation> ds;
  for (std::size_t d = 0; d < r; ++d) {
    std::vector<Polynomial> coeffs;
    for (std::size_t k = 0; k < nvars; ++k) coeffs.push_back(random_poly(rng, nvars, 1, 2));
    ds.emplace_back(std::move(coeffs));
  }
  return Foliation(std::move(ds));
}

}  // namespace

Report cmd_resolve(const ProblemSpec& spec, const CommandOptions& options) {
  const auto start = Clock::now();
  const VariableNames& names = spec.variables;
  const FoliatedRing ring = spec_ring(spec);
  const FractionalIdeal seed = spec_ideal(spec);
  const IterateOptions it = iterate_options(spec, options);
  const GaussState s = iterate(seed, ring, it);
  const FiniteTypeVerdict ft = finite_type_verdict(s, names);
  const std::string rp = std::to_string(s.r + 2);

  Report rep;
  rep.command = "resolve";
  std::ostringstream h;
  h << "ring: " << describe_ring(spec) << "\n";
  h << "foliation (r = " << s.r << "): " << describe_foliation(spec) << "\n";
  h << "ideal I = " << seed.to_string(names) << "\n";
  h << "route: " << (s.monomial_path ? "exponent vectors" : "determinants and Groebner bases") << "\n";
  rep.add("r", std::to_string(s.r));
  rep.add("route", s.monomial_path ? "monomial" : "general");
  rep.add("max_steps", std::to_string(s.max_steps));
  for (std::size_t i = 0; i < s.L.size(); ++i) {
    h << "J_" << i << " = " << s.J[i].to_string(names) << "\n";
    h << "L_" << i << " = " << s.L[i].to_string(names) << "\n";
    rep.add("J." + std::to_string(i), s.J[i].to_string(names));
    rep.add("L." + std::to_string(i), s.L[i].to_string(names));
  }
  for (std::size_t t = 0; t < s.stabilization_checks.size(); ++t) {
    const bool ok = s.stabilization_checks[t];
    h << "t = " << t << ": L_" << t << "^" << rp << (ok ? " == " : " != ") << "L_" << t + 1 << "\n";
    rep.add("check." + std::to_string(t), ok ? "equal" : "different");
  }
  for (const auto& d : s.diagnostics) h << d << "\n";

  switch (s.verdict) {
    case Verdict::stabilized:
      h << "verdict: stabilized at t=" << s.t << ", L_" << s.t << "^" << rp << " = L_" << s.t + 1 << "\n";
      rep.exit_code = kExitSuccess;
      break;
    case Verdict::toric_nonresolvable:
      h << "verdict: not resolvable, toric certificate: " << s.toric_certificate->explanation << "\n";
      rep.exit_code = kExitNegative;
      break;
    case Verdict::inconclusive:
      if (s.stabilization_checks.empty()) {
        h << "verdict: inconclusive, no stabilization test completed\n";
      } else {
        h << "verdict: inconclusive, no stabilization for t = 0.." << s.stabilization_checks.size() - 1 << "\n";
      }
      rep.exit_code = s.resource_exhausted ? kExitResource : kExitInconclusive;
      break;
  }
  const char* kind = ft.kind == FiniteType::finite_type       ? "finite_type"
                     : ft.kind == FiniteType::not_finite_type ? "not_finite_type"
                                                              : "unknown";
  h << "graded ring R(I): " << kind;
  if (ft.kind == FiniteType::finite_type) h << "(" << ft.t << ")";
  if (ft.kind == FiniteType::unknown) h << "(" << ft.bound << ")";
  h << "\nevidence: " << ft.evidence << "\n";
  h << "elapsed: " << elapsed_since(start) << "\n";

  rep.add("verdict", to_string(s.verdict));
  if (s.verdict == Verdict::stabilized) rep.add("t", std::to_string(s.t));
  rep.add("finite_type", kind);
  rep.add("evidence", ft.evidence);
  if (s.toric_certificate) rep.add("toric_resolvable", s.toric_certificate->resolvable ? "true" : "false");
  rep.add("resource_exhausted", s.resource_exhausted ? "true" : "false");
  rep.human = h.str();
  return rep;
}

Report cmd_ring(const ProblemSpec& spec, const CommandOptions& options) {
  const auto start = Clock::now();
  const VariableNames& names = spec.variables;
  const FoliatedRing ring = spec_ring(spec);
  const FractionalIdeal seed = spec_ideal(spec);
  if (!ring.monomial_path(seed)) {
    throw Error("the ring table needs diagonal weights and a monomial ideal; this problem uses the general route");
  }
  const std::uint32_t bound = options.degree_bound.value_or(spec.degree_bound);
  const KTRingTable table = ktring_enumerate(ring, seed, bound);

  Report rep;
  rep.command = "ring";
  std::ostringstream h;
  h << "ring: " << describe_ring(spec) << ", foliation: " << describe_foliation(spec) << "\n";
  h << "ideal I = " << seed.to_string(names) << ", T-degree bound " << bound << "\n";
  std::string dets;
  for (std::size_t k = 0; k < table.determinant_degrees.size(); ++k) {
    dets += (k ? ", " : "") + std::to_string(table.determinant_degrees[k]);
  }
  h << "determinant inputs: elements of IR of one common T-degree in {" << dets << "}\n\n";
  h << render_table(table, spec.table_rows, names) << "\n";
  std::string leaders;
  for (const auto& e : table.leaders()) {
    const std::string t = e.t_degree == 1 ? "T" : "T^" + std::to_string(e.t_degree);
    leaders += (leaders.empty() ? "" : ", ") + t + (e.monomial.is_one() ? "" : e.monomial.to_string(names));
  }
  h << "non-product entries: " << leaders << "\n";
  if (table.truncated) h << "truncated: determinant products above T-degree " << bound << " are not listed\n";
  h << "elapsed: " << elapsed_since(start) << "\n";

  rep.add("bound", std::to_string(bound));
  rep.add("determinant_degrees", dets);
  for (std::size_t d = 0; d < table.columns.size(); ++d) {
    rep.add("column." + std::to_string(d), table.columns[d].to_string(names));
  }
  rep.add("leaders", leaders);
  rep.add("truncated", table.truncated ? "true" : "false");
  rep.human = h.str();
  return rep;
}

Report cmd_toric(const ProblemSpec& spec, const CommandOptions&) {
  const Foliation fol = spec_foliation(spec);
  if (!fol.is_diagonal()) throw Error("the toric criterion needs diagonal weights");
  const WeightSystem w = WeightSystem::from_foliation(fol);
  const ToricVerdict v = toric_resolvable(w);
  Report rep;
  rep.command = "toric";
  std::ostringstream h;
  h << "weights:";
  for (std::size_t k = 0; k < w.nvars(); ++k) h << (k ? ", " : " ") << spec.variables[k] << " -> " << weight_to_string(w.rows()[k]);
  h << "\n" << (v.resolvable ? "torically resolvable" : "NOT torically resolvable") << "\n";
  h << v.explanation << "\n";
  rep.exit_code = v.resolvable ? kExitSuccess : kExitNegative;
  rep.add("resolvable", v.resolvable ? "true" : "false");
  rep.add("distinct_nonzero", std::to_string(v.distinct_nonzero.size()));
  rep.add("distinct_rank", std::to_string(v.distinct_rank));
  rep.add("explanation", v.explanation);
  rep.human = h.str();
  return rep;
}

Report cmd_wcheck(const std::optional<ProblemSpec>& spec, const CommandOptions& options) {
  constexpr int kInstances = 100;
  const std::uint64_t seed = seed_of(spec ? &*spec : nullptr, options);
  std::mt19937_64 rng(seed);
  int failures = 0;
  std::string first_failure;
  for (int k = 0; k < kInstances; ++k) {
    std::size_t n = 0;
    std::optional<Foliation> fol;
    if (spec) {
      n = spec->nvars();
      fol = spec_foliation(*spec);
    } else {
      n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      const std::size_t r = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 2))(rng);
      fol = random_foliation(rng, n, r);
    }
    const std::size_t r = fol->rank();
    std::vector<Polynomial> fs;
    for (std::size_t i = 0; i <= r; ++i) fs.push_back(random_poly(rng, n, 2, 3));
    const Polynomial u = random_poly(rng, n, 1, 2);
    std::vector<Polynomial> ufs;
    for (const auto& f : fs) ufs.push_back(u * f);
    const Polynomial lhs = w_form(ufs, *fol);
    const Polynomial rhs = u.pow(static_cast<unsigned>(r + 1)) * w_form(fs, *fol);
    if (!(lhs == rhs)) {
      if (failures++ == 0) first_failure = "instance " + std::to_string(k) + ", u = " + u.to_string();
    }
  }
  Report rep;
  rep.command = "wcheck";
  std::ostringstream h;
  h << "identity: w(u f_0, ..., u f_r) = u^(r+1) w(f_0, ..., f_r)\n";
  h << "seed " << seed << ", " << (spec ? "foliation from the problem" : "random foliations, n <= 3, r <= 2") << "\n";
  if (failures == 0) {
    h << "homogeneity verified on " << kInstances << " instances\n";
  } else {
    h << "homogeneity FAILED on " << failures << " of " << kInstances << " instances; first: " << first_failure << "\n";
  }
  rep.exit_code = failures == 0 ? kExitSuccess : kExitNegative;
  rep.add("seed", std::to_string(seed));
  rep.add("instances", std::to_string(kInstances));
  rep.add("failures", std::to_string(failures));
  rep.human = h.str();
  return rep;
}

Report cmd_divisor(std::size_t r, std::size_t i) {
  if (r < 1) throw Error("r must be at least 1");
  if (i < 1) throw Error("i must be at least 1");
  const DivisorExpr xi = divisor_X(i, r);
  const DivisorExpr prev = divisor_X(i - 1, r);
  const DivisorExpr sub = xi.substitute(static_cast<int>(i), static_cast<int>(i - 1));
  const bool ok = divisor_recurrence_check(i, r);
  const std::string rp = std::to_string(r + 2);
  const std::string is = std::to_string(i);
  const std::string ps = std::to_string(i - 1);
  Report rep;
  rep.command = "divisor";
  std::ostringstream h;
  h << "r = " << r << ", i = " << i << "\n";
  h << "X_" << is << " = " << xi.to_string() << "\n";
  h << "X_" << ps << " = " << prev.to_string() << "\n";
  h << "with K_" << is << " := K_" << ps << ": X_" << is << " = " << sub.to_string() << "\n";
  h << "X_" << is << " = " << rp << "*X_" << ps << ": " << (ok ? "verified" : "FAILED") << "\n";
  rep.exit_code = ok ? kExitSuccess : kExitNegative;
  rep.add("r", std::to_string(r));
  rep.add("i", is);
  rep.add("X_i", xi.to_string());
  rep.add("X_prev", prev.to_string());
  rep.add("substituted", sub.to_string());
  rep.add("verified", ok ? "true" : "false");
  rep.human = h.str();
  return rep;
}

Report cmd_section(const ProblemSpec& spec, const CommandOptions&) {
  const auto start = Clock::now();
  const VariableNames& names = spec.variables;
  if (!spec.semigroup.empty()) throw Error("the section test runs in a polynomial ring");
  if (spec.x_space.empty() || spec.t_space.empty()) throw Error("the section test needs `X` and `T`");
  const Foliation fol = spec_foliation(spec);
  const PolySpan x = span_of(spec, spec.x_space);
  const PolySpan t = span_of(spec, spec.t_space);
  const SectionReport sr = section_power_test(x, t, fol);

  Report rep;
  rep.command = "section";
  std::ostringstream h;
  h << "X = " << x.to_string(names) << "\nT = " << t.to_string(names) << "\n";
  h << "foliation: " << describe_foliation(spec) << "\n";
  h << "X_0^(r+2): dimension " << sr.power.dimension() << "\n";
  h << "X_1:       dimension " << sr.nested.dimension() << "\n";
  h << "containment X_0^(r+2) in X_1: holds\n";
  rep.add("power_dimension", std::to_string(sr.power.dimension()));
  rep.add("nested_dimension", std::to_string(sr.nested.dimension()));
  rep.add("outcome", to_string(sr.outcome));
  if (sr.outcome == SectionOutcome::equal) {
    h << "outcome: equal, one further Gaussian blowup resolves the foliation\n";
  } else {
    for (const auto& b : sr.nested.basis()) {
      if (!sr.power.contains(b)) {
        h << "outcome: proper_containment, witness " << b.to_string(names) << " lies in X_1 only\n";
        rep.add("witness", b.to_string(names));
        break;
      }
    }
  }

  // The monomial version of the same question, through the ideal generated by X.
  bool monomial = fol.is_diagonal();
  for (const auto& p : x.basis()) monomial = monomial && p.is_term();
  if (monomial && !x.is_zero()) {
    std::vector<Monomial> ms;
    for (const auto& p : x.basis()) ms.push_back(p.leading_monomial());
    const FoliatedRing ring(Ambient::polynomial(spec.nvars()), fol);
    const bool st = stabilization_test(FractionalIdeal(MonomialIdeal(ring.ambient(), ms)), ring);
    h << "ideal check: F(J)^(r+2) == F(J F(J)) for J = (X): " << (st ? "true" : "false") << "\n";
    rep.add("stabilization_test", st ? "true" : "false");
  }
  h << "elapsed: " << elapsed_since(start) << "\n";
  rep.exit_code = sr.outcome == SectionOutcome::equal ? kExitSuccess : kExitNegative;
  rep.human = h.str();
  return rep;
}

Report run_command(const std::string& name, const std::vector<std::string>& args, const CommandOptions& options) {
  auto failure = [&](int code, const std::string& what) {
    Report rep;
    rep.command = name;
    rep.exit_code = code;
    rep.human = "error: " + what + "\n";
    rep.add("error", what);
    return rep;
  };
  try {
    if (name == "divisor") {
      if (args.size() != 2) return failure(kExitInputError, "usage: divisor R I");
      auto num = [&](const std::string& s) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(s, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != s.size() || s.empty() || s[0] == '-') throw Error("expected a non-negative integer, got `" + s + "`");
        return static_cast<std::size_t>(v);
      };
      return cmd_divisor(num(args[0]), num(args[1]));
    }
    if (name == "wcheck" && args.empty()) return cmd_wcheck(std::nullopt, options);
    if (args.size() != 1) return failure(kExitInputError, "usage: " + name + " PROBLEM_FILE");
    ProblemSpec spec;
    try {
      spec = load_problem(args[0]);
    } catch (const ParseError& e) {
      return failure(kExitInputError, args[0] + ":" + e.what());
    }
    if (name == "resolve") return cmd_resolve(spec, options);
    if (name == "ring") return cmd_ring(spec, options);
    if (name == "toric") return cmd_toric(spec, options);
    if (name == "wcheck") return cmd_wcheck(spec, options);
    if (name == "section") return cmd_section(spec, options);
    return failure(kExitInputError, "unknown command `" + name + "`");
  } catch (const ResourceError& e) {
    return failure(kExitResource, e.what());
  } catch (const Error& e) {
    return failure(kExitInputError, e.what());
  }
}

}  // namespace foliate
