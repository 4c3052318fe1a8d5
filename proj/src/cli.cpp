#include "ghw/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ghw/code.hpp"
#include "ghw/error.hpp"
#include "ghw/formulas.hpp"
#include "ghw/oracle.hpp"

namespace ghw {

namespace {

struct Options {
  std::uint32_t q = 0;
  std::uint32_t e = 0;
  int m = 0;
  std::string sets;
  bool complement = false;
  std::uint64_t max_enum = 0;
  unsigned threads = 1;
  bool verbose = false;
  bool no_timing = false;
  bool witness = false;
  std::string method = "formula";
  std::string format = "text";
  int r = 0;
  std::string only;
  std::string fault;
};

class Mismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Field make_field(const Options& o) {
  if (o.e > 0) return Field::make(o.q, o.e);
  return Field::of_order(o.q);
}

Limits make_limits(const Options& o) {
  Limits lim = Limits::from_env();
  if (o.max_enum > 0) lim.max_enum = o.max_enum;
  lim.threads = o.threads;
  return lim;
}

ComplexSpec make_spec(const Options& o, std::ostream& err) {
  bool changed = false;
  ComplexSpec spec = normalize(ComplexSpec{o.m, parse_sets(o.sets), o.complement}, changed);
  if (changed && o.verbose) err << "note: dropped redundant generators, using " << format_sets(spec.sets) << '\n';
  return spec;
}

std::optional<FormulaFault> parse_fault(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("fault must look like Table1:2");
  FormulaFault f;
  f.table = text.substr(0, colon);
  try {
    f.row = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("bad fault row in '" + text + "'");
  }
  return f;
}

std::string basis_string(const Subspace& s) {
  std::ostringstream os;
  for (int i = 0; i < s.dim(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < s.ambient_dim(); ++j) os << (j ? "," : "") << s.basis()(i, j).code;
  }
  return os.str();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

RunReport base_report(const Field& f, const ComplexSpec& spec) {
  RunReport r;
  r.q = f.order();
  r.e = f.degree();
  r.m = spec.m;
  r.sets = format_sets(spec.sets);
  r.complement = spec.complement;
  r.n = to_int64(cardinality(spec, f.order()), "code length");
  return r;
}

void emit(const RunReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") out << to_json(r);
  else if (format == "csv") out << to_csv(r);
  else out << to_text(r);
}

int cmd_params(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field f = make_field(o);
  const ComplexSpec spec = make_spec(o, err);
  RunReport rep = base_report(f, spec);
  try {
    const CodeParams p = code_params_formula(f.order(), spec);
    rep.k = p.k;
    rep.hierarchy = {p.d};
    rep.provenance = {p.theorem};
    rep.method = "formula";
  } catch (const NotApplicable& e) {
    if (o.verbose) err << "note: " << e.what() << "; falling back to the subspace search\n";
    const Prop1Search search(f, spec, make_limits(o));
    rep.k = search.k();
    rep.hierarchy = {search.ghw(1).value};
    rep.provenance = {"prop1-search"};
    rep.method = "prop1-search";
  }
  if (!o.no_timing) {
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  }
  if (o.format == "text") {
    out << "[" << rep.n << ", " << rep.k << ", " << rep.hierarchy.front() << "]  (" << rep.provenance.front() << ")\n";
  } else {
    emit(rep, o.format, out);
  }
  return kExitOk;
}

int cmd_hierarchy(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field f = make_field(o);
  const ComplexSpec spec = make_spec(o, err);
  const Limits lim = make_limits(o);
  RunReport rep = base_report(f, spec);
  rep.method = o.method;

  std::optional<WeightHierarchy> formula;
  if (o.method != "brute") {
    const TheoremSelector sel = select_theorem(f.order(), spec);
    if (o.verbose) {
      err << "selected " << sel.primary << " [" << sel.labels.front() << "]";
      for (const auto& h : sel.hypotheses) err << "; " << h;
      err << '\n';
    }
    formula = hierarchy_formula(f.order(), spec);
    if (o.verbose && !formula->confirmations.empty()) {
      err << "agreeing forms:";
      for (const auto& c : formula->confirmations) err << ' ' << c;
      err << '\n';
    }
  }
  if (o.method != "formula" || o.witness) {
    // closed forms carry no witness
    const Prop1Search search(f, spec, lim);
    std::vector<std::string> witnesses;
    for (int r = 1; r <= search.k(); ++r) {
      const Prop1Result res = search.ghw(r);
      rep.hierarchy.push_back(res.value);
      rep.provenance.push_back("prop1-search");
      witnesses.push_back(basis_string(res.witness));
    }
    rep.k = search.k();
    if (o.witness) rep.witnesses = witnesses;
  }
  std::optional<WeightHierarchy> def;
  if (o.method == "both") def = hierarchy_definitional(build_code(f, spec, lim), lim);
  if ((formula && rep.witnesses) || def) {
    if (formula->values != rep.hierarchy || (def && def->values != rep.hierarchy)) {
      std::ostringstream msg;
      msg << "mismatch for q=" << f.order() << " m=" << spec.m << " sets=" << format_sets(spec.sets)
          << (spec.complement ? " complement" : "") << ": formula=" << join(formula->values)
          << " prop1-search=" << join(rep.hierarchy);
      if (def) msg << " definitional=" << join(def->values);
      throw Mismatch(msg.str());
    }
  }
  if (formula) {
    rep.k = formula->k();
    rep.hierarchy = formula->values;
    rep.provenance = formula->provenance;
  }
  if (!o.no_timing) {
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  }
  emit(rep, o.format, out);
  return kExitOk;
}

struct CheckOutcome {
  bool ok = true;
  std::string detail;
  std::vector<std::int64_t> values;
};

template <class Fn>
CheckOutcome run_check(Fn&& fn) {
  CheckOutcome c;
  try {
    c.detail = fn(c.values);
    c.ok = c.detail.empty();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = e.what();
  }
  return c;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Limits lim = make_limits(o);
  FormulaOptions fopt;
  fopt.fault = parse_fault(o.fault);
  int total = 0, passed = 0;
  out << std::left << std::setw(9) << "example" << std::setw(14) << "[n,k,d]" << std::setw(10) << "formula"
      << std::setw(8) << "prop1" << std::setw(14) << "definitional" << "status\n";
  std::ostringstream failures;
  for (const GoldenExample& ex : golden_examples()) {
    if (!o.only.empty() && ex.id.rfind(o.only, 0) != 0) continue;
    ++total;
    const Field f = Field::of_order(ex.q);
    const ComplexSpec spec = normalize(ComplexSpec{ex.m, parse_sets(ex.sets), ex.complement});
    auto expect = [&](std::int64_t n, int k, const std::vector<std::int64_t>& v) -> std::string {
      if (n != ex.n || k != ex.k) {
        return "parameters [" + std::to_string(n) + ", " + std::to_string(k) + "] expected [" +
               std::to_string(ex.n) + ", " + std::to_string(ex.k) + "]";
      }
      if (v != ex.hierarchy) return "hierarchy " + join(v) + " expected " + join(ex.hierarchy);
      return {};
    };
    const CheckOutcome formula = run_check([&](std::vector<std::int64_t>& vals) -> std::string {
      if (ex.table.empty()) {
        try {
          hierarchy_formula(ex.q, spec, fopt);
        } catch (const NotApplicable&) {
          return {};
        }
        return "a closed form claimed a spec it does not cover";
      }
      const WeightHierarchy h = hierarchy_formula(ex.q, spec, fopt);
      vals = h.values;
      const CodeParams p = code_params_formula(ex.q, spec, fopt);
      if (auto msg = expect(p.n, p.k, h.values); !msg.empty()) return h.provenance.front() + ": " + msg;
      const bool named = h.provenance.front().rfind(ex.table + ":", 0) == 0 ||
                         std::find(h.confirmations.begin(), h.confirmations.end(), ex.table) != h.confirmations.end();
      if (!named) return ex.table + " was not among the agreeing forms";
      return {};
    });
    const CheckOutcome prop1 = run_check([&](std::vector<std::int64_t>& vals) -> std::string {
      const Prop1Search search(f, spec, lim);
      for (int r = 1; r <= search.k(); ++r) vals.push_back(search.ghw(r).value);
      return expect(search.n(), search.k(), vals);
    });
    const CheckOutcome def = run_check([&](std::vector<std::int64_t>& vals) -> std::string {
      const LinearCode code = build_code(f, spec, lim);
      vals = hierarchy_definitional(code, lim).values;
      return expect(code.n, code.k, vals);
    });
    const bool ok = formula.ok && prop1.ok && def.ok;
    passed += ok;
    std::ostringstream nkd;
    nkd << '[' << ex.n << ',' << ex.k << ',' << ex.hierarchy.front() << ']';
    auto mark = [](const CheckOutcome& c) { return c.ok ? "ok" : "FAIL"; };
    out << std::setw(9) << ex.id << std::setw(14) << nkd.str() << std::setw(10)
        << (ex.table.empty() ? std::string("n/a") : std::string(mark(formula))) << std::setw(8) << mark(prop1)
        << std::setw(14) << mark(def) << (ok ? "PASS" : "FAIL") << '\n';
    if (!ok) {
      failures << ex.id << ": expected " << join(ex.hierarchy) << '\n';
      failures << "  formula:      " << (formula.ok ? join(formula.values) : formula.detail) << '\n';
      failures << "  prop1-search: " << (prop1.ok ? join(prop1.values) : prop1.detail) << '\n';
      failures << "  definitional: " << (def.ok ? join(def.values) : def.detail) << '\n';
    }
  }
  out << passed << '/' << total << " passed\n";
  if (passed != total) {
    err << failures.str();
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  if (o.m < 0 || o.m > kMaxAmbientDim) throw DomainError("m out of range");
  if (o.r < 0 || o.r > o.m) throw DomainError("r must lie in [0, m]");
  const BigCount count = gaussian_binomial(o.m, o.r, f.order());
  const BigCount cost = count * boost::multiprecision::pow(BigCount(f.order()), static_cast<unsigned>(o.m - o.r));
  if (o.format == "json") {
    nlohmann::json j;
    j["q"] = f.order();
    j["m"] = o.m;
    j["r"] = o.r;
    j["subspaces"] = count.str();
    j["prop1_cost"] = cost.str();
    out << j.dump(2) << '\n';
  } else {
    out << count << '\n';
    out << "estimated prop1 cost: " << cost << " vector checks (" << count << " subspaces x q^(m-r))\n";
  }
  return kExitOk;
}

void add_field_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "Field order, or the prime when --e is given")->required();
  cmd->add_option("--e", o.e, "Extension degree");
}

void add_spec_options(CLI::App* cmd, Options& o) {
  add_field_options(cmd, o);
  cmd->add_option("--m", o.m, "Ambient dimension")->required();
  cmd->add_option("--sets", o.sets, "Generators, e.g. \"1,2,3;3,4,5\"")->required();
  cmd->add_flag("--complement", o.complement, "Use the complement as defining set");
}

void add_run_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-enum", o.max_enum, "Enumeration cap (overrides GHW_MAX_ENUM)");
  cmd->add_option("--threads", o.threads, "Worker threads for the subspace search, 0 = all cores");
  cmd->add_flag("--verbose,-v", o.verbose, "Diagnostics on stderr");
  cmd->add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Hamming weights of codes from simplicial complexes", "ghw"};
  app.require_subcommand(1);
  Options o;

  auto* params = app.add_subcommand("params", "Print [n, k, d]");
  add_spec_options(params, o);
  add_run_options(params, o);
  params->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* hier = app.add_subcommand("hierarchy", "Print the weight hierarchy");
  add_spec_options(hier, o);
  add_run_options(hier, o);
  hier->add_option("--method", o.method)->check(CLI::IsMember({"formula", "brute", "both"}));
  hier->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
  hier->add_flag("--witness", o.witness, "Report the optimal subspace H for each r");

  auto* verify = app.add_subcommand("verify-paper", "Check every worked example three ways");
  add_run_options(verify, o);
  verify->add_option("--only", o.only, "Run only examples whose id starts with this prefix");
  verify->add_option("--inject-fault", o.fault)->group("");

  auto* count = app.add_subcommand("count-subspaces", "Number of r-dimensional subspaces of F_q^m");
  add_field_options(count, o);
  count->add_option("--m", o.m)->required();
  count->add_option("--r", o.r)->required();
  count->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (params->parsed()) return cmd_params(o, out, err);
    if (hier->parsed()) return cmd_hierarchy(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_count(o, out);
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << " (required " << e.required() << ")\n";
    return kExitResource;
  } catch (const NotApplicable& e) {
    err << "not applicable: " << e.what() << '\n';
    return kExitNotApplicable;
  } catch (const Mismatch& e) {
    err << e.what() << '\n';
    return kExitMismatch;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace ghw
