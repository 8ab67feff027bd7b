#include "eqres/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqres/combinatorics.hpp"
#include "eqres/decompose.hpp"
#include "eqres/error.hpp"
#include "eqres/oracle.hpp"
#include "eqres/system_file.hpp"

namespace eqres {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string file;
  bool json = false;
  std::size_t symbolic_cap = 64;
  std::string at;
  std::size_t trials = 20;
  std::size_t bench_trials = 3;
  std::uint64_t seed = 0;
  int bound = 10;
  bool timings = false;
  int partition_total = 0;
  int max_length = 0;
};

ResultantOptions resultant_options(const Options& o) {
  ResultantOptions r;
  r.symbolic_cap = o.symbolic_cap;
  return r;
}

// "a=1,b=-3/4" -> assignment over the declared parameters.
Assignment parse_assignment(const std::string& text, const std::vector<std::string>& params) {
  Assignment at;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw IoError("--at entry '" + item + "' is not name=value");
    const std::string name = item.substr(0, eq);
    if (std::find(params.begin(), params.end(), name) == params.end())
      throw IoError("--at names unknown parameter '" + name + "'");
    Scalar v;
    if (v.set_str(item.substr(eq + 1), 10) != 0) throw IoError("--at value for '" + name + "' is not a rational");
    v.canonicalize();
    if (v.get_den() == 0) throw IoError("--at value for '" + name + "' has a zero denominator");
    at[name] = v;
  }
  for (const auto& p : params)
    if (!at.count(p)) throw IoError("--at leaves parameter '" + p + "' unassigned");
  return at;
}

std::string label(const ConstantFactor& c) {
  std::string s = "f^{";
  for (std::size_t k = 0; k < c.indices.size(); ++k) s += (k ? "," : "") + std::to_string(c.indices[k]);
  return s + "}";
}

std::string join_sizes(const DecompositionResult& r) {
  std::string s;
  for (std::size_t i = 0; i < r.factors.size(); ++i)
    s += (i ? ", " : "") + std::to_string(r.factors[i].matrix_size());
  return s;
}

std::string block_text(const DecompositionResult& r) {
  return "S_{1.." + std::to_string(r.p) + "} x S_{" + std::to_string(r.p + 1) + ".." +
         std::to_string(r.n) + "}";
}

ordered_json point_json(const Assignment& at) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : at) j[k] = to_string(v);
  return j;
}

ordered_json audit_json(const DegreeAudit& audit) {
  ordered_json lines = ordered_json::array();
  for (const auto& l : audit.lines) {
    ordered_json line{{"label", l.label}, {"exponent", l.exponent}, {"inferred_degree", l.inferred_degree}};
    line["actual_degree"] = l.actual_degree ? ordered_json(*l.actual_degree) : ordered_json(nullptr);
    lines.push_back(line);
  }
  ordered_json j{{"lines", lines},
                 {"inferred_total", audit.inferred_total},
                 {"expected_total", audit.expected_total}};
  j["actual_total"] = audit.actual_total ? ordered_json(*audit.actual_total) : ordered_json(nullptr);
  j["consistent"] = audit.consistent();
  return j;
}

struct Evaluated {
  std::vector<std::optional<Polynomial>> symbolic;
  std::optional<Assignment> at;
  std::vector<Scalar> numeric;
  std::optional<Scalar> product;
};

Evaluated evaluate_all(const DecompositionResult& r, const Options& o) {
  Evaluated ev;
  const auto ropts = resultant_options(o);
  if (!o.at.empty()) {
    ev.at = parse_assignment(o.at, r.context->param_names());
    for (const auto& f : r.factors) ev.numeric.push_back(evaluate_factor_at(f, *ev.at, ropts));
    ev.product = product_at(r, *ev.at, ropts);
  } else {
    ev.symbolic = evaluate_factors(r, ropts);
  }
  return ev;
}

ordered_json decomposition_json(const DecompositionResult& r, const Evaluated& ev,
                                const DegreeAudit& audit, std::size_t cap) {
  ordered_json j;
  j["variant"] = to_string(r.variant);
  j["case"] = to_string(r.selected, r.variant);
  j["n"] = r.n;
  j["p"] = r.p;
  j["q"] = r.q;
  j["degree"] = r.input_degree;
  j["system_degree"] = r.system_degree;
  j["variables"] = r.context->main_names();
  j["parameters"] = r.context->param_names();
  j["symbolic_cap"] = cap;
  if (r.variant == Variant::Discriminant)
    j["prefactor"] = {{"base", r.prefactor_base}, {"exponent", r.prefactor_exponent.get_str()}};
  ordered_json constants = ordered_json::array();
  for (const auto& c : r.constants)
    constants.push_back({{"block", c.block},
                         {"label", label(c)},
                         {"indices", c.indices},
                         {"value", format(c.value)},
                         {"mu", c.mu}});
  j["constants"] = constants;
  ordered_json factors = ordered_json::array();
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const auto& f = r.factors[i];
    ordered_json fj;
    fj["label"] = to_string(f.pair);
    fj["lambda"] = f.pair.first.parts();
    fj["lambda_prime"] = f.pair.second.parts();
    fj["m"] = {f.m_first, f.m_second};
    fj["exponent"] = f.exponent;
    fj["variables"] = f.context->main_names();
    fj["split"] = f.context->split();
    ordered_json sys = ordered_json::array();
    for (const auto& g : f.system) sys.push_back(format(g));
    fj["system"] = sys;
    fj["degrees"] = f.degrees();
    fj["matrix_size"] = f.matrix_size();
    if (ev.at) {
      fj["value"] = to_string(ev.numeric[i]);
    } else if (ev.symbolic[i]) {
      fj["value"] = format(*ev.symbolic[i]);
    } else {
      fj["value"] = nullptr;
    }
    factors.push_back(fj);
  }
  j["factors"] = factors;
  if (ev.at) {
    j["at"] = point_json(*ev.at);
    j["product"] = to_string(*ev.product);
  }
  j["degree_audit"] = audit_json(audit);
  return j;
}

void print_decomposition(std::ostream& out, const DecompositionResult& r, const Evaluated& ev,
                         const DegreeAudit& audit, std::size_t cap) {
  const bool disc = r.variant == Variant::Discriminant;
  out << (disc ? "discriminant" : "resultant") << " decomposition under " << block_text(r) << "\n";
  out << "n=" << r.n << " p=" << r.p << " q=" << r.q << " d=" << r.input_degree;
  if (disc) out << " (partials of degree " << r.system_degree << ")";
  out << "\ncase: " << to_string(r.selected, r.variant) << "\n";
  if (disc)
    out << "prefactor: Res(partials) = " << r.prefactor_base << "^" << r.prefactor_exponent.get_str()
        << " * Disc(f)\n";
  if (ev.at) {
    out << "at:";
    for (const auto& [k, v] : *ev.at) out << " " << k << "=" << to_string(v);
    out << "\n";
  }
  out << "constant factors: " << r.constants.size() << "\n";
  for (const auto& c : r.constants)
    out << "  " << label(c) << " = " << format(c.value) << "  mu_" << c.block << " = " << c.mu << "\n";
  out << "resultant factors: " << r.factors.size() << "\n";
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const auto& f = r.factors[i];
    out << "  Lambda = " << to_string(f.pair) << "  exponent " << f.exponent << " = " << f.m_first
        << "*" << f.m_second << "  Macaulay " << f.matrix_size() << "\n";
    for (const auto& g : f.system) out << "    " << format(g) << "\n";
    out << "    Res = ";
    if (ev.at) out << to_string(ev.numeric[i]);
    else if (ev.symbolic[i]) out << format(*ev.symbolic[i]);
    else out << "(above symbolic cap " << cap << "; pass --at)";
    out << "\n";
  }
  if (ev.product) out << "product = " << to_string(*ev.product) << "\n";
  out << "degree audit: inferred " << audit.inferred_total << ", expected " << audit.expected_total;
  if (audit.actual_total) out << ", actual " << *audit.actual_total;
  out << (audit.consistent() ? "" : "  MISMATCH") << "\n";
}

int emit_decomposition(const DecompositionResult& r, const Options& o, std::ostream& out) {
  const auto ev = evaluate_all(r, o);
  const auto audit = degree_audit(r, ev.symbolic);
  if (o.json) out << decomposition_json(r, ev, audit, o.symbolic_cap).dump(2) << "\n";
  else print_decomposition(out, r, ev, audit, o.symbolic_cap);
  return kExitOk;
}

EquivariantSystem file_system(const SystemFile& file) {
  if (file.is_discriminant())
    throw ValidationError("file holds a single polynomial; use the discriminant subcommand");
  return check_equivariance(file.system, file.context);
}

const Polynomial& file_polynomial(const SystemFile& file) {
  if (!file.is_discriminant())
    throw ValidationError("file holds a system; use the decompose subcommand");
  return *file.polynomial;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto file = load_system_file(o.file);
  ordered_json j{{"kind", file.is_discriminant() ? "discriminant" : "resultant"},
                 {"n", file.n}, {"p", file.p}, {"q", file.n - file.p}, {"degree", file.degree}};
  const std::string group = "S_{1.." + std::to_string(file.p) + "} x S_{" +
                            std::to_string(file.p + 1) + ".." + std::to_string(file.n) + "}";
  std::string message;
  try {
    if (file.is_discriminant()) {
      const auto sys = partials_system(*file.polynomial, file.context);
      message = "invariant under " + group + "; partial derivatives are equivariant of degree " +
                std::to_string(sys.degree());
    } else {
      file_system(file);
      message = "equivariant under " + group;
    }
  } catch (const ValidationError& e) {
    if (o.json) {
      j["valid"] = false;
      j["error"] = e.what();
      out << j.dump(2) << "\n";
    } else {
      out << "invalid: " << e.what() << "\n";
    }
    return kExitValidation;
  }
  if (o.json) {
    j["valid"] = true;
    j["message"] = message;
    out << j.dump(2) << "\n";
  } else {
    out << "valid: " << message << " (n=" << file.n << " p=" << file.p << " d=" << file.degree << ")\n";
  }
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto file = load_system_file(o.file);
  return emit_decomposition(decompose_resultant(file_system(file)), o, out);
}

int cmd_discriminant(const Options& o, std::ostream& out) {
  const auto file = load_system_file(o.file);
  return emit_decomposition(decompose_discriminant(file_polynomial(file), file.context), o, out);
}

int cmd_resultant(const Options& o, std::ostream& out) {
  const auto file = load_system_file(o.file);
  std::vector<Polynomial> polys;
  if (file.is_discriminant()) {
    for (std::size_t i = 0; i < file.n; ++i) polys.push_back(partial_derivative(*file.polynomial, i));
  } else {
    polys = file_system(file).polys();
  }
  auto ropts = resultant_options(o);
  ropts.split_disjoint = false;
  const auto layout = macaulay_layout(HomogeneousSystem(polys).degrees());
  ordered_json j{{"kind", file.is_discriminant() ? "partials" : "system"}, {"matrix_size", layout.size()}};
  std::string value;
  if (!o.at.empty()) {
    const auto at = parse_assignment(o.at, file.parameters);
    std::vector<Polynomial> specialized;
    bool zero = false;
    for (const auto& f : polys) {
      specialized.push_back(evaluate(f, at));
      zero = zero || specialized.back().is_zero();
    }
    value = zero ? "0" : to_string(numeric_resultant(HomogeneousSystem(specialized), ropts));
    j["at"] = point_json(at);
  } else {
    value = format(macaulay_resultant(HomogeneousSystem(polys), ropts));
  }
  j["value"] = value;
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "direct Macaulay resultant" << (file.is_discriminant() ? " of the partial derivatives" : "")
        << " (matrix " << layout.size() << ")\n";
    out << "Res = " << value << "\n";
  }
  return kExitOk;
}

ordered_json report_json(const VerificationReport& rep, bool timings) {
  ordered_json j{{"requested", rep.requested}, {"completed", rep.completed}, {"skipped", rep.skipped},
                 {"sign", rep.sign},           {"reference_sign", rep.reference_sign},
                 {"passed", rep.passed()}};
  if (rep.counterexample) {
    const auto& c = *rep.counterexample;
    j["counterexample"] = {{"index", c.index}, {"point", point_json(c.point)}, {"lhs", to_string(c.lhs)},
                           {"rhs", to_string(c.rhs)}, {"reason", c.reason}};
  } else {
    j["counterexample"] = nullptr;
  }
  ordered_json trials = ordered_json::array();
  for (const auto& t : rep.trials) {
    ordered_json tj{{"index", t.index},
                    {"status", t.status == TrialStatus::Completed ? "completed" : "degenerate"},
                    {"point", point_json(t.point.values)}};
    if (t.status == TrialStatus::Completed) {
      tj["lhs"] = to_string(t.lhs);
      tj["rhs"] = to_string(t.rhs);
      if (t.reference) tj["reference"] = to_string(*t.reference);
    }
    if (timings) tj["seconds"] = t.seconds;
    trials.push_back(tj);
  }
  j["trials"] = trials;
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto file = load_system_file(o.file);
  VerifyOptions vo;
  vo.trials = o.trials;
  vo.seed = o.seed;
  vo.bound = o.bound;
  vo.resultant = resultant_options(o);
  const auto rep = file.is_discriminant()
                       ? verify_discriminant(*file.polynomial, file.context, vo, file.closed_form)
                       : verify_decomposition(file_system(file), vo, file.closed_form);
  if (o.json) {
    out << report_json(rep, o.timings).dump(2) << "\n";
  } else {
    out << "trials: " << rep.requested << " requested, " << rep.completed << " completed, "
        << rep.skipped << " skipped (degenerate)\n";
    out << "sign: " << (rep.sign == 0 ? "undetermined" : rep.sign > 0 ? "+1" : "-1") << "\n";
    if (file.closed_form)
      out << "closed form sign: "
          << (rep.reference_sign == 0 ? "undetermined" : rep.reference_sign > 0 ? "+1" : "-1") << "\n";
    if (o.timings)
      for (const auto& t : rep.trials)
        out << "  trial " << t.index << ": " << std::fixed << std::setprecision(3) << t.seconds << " s\n";
    if (rep.counterexample) {
      const auto& c = *rep.counterexample;
      out << "counterexample at trial " << c.index << ": " << c.reason << "\n  point:";
      for (const auto& [k, v] : c.point) out << " " << k << "=" << to_string(v);
      out << "\n  lhs = " << to_string(c.lhs) << "\n  rhs = " << to_string(c.rhs) << "\n";
    }
    out << "verdict: " << (rep.passed() ? "pass" : "FAIL") << "\n";
  }
  if (rep.counterexample) return kExitCounterexample;
  if (rep.completed == 0) return kExitValidation;
  return kExitOk;
}

int cmd_partitions(const Options& o, std::ostream& out) {
  if (o.partition_total < 1) throw DomainError("P must be positive");
  std::optional<int> cap;
  if (o.max_length > 0) cap = o.max_length;
  const auto parts = enumerate_partitions(o.partition_total, cap);
  std::uint64_t total = 0;
  ordered_json list = ordered_json::array();
  for (const auto& l : parts) {
    const auto m = multinomial_m(l);
    total += m;
    list.push_back({{"parts", l.parts()}, {"length", l.length()}, {"m", m}});
  }
  if (o.json) {
    out << ordered_json{{"p", o.partition_total}, {"partitions", list}, {"count", parts.size()},
                        {"sum_m", total}}.dump(2)
        << "\n";
  } else {
    for (const auto& l : parts)
      out << std::left << std::setw(24) << to_string(l) << " r=" << l.length()
          << "  m=" << multinomial_m(l) << "\n";
    out << parts.size() << " partitions, sum of m = " << total << "\n";
  }
  return kExitOk;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto file = load_system_file(o.file);
  std::vector<Polynomial> polys;
  DecompositionResult r;
  if (file.is_discriminant()) {
    r = decompose_discriminant(*file.polynomial, file.context);
    for (std::size_t i = 0; i < file.n; ++i) polys.push_back(partial_derivative(*file.polynomial, i));
  } else {
    const auto sys = file_system(file);
    r = decompose_resultant(sys);
    polys = sys.polys();
  }
  auto direct_opts = resultant_options(o);
  direct_opts.split_disjoint = false;
  const auto direct_size = macaulay_layout(HomogeneousSystem(polys).degrees()).size();

  ordered_json rows = ordered_json::array();
  if (!o.json) {
    out << "direct Macaulay " << direct_size << "; " << r.factors.size() << " factors (Macaulay "
        << join_sizes(r) << ")\n";
    out << "trial  direct_serial_s  direct_omp_s  factors_sum_s  factors_max_s  speedup  agree\n";
  }
  for (std::size_t t = 0; t < o.bench_trials; ++t) {
    const auto point = draw_point(file.parameters, o.seed, t, o.bound);
    std::vector<Polynomial> specialized;
    for (const auto& f : polys) specialized.push_back(evaluate(f, point.values));
    const HomogeneousSystem direct_sys(specialized);

    auto serial_opts = direct_opts;
    serial_opts.kernel = Kernel::Serial;
    auto start = Clock::now();
    numeric_resultant(direct_sys, serial_opts);
    const double direct_serial = seconds_since(start);
    start = Clock::now();
    const Scalar direct = numeric_resultant(direct_sys, direct_opts);
    const double direct_omp = seconds_since(start);

    double sum = 0, worst = 0;
    for (const auto& f : r.factors) {
      start = Clock::now();
      evaluate_factor_at(f, point.values, resultant_options(o));
      const double s = seconds_since(start);
      sum += s;
      worst = std::max(worst, s);
    }
    const Scalar product = product_at(r, point.values, resultant_options(o));
    const bool agree = direct == product || direct == -product;
    const double speedup = sum > 0 ? direct_omp / sum : 0;
    rows.push_back({{"trial", t}, {"direct_serial_s", direct_serial}, {"direct_openmp_s", direct_omp},
                    {"factors_sum_s", sum}, {"factors_max_s", worst}, {"speedup", speedup},
                    {"agree", agree}});
    if (!o.json)
      out << std::left << std::setw(7) << t << std::fixed << std::setprecision(4) << std::setw(17)
          << direct_serial << std::setw(14) << direct_omp << std::setw(15) << sum << std::setw(15)
          << worst << std::setprecision(1) << std::setw(9) << speedup << (agree ? "yes" : "NO") << "\n";
  }
  if (o.json) {
    std::vector<std::size_t> sizes;
    for (const auto& f : r.factors) sizes.push_back(f.matrix_size());
    out << ordered_json{{"direct_matrix_size", direct_size}, {"factor_count", r.factors.size()},
                        {"factor_matrix_sizes", sizes}, {"openmp", openmp_available()},
                        {"trials", rows}}.dump(2)
        << "\n";
  }
  return kExitOk;
}

// Re-reads `decompose --json` output and evaluates the listed factors again.
int cmd_evaluate(const Options& o, std::ostream& out) {
  std::ifstream in(o.file);
  if (!in) throw IoError("cannot open " + o.file);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
  try {
    const auto params = doc.at("parameters").get<std::vector<std::string>>();
    const auto coeff = RingContext::coefficients(params);
    auto ropts = resultant_options(o);
    if (doc.contains("symbolic_cap") && o.symbolic_cap == 64) ropts.symbolic_cap = doc.at("symbolic_cap").get<std::size_t>();
    std::optional<Assignment> at;
    if (!o.at.empty()) at = parse_assignment(o.at, params);

    ordered_json result;
    ordered_json constants = ordered_json::array();
    Scalar product = 1;
    for (const auto& c : doc.at("constants")) {
      const auto value = parse(c.at("value").get<std::string>(), coeff);
      ordered_json cj{{"label", c.at("label")}, {"mu", c.at("mu")}};
      if (at) {
        const Scalar v = evaluate(value, *at).constant_value();
        Scalar pw;
        mpz_pow_ui(pw.get_num_mpz_t(), v.get_num_mpz_t(), c.at("mu").get<std::uint64_t>());
        mpz_pow_ui(pw.get_den_mpz_t(), v.get_den_mpz_t(), c.at("mu").get<std::uint64_t>());
        product *= pw;
        cj["value"] = to_string(v);
      } else {
        cj["value"] = format(value);
      }
      constants.push_back(cj);
    }
    ordered_json factors = ordered_json::array();
    for (const auto& f : doc.at("factors")) {
      const auto names = f.at("variables").get<std::vector<std::string>>();
      const auto ctx = RingContext::make(names, params, f.at("split").get<std::size_t>());
      std::vector<Polynomial> sys;
      for (const auto& s : f.at("system")) sys.push_back(parse(s.get<std::string>(), ctx));
      ordered_json fj{{"label", f.at("label")}, {"exponent", f.at("exponent")}};
      const auto e = f.at("exponent").get<std::uint64_t>();
      if (at) {
        std::vector<Polynomial> specialized;
        bool zero = false;
        for (const auto& g : sys) {
          specialized.push_back(evaluate(g, *at));
          zero = zero || specialized.back().is_zero();
        }
        const Scalar v = zero ? Scalar(0) : numeric_resultant(HomogeneousSystem(specialized), ropts);
        Scalar pw;
        mpz_pow_ui(pw.get_num_mpz_t(), v.get_num_mpz_t(), e);
        mpz_pow_ui(pw.get_den_mpz_t(), v.get_den_mpz_t(), e);
        product *= pw;
        fj["value"] = to_string(v);
      } else {
        try {
          fj["value"] = format(macaulay_resultant(HomogeneousSystem(sys), ropts));
        } catch (const SymbolicCapExceeded&) {
          fj["value"] = nullptr;
        }
      }
      factors.push_back(fj);
    }
    result["constants"] = constants;
    result["factors"] = factors;
    if (at) {
      result["at"] = point_json(*at);
      result["product"] = to_string(product);
    }
    if (o.json) {
      out << result.dump(2) << "\n";
    } else {
      for (const auto& c : constants)
        out << c.at("label").get<std::string>() << " = " << c.at("value").get<std::string>() << "  mu "
            << c.at("mu") << "\n";
      for (const auto& f : factors)
        out << "Res_" << f.at("label").get<std::string>() << "^" << f.at("exponent") << " = "
            << (f.at("value").is_null() ? "(above symbolic cap; pass --at)" : f.at("value").get<std::string>())
            << "\n";
      if (at) out << "product = " << to_string(product) << "\n";
    }
  } catch (const ordered_json::exception& e) {
    throw IoError(std::string("not a decompose --json document: ") + e.what());
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Resultants and discriminants of systems equivariant under S_p x S_q"};
  app.name("eqres");
  app.require_subcommand(1);

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "system file (JSON)")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--symbolic-cap", o.symbolic_cap, "largest symbolic Macaulay matrix")->capture_default_str();
  };
  auto add_at = [&](CLI::App* sub) {
    sub->add_option("--at", o.at, "parameter values, e.g. a=1,b=-2/3");
  };

  auto* check = app.add_subcommand("check", "validate equivariance or invariance");
  add_file(check);
  add_json(check);

  auto* decompose = app.add_subcommand("decompose", "factor the resultant of an equivariant system");
  add_file(decompose);
  add_json(decompose);
  add_cap(decompose);
  add_at(decompose);

  auto* discriminant = app.add_subcommand("discriminant", "factor the discriminant of an invariant form");
  add_file(discriminant);
  add_json(discriminant);
  add_cap(discriminant);
  add_at(discriminant);

  auto* resultant = app.add_subcommand("resultant", "direct Macaulay resultant");
  add_file(resultant);
  add_json(resultant);
  add_cap(resultant);
  add_at(resultant);
  bool direct = false;
  resultant->add_flag("--direct", direct, "compute without decomposing")->required();

  auto* verify = app.add_subcommand("verify", "check the decomposition at random points");
  add_file(verify);
  add_json(verify);
  add_cap(verify);
  verify->add_option("--trials", o.trials, "number of points")->capture_default_str();
  verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
  verify->add_option("--bound", o.bound, "numerator/denominator bound")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_flag("--timings", o.timings, "report wall time per trial");

  auto* partitions = app.add_subcommand("partitions", "list partitions of P with multinomial counts");
  partitions->add_option("P", o.partition_total, "integer to partition")->required()->check(CLI::Range(1, 60));
  partitions->add_option("--max-length", o.max_length, "at most this many parts");
  add_json(partitions);

  auto* bench = app.add_subcommand("bench", "time direct against decomposed evaluation");
  add_file(bench);
  add_json(bench);
  add_cap(bench);
  bench->add_option("--trials", o.bench_trials, "number of points")->capture_default_str();
  bench->add_option("--seed", o.seed, "random seed")->capture_default_str();
  bench->add_option("--bound", o.bound, "numerator/denominator bound")->capture_default_str()->check(CLI::PositiveNumber);

  auto* evaluate_cmd = app.add_subcommand("evaluate", "re-evaluate the factors of decompose --json output");
  evaluate_cmd->add_option("file", o.file, "decompose --json output")->required();
  add_json(evaluate_cmd);
  add_cap(evaluate_cmd);
  add_at(evaluate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*discriminant) return cmd_discriminant(o, out);
    if (*resultant) return cmd_resultant(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*partitions) return cmd_partitions(o, out);
    if (*bench) return cmd_bench(o, out);
    if (*evaluate_cmd) return cmd_evaluate(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ContextError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SymbolicCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace eqres
