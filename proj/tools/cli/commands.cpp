#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bohr/explorer.hpp"
#include "bohr/inequalities.hpp"
#include "bohr/registry.hpp"
#include "bohr/serialize.hpp"

namespace bohr::cli {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw InputError("empty item in list '" + text + "'");
    parts.push_back(item);
  }
  if (parts.empty()) throw InputError("empty list");
  return parts;
}

double parse_real(const std::string& s, const char* what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(x)) {
    throw InputError(std::string(what) + ": '" + s + "' is not a finite number");
  }
  return x;
}

long long parse_integer(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw InputError(std::string(what) + ": '" + s + "' is not an integer");
  return x;
}

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& p : split_list(text)) out.push_back(parse_real(p, what));
  return out;
}

// "1,2,5" or "1-4" or a mix such as "1-3,6".
std::vector<Index> parse_indices(const std::string& text, const char* what) {
  std::vector<Index> out;
  for (const auto& p : split_list(text)) {
    const auto dash = p.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(static_cast<Index>(parse_integer(p, what)));
      continue;
    }
    const long long lo = parse_integer(p.substr(0, dash), what);
    const long long hi = parse_integer(p.substr(dash + 1), what);
    if (hi < lo) throw InputError(std::string(what) + ": empty range '" + p + "'");
    for (long long k = lo; k <= hi; ++k) out.push_back(static_cast<Index>(k));
  }
  for (Index v : out) {
    if (v < 1) throw InputError(std::string(what) + ": entries must be positive");
  }
  return out;
}

std::uint64_t parse_seed(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    if (!s.empty() && s.front() != '-') x = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) {
    throw InputError(std::string(what) + ": '" + s + "' is not an unsigned 64-bit integer");
  }
  return x;
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << dump(j);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError(path + ": cannot open for writing");
  file << dump(j);
  if (!file) throw InputError(path + ": write failed");
}

struct VerifyArgs {
  std::string inequality;
  std::string file;
  std::optional<double> r;
  std::string alpha;
  std::string function;
  bool allow = false;
  double tol_scale = 1.0;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const json instance = read_json_file(a.file);
  InstanceOverrides overrides;
  overrides.r = a.r;
  if (!a.alpha.empty()) overrides.alpha = parse_reals(a.alpha, "--alpha");
  if (!a.function.empty()) overrides.function = a.function;
  const VerificationResult res =
      verify_instance(a.inequality, instance, overrides, VerifyOptions{a.allow, a.tol_scale});
  emit(res.report, a.out, out);
  return res.holds ? kExitOk : kExitViolated;
}

struct SearchArgs {
  std::string target = "all";
  std::string seed;
  long long trials = 1000;
  std::string dims;
  std::string n;
  std::string r;
  std::string alpha;
  std::string phi;
  bool allow = false;
  std::string expect = "holds";
  double tol_scale = 1.0;
  std::string out;
  unsigned threads = 0;
  long long max_instances = 25;
};

int cmd_search(const SearchArgs& a, const std::optional<std::string>& env_seed, std::ostream& out,
               std::ostream& err) {
  std::uint64_t seed = kDefaultSeed;
  if (env_seed && !env_seed->empty()) seed = parse_seed(*env_seed, "BOHR_OPLIB_SEED");
  if (!a.seed.empty()) seed = parse_seed(a.seed, "--seed");
  if (a.trials < 1) throw InputError("--trials must be at least 1");
  if (a.max_instances < 0) throw InputError("--max-instances must be nonnegative");
  if (a.expect != "holds" && a.expect != "violation") {
    throw InputError("--expect must be 'holds' or 'violation'");
  }

  std::vector<std::string> targets;
  if (a.target == "all") {
    targets = search_targets();
  } else {
    targets = split_list(a.target);
  }

  std::vector<SearchReport> reports;
  for (const auto& target : targets) {
    TrialConfig c = default_config(target, seed, static_cast<std::size_t>(a.trials));
    if (!a.dims.empty()) c.dims = parse_indices(a.dims, "--dims");
    if (!a.n.empty()) c.n_grid = parse_indices(a.n, "--n");
    if (!a.r.empty()) c.r_grid = parse_reals(a.r, "--r");
    if (!a.alpha.empty()) c.alpha = parse_reals(a.alpha, "--alpha");
    if (!a.phi.empty()) c.maps = parse_map_family(a.phi);
    c.allow_out_of_range = a.allow;
    c.tol_scale = a.tol_scale;
    c.threads = a.threads;
    c.max_recorded_instances = static_cast<std::size_t>(a.max_instances);
    reports.push_back(run_search(c));
  }

  std::size_t violations = 0;
  bool all_rejected = false;
  for (const auto& rep : reports) {
    violations += rep.violations.size();
    if (rep.precondition_failures == rep.total) {
      all_rejected = true;
      err << "search: every trial of '" << rep.config.target
          << "' failed a precondition (exponent outside the proven range? try "
             "--allow-out-of-range)\n";
    }
  }

  json doc;
  if (reports.size() == 1) {
    doc = search_report_to_json(reports.front());
  } else {
    json list = json::array();
    for (const auto& rep : reports) list.push_back(search_report_to_json(rep));
    doc = json{{"master_seed", seed},
               {"total_violations", violations},
               {"reports", std::move(list)}};
  }
  emit(doc, a.out, out);

  if (all_rejected) return kExitPrecondition;
  const bool found = violations > 0;
  if (a.expect == "violation") return found ? kExitOk : kExitViolated;
  return found ? kExitViolated : kExitOk;
}

int cmd_powers(const std::string& file, double r, const std::string& out_path, std::ostream& out) {
  const json doc = read_json_file(file);
  const HermitianMatrix a = hermitian_from_json(doc, "");
  emit(matrix_to_json(matrix_power(a, r).matrix()), out_path, out);
  return kExitOk;
}

}  // namespace

std::string demo_transcript() {
  std::ostringstream t;
  const auto verdict = [](bool holds, bool near) {
    return std::string(holds ? (near ? "holds, equality" : "holds") : "VIOLATED");
  };

  t << "scalar Bohr |z + w|^2 <= r|z|^2 + s|w|^2, 1/r + 1/s = 1\n";
  {
    const ScalarReport s = bohr_scalar(1.0, 1.0, 2.0);
    t << "  z = w = 1, r = 2: " << num(s.lhs) << " ≤ " << num(s.rhs) << "  ["
      << verdict(s.holds(), s.near_equality()) << "]\n";
    const ScalarReport u = bohr_scalar(Complex(1, 2), Complex(-3, 0.5), 3.0);
    t << "  z = 1+2i, w = -3+0.5i, r = 3: " << num(u.lhs) << " ≤ " << num(u.rhs) << "  ["
      << verdict(u.holds(), u.near_equality()) << "]\n";
  }

  t << "\nweighted form |sum z_i|^r <= (sum alpha_i^{1/(1-r)})^{r-1} sum alpha_i |z_i|^r\n";
  {
    const std::vector<Complex> z1{1.0, 1.0};
    const std::vector<double> a1{1.0, 1.0};
    const ScalarReport s1 = vasic_keckic_scalar(z1, a1, 2.0);
    t << "  z = (1, 1), alpha = (1, 1), r = 2: " << num(s1.lhs) << " ≤ " << num(s1.rhs) << "  ["
      << verdict(s1.holds(), s1.near_equality()) << "]\n";
    const std::vector<Complex> z2{1.0, 2.0};
    const std::vector<double> a2{1.0, 2.0};
    const ScalarReport s2 = vasic_keckic_scalar(z2, a2, 2.0);
    t << "  z = (1, 2), alpha = (1, 2), r = 2: " << num(s2.lhs) << " ≤ " << num(s2.rhs) << "  ["
      << verdict(s2.holds(), s2.near_equality()) << "]\n";
  }

  t << "\noperator pair |A + B|^2 <= r|A|^2 + s|B|^2\n";
  {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    const InequalityReport p = bohr_operator_pair(i2, i2, 2.0);
    t << "  A = B = I_2, r = 2: lhs = " << num(p.lhs.matrix()(0, 0).real()) << " I, rhs = "
      << num(p.rhs.matrix()(0, 0).real()) << " I, min gap eigenvalue " << num(p.min_gap())
      << "  [" << verdict(p.holds(), p.near_equality()) << "]\n";
  }

  t << "\northogonal ranges |sum A_i|^r <= c sum alpha_i |A_i|^r, c = (sum alpha^{2/(2-r)})^{(r-2)/2}\n";
  {
    ComplexVector x = ComplexVector::Zero(3);
    x(2) = 1.0;
    const ComplexMatrix basis = ComplexMatrix::Identity(3, 3);
    const auto family = rank_one_family(basis, 2, x);
    const std::vector<double> alpha{1.0, 1.0};
    const OrthogonalFamilyReport f = orthogonal_family_bohr(family, alpha, 3.0);
    t << "  A_i = e_i (x) x, n = 2, |x| = 1, alpha = (1, 1), r = 3\n";
    t << "    operator: lhs = " << num(f.op.lhs.matrix()(2, 2).real()) << " P_x, rhs = "
      << num(f.op.rhs.matrix()(2, 2).real()) << " P_x, 2^{3/2} = " << num(std::pow(2.0, 1.5))
      << "  [" << verdict(f.op.holds(), f.op.near_equality()) << "]\n";
    t << "    norm: " << num(f.norm.lhs) << " ≤ " << num(f.norm.rhs) << "  ["
      << verdict(f.norm.holds(), f.norm.near_equality()) << "]\n";
  }

  t << "\nunitalization of a subunital field\n";
  {
    const ComplexMatrix x = ComplexMatrix::Identity(2, 2) / std::sqrt(2.0);
    std::vector<FieldEntry> entries;
    entries.push_back(FieldEntry{1.0, 1.0, HermitianMatrix::diagonal({1.0, 3.0}),
                                 congruence_map(x)});
    const WeightedField field(std::move(entries));
    const UnitalizedField u = unitalize(field, 2.0);
    const HermitianMatrix d = u.extra_map.apply_identity();
    t << "  n = 1, mu = alpha = 1, r = 2, phi(A) = X*AX with X = I/sqrt(2)\n";
    t << "    P = " << num(u.p.front()) << ", Q = " << num(u.q) << ", phi(I) = "
      << num(field.entries().front().phi.apply_identity().matrix()(0, 0).real())
      << " I, extra point contributes " << num(d.matrix()(0, 0).real()) << " I\n";
    t << "    unitality residual " << num(u.unitality_residual()) << " (tolerance "
      << num(u.unital_tolerance()) << ")\n";
    const InequalityReport direct = field_bohr(field, 2.0);
    t << "    field inequality on A = diag(1, 3): min gap eigenvalue " << num(direct.min_gap())
      << "  [" << verdict(direct.holds(), direct.near_equality()) << "]\n";
  }

  t << "\ncondition check sum mu_i P_i phi_i(I) <= Q I\n";
  {
    const ComplexMatrix x = ComplexMatrix::Identity(2, 2) * std::sqrt(2.0);
    std::vector<FieldEntry> entries;
    for (int i = 0; i < 2; ++i) {
      entries.push_back(FieldEntry{1.0, 1.0, HermitianMatrix::identity(2), congruence_map(x)});
    }
    const WeightedField field(std::move(entries));
    const InequalityReport c = check_condition(field, 2.0);
    t << "  n = 2, alpha = (1, 1), r = 2, X = sqrt(2) I: lhs = "
      << num(c.lhs.matrix()(0, 0).real()) << " I, rhs = " << num(c.rhs.matrix()(0, 0).real())
      << " I  [" << (c.holds() ? "satisfied" : "fails; the field inequality is not applicable")
      << "]\n";
  }
  return t.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed) {
  CLI::App app{"Numerical verifiers for operator Bohr-type inequalities", "bohr"};
  app.require_subcommand(1, 1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify one instance read from a JSON file");
  verify->add_option("inequality", va.inequality, "Verifier name")
      ->required()
      ->check(CLI::IsMember(verifier_names()));
  verify->add_option("--from-file,-f", va.file, "Instance JSON")->required();
  verify->add_option("--r", va.r, "Exponent (overrides the instance)");
  verify->add_option("--alpha", va.alpha, "Comma-separated coefficients (overrides the instance)");
  verify->add_option("--function", va.function, "Jensen function: square or power");
  verify->add_flag("--allow-out-of-range", va.allow, "Permit exponents beyond the proven range");
  verify->add_option("--tol-scale", va.tol_scale, "Multiplier on the report tolerance");
  verify->add_option("--out", va.out, "Write the report here instead of standard output");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Seeded random search for violations");
  search->add_option("--target", sa.target, "Verifier name, comma list, or 'all'");
  search->add_option("--seed", sa.seed, "Master seed (default: BOHR_OPLIB_SEED, else built in)");
  search->add_option("--trials", sa.trials, "Trials per target");
  search->add_option("--dims", sa.dims, "Dimensions, e.g. 1-4 or 2,3");
  search->add_option("--n", sa.n, "Family sizes, e.g. 1-4");
  search->add_option("--r", sa.r, "Exponent grid, comma list");
  search->add_option("--alpha", sa.alpha, "Fixed coefficients, comma list");
  search->add_option("--phi", sa.phi, "Map family: mixed, contraction, kraus or identity");
  search->add_flag("--allow-out-of-range", sa.allow, "Permit exponents beyond the proven range");
  search->add_option("--expect", sa.expect, "holds (default) or violation");
  search->add_option("--tol-scale", sa.tol_scale, "Multiplier on the report tolerance");
  search->add_option("--out", sa.out, "Write the report here instead of standard output");
  search->add_option("--threads", sa.threads, "Worker threads (0: hardware concurrency)");
  search->add_option("--max-instances", sa.max_instances,
                     "Violations recorded with their full instance");

  auto* demo = app.add_subcommand("demo", "Print the worked equality cases");

  std::string pfile;
  double pr = 1.0;
  std::string pout;
  auto* powers = app.add_subcommand("powers", "Print A^r for a PSD matrix");
  powers->add_option("--from-file,-f", pfile, "Matrix JSON")->required();
  powers->add_option("--r", pr, "Exponent")->required();
  powers->add_option("--out", pout, "Write the matrix here instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*verify) return cmd_verify(va, out);
    if (*search) return cmd_search(sa, env_seed, out, err);
    if (*demo) {
      out << demo_transcript();
      return kExitOk;
    }
    if (*powers) return cmd_powers(pfile, pr, pout, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConditionError& e) {
    err << "condition failure: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition failure: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitInput;
}

}  // namespace bohr::cli
