#include "bohr/registry.hpp"

#include <algorithm>
#include <cmath>

#include "bohr/inequalities.hpp"

namespace bohr {

namespace {

const json& require(const json& j, const char* k) {
  if (!j.is_object()) throw InputError("<root>: expected an object");
  const auto it = j.find(k);
  if (it == j.end()) throw InputError(std::string("<root>: missing key '") + k + "'");
  return *it;
}

std::vector<ComplexMatrix> matrices(const json& j, const char* k) {
  const json& arr = require(j, k);
  if (!arr.is_array() || arr.empty()) {
    throw InputError(std::string(k) + ": expected a nonempty array of matrices");
  }
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(matrix_from_json(arr[i], std::string(k) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<HermitianMatrix> hermitians(const json& j, const char* k) {
  const json& arr = require(j, k);
  if (!arr.is_array() || arr.empty()) {
    throw InputError(std::string(k) + ": expected a nonempty array of matrices");
  }
  std::vector<HermitianMatrix> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(hermitian_from_json(arr[i], std::string(k) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

double exponent(const json& instance, const InstanceOverrides& o) {
  if (o.r) return *o.r;
  if (instance.is_object() && instance.contains("r")) return real_from_json(instance["r"], "r");
  throw InputError("no exponent: pass r explicitly or include \"r\" in the instance");
}

bool uses_entries(const std::string& name) {
  return name == "field_bohr" || name == "condition" || name == "unitalize" || name == "jensen";
}

bool uses_alpha_list(const std::string& name) {
  return name == "vasic_keckic" || name == "congruence_bohr" || name == "convexity_chain" ||
         name == "orthogonal_family";
}

json with_alpha_override(const std::string& name, json instance, const std::vector<double>& alpha) {
  if (alpha.empty()) return instance;
  if (uses_entries(name)) {
    require(instance, "entries");
    json& entries = instance["entries"];
    if (!entries.is_array() || entries.size() != alpha.size()) {
      throw InputError("alpha override: expected " + std::to_string(entries.size()) + " values");
    }
    const char* k = name == "jensen" ? "beta" : "alpha";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      entries[i].erase("alpha");
      entries[i][k] = alpha[i];
    }
    return instance;
  }
  if (uses_alpha_list(name)) {
    instance["alpha"] = alpha;
    return instance;
  }
  throw InputError("alpha override is not applicable to '" + name + "'");
}

VerificationResult from_report(const InequalityReport& r) {
  return VerificationResult{r.holds(), r.min_gap(), r.near_equality(), report_to_json(r)};
}

VerificationResult from_scalar(const ScalarReport& s) {
  return VerificationResult{s.holds(), s.gap, s.near_equality(), scalar_report_to_json(s)};
}

VerificationResult run_unitalize(const json& instance, double r, const VerifyOptions& opts) {
  const WeightedField field = field_from_json(instance);
  std::optional<ComplexVector> e;
  if (instance.contains("e")) e = vector_from_json(instance["e"], "e");

  const UnitalizedField u = unitalize(field, r, e, opts);
  const InequalityReport direct = field_bohr(field, r, opts);
  const std::vector<JensenTerm> terms = u.substituted_terms();
  const InequalityReport jensen = jensen_discrete(terms, OperatorConvexFunction::power(r, opts), opts);

  // Jensen on the unital field yields both sides divided by Q^r.
  const double scale = std::pow(u.q, r);
  const double tol =
      kReplicationRelTol * std::max({1.0, max_abs(direct.lhs.matrix()), max_abs(direct.rhs.matrix())});
  const double lhs_err = max_abs(jensen.lhs.matrix() * scale - direct.lhs.matrix());
  const double rhs_err = max_abs(jensen.rhs.matrix() * scale - direct.rhs.matrix());
  const double residual = u.unitality_residual();
  const bool ok = residual <= u.unital_tolerance() && lhs_err <= tol && rhs_err <= tol;

  json report{{"context", "unitalize"},
              {"r", r},
              {"q", u.q},
              {"e", vector_to_json(u.e)},
              {"unitality_residual", residual},
              {"unital_tolerance", u.unital_tolerance()},
              {"lhs_replication_error", lhs_err},
              {"rhs_replication_error", rhs_err},
              {"replication_tolerance", tol},
              {"verdict", ok},
              {"jensen", report_to_json(jensen)},
              {"field_bohr", report_to_json(direct)}};
  return VerificationResult{ok, direct.min_gap(), direct.near_equality(), std::move(report)};
}

}  // namespace

const std::vector<std::string>& verifier_names() {
  static const std::vector<std::string> names{
      "vasic_keckic", "bohr_scalar",     "bohr_pair", "field_bohr",        "condition",
      "unitalize",    "congruence_bohr", "hansen",    "convexity_chain",   "orthogonal_family",
      "jensen"};
  return names;
}

bool is_verifier(const std::string& name) {
  const auto& names = verifier_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationResult verify_instance(const std::string& inequality, const json& raw,
                                   const InstanceOverrides& overrides, const VerifyOptions& opts) {
  if (!is_verifier(inequality)) throw InputError("unknown inequality '" + inequality + "'");
  if (!raw.is_object()) throw InputError("<root>: expected an object");
  const json instance = with_alpha_override(inequality, raw, overrides.alpha);

  std::string function_tag;
  if (inequality == "jensen") {
    function_tag = overrides.function.value_or("");
    if (function_tag.empty()) {
      const auto it = instance.find("function");
      if (it == instance.end() || !it->is_string()) {
        throw InputError("jensen: missing \"function\" (\"square\" or \"power\")");
      }
      function_tag = it->get<std::string>();
    }
  }
  // t^2 needs no exponent.
  const bool needs_r = !(inequality == "jensen" && function_tag == "square");
  const double r = needs_r ? exponent(instance, overrides) : 2.0;

  if (inequality == "vasic_keckic") {
    const ComplexVector z = vector_from_json(require(instance, "z"), "z");
    const std::vector<double> alpha = reals_from_json(require(instance, "alpha"), "alpha");
    const std::vector<Complex> zs(z.data(), z.data() + z.size());
    return from_scalar(vasic_keckic_scalar(zs, alpha, r));
  }
  if (inequality == "bohr_scalar") {
    return from_scalar(bohr_scalar(complex_from_json(require(instance, "z"), "z"),
                                   complex_from_json(require(instance, "w"), "w"), r));
  }
  if (inequality == "bohr_pair") {
    return from_report(bohr_operator_pair(matrix_from_json(require(instance, "A"), "A"),
                                          matrix_from_json(require(instance, "B"), "B"), r, opts));
  }
  if (inequality == "field_bohr") {
    return from_report(field_bohr(field_from_json(instance), r, opts));
  }
  if (inequality == "condition") {
    return from_report(check_condition(field_from_json(instance), r, opts));
  }
  if (inequality == "unitalize") return run_unitalize(instance, r, opts);
  if (inequality == "congruence_bohr") {
    const auto x = matrices(instance, "X");
    const auto a = hermitians(instance, "A");
    const auto alpha = reals_from_json(require(instance, "alpha"), "alpha");
    return from_report(congruence_bohr(x, a, alpha, r, opts));
  }
  if (inequality == "convexity_chain") {
    const auto x = matrices(instance, "X");
    const auto a = hermitians(instance, "A");
    const auto alpha = reals_from_json(require(instance, "alpha"), "alpha");
    const ChainReport chain = convexity_chain_bohr(x, a, alpha, r, opts);
    json report{{"context", "convexity_chain"},
                {"convexity_step", report_to_json(chain.convexity_step)},
                {"hansen_step", report_to_json(chain.hansen_step)},
                {"combined", report_to_json(chain.combined)},
                {"conjunction", chain.conjunction()},
                {"consistent", chain.consistent()},
                {"min_gap_eigenvalue", chain.min_gap()},
                {"verdict", chain.conjunction()}};
    const bool near = chain.conjunction() && chain.min_gap() < kEqBand;
    return VerificationResult{chain.conjunction(), chain.min_gap(), near, std::move(report)};
  }
  if (inequality == "hansen") {
    return from_report(hansen_check(matrix_from_json(require(instance, "X"), "X"),
                                    hermitian_from_json(require(instance, "A"), "A"), r, opts));
  }
  if (inequality == "orthogonal_family") {
    const auto a = matrices(instance, "A");
    const auto alpha = reals_from_json(require(instance, "alpha"), "alpha");
    const OrthogonalFamilyReport fam = orthogonal_family_bohr(a, alpha, r, opts);
    const double min_gap = std::min(fam.op.min_gap(), fam.norm.gap);
    json report{{"context", "orthogonal_family"},
                {"operator", report_to_json(fam.op)},
                {"norm", scalar_report_to_json(fam.norm)},
                {"min_gap_eigenvalue", min_gap},
                {"near_equality", fam.op.near_equality() && fam.norm.near_equality()},
                {"verdict", fam.holds()}};
    const bool near = fam.op.near_equality() && fam.norm.near_equality();
    return VerificationResult{fam.holds(), min_gap, near, std::move(report)};
  }
  // jensen
  const OperatorConvexFunction f = OperatorConvexFunction::parse(function_tag, r, opts);
  const std::vector<JensenTerm> terms = jensen_terms_from_json(instance);
  return from_report(jensen_discrete(terms, f, opts));
}

}  // namespace bohr
