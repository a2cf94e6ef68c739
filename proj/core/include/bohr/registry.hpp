#pragma once

// Named verifiers driven by JSON instance documents. The same entry point
// serves single-instance verification and every trial of a search, so a
// recorded instance replays through exactly the code that produced it.
//
// Instance schemas (matrices and vectors in the interchange format; "r" may
// be omitted when supplied as an override):
//   vasic_keckic       {"z": [c...], "alpha": [...], "r"}
//   bohr_scalar        {"z": c, "w": c, "r"}
//   bohr_pair          {"A": m, "B": m, "r"}
//   field_bohr         {"entries": [{"mu", "alpha", "A", "phi"}...], "r"}
//   condition          same as field_bohr
//   unitalize          same as field_bohr, optional "e": vector
//   congruence_bohr    {"X": [m...], "A": [m...], "alpha": [...], "r"}
//   convexity_chain    same as congruence_bohr
//   hansen             {"X": m, "A": m, "r"}
//   orthogonal_family  {"A": [m...], "alpha": [...], "r"}
//   jensen             {"entries": [{"mu", "beta", "A", "phi"}...],
//                       "function": "square" | "power", "r"}

#include <optional>
#include <string>
#include <vector>

#include "bohr/order.hpp"
#include "bohr/serialize.hpp"

namespace bohr {

inline constexpr double kReplicationRelTol = 1e-9;

struct InstanceOverrides {
  std::optional<double> r;
  std::vector<double> alpha;  // empty: use the instance's coefficients
  std::optional<std::string> function;
};

struct VerificationResult {
  bool holds = false;
  double min_gap = 0.0;
  bool near_equality = false;
  json report;
};

/// Every name verify_instance accepts.
const std::vector<std::string>& verifier_names();
bool is_verifier(const std::string& name);

/// Throws InputError for unknown names or malformed documents, and
/// PreconditionError (or ConditionError) when hypotheses fail.
VerificationResult verify_instance(const std::string& inequality, const json& instance,
                                   const InstanceOverrides& overrides = {},
                                   const VerifyOptions& opts = {});

}  // namespace bohr
