#pragma once

// Tolerance-aware Loewner order and the report every operator verifier
// returns.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohr/linalg.hpp"

namespace bohr {

inline constexpr double kReportRelTol = 1e-8;
/// Holding claims whose smallest gap eigenvalue is below this count as
/// near-equality cases.
inline constexpr double kEqBand = 1e-7;

struct PsdVerdict {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  double tolerance_used = 0.0;
};

/// Free-form label plus the parameters that produced a report.
struct ReportContext {
  std::string label;
  std::optional<double> r;
  std::vector<double> alpha;
  std::vector<Index> dims;
  std::optional<std::uint64_t> seed;
};

/// Knobs shared by every verifier.
struct VerifyOptions {
  /// Permit exponents outside the range the inequality is proved for.
  bool allow_out_of_range = false;
  /// Multiplies the report tolerance.
  double tol_scale = 1.0;
};

/// One "lhs <= rhs" claim between Hermitian matrices.
struct InequalityReport {
  HermitianMatrix lhs;
  HermitianMatrix rhs;
  std::vector<double> gap_spectrum;  // eigenvalues of rhs - lhs, ascending
  PsdVerdict verdict;
  ReportContext context;

  bool holds() const noexcept { return verdict.is_psd; }
  double min_gap() const noexcept { return verdict.min_eigenvalue; }
  double tolerance() const noexcept { return verdict.tolerance_used; }
  bool near_equality() const noexcept { return holds() && min_gap() < kEqBand; }
};

/// min eigenvalue >= -tol
PsdVerdict is_psd(const HermitianMatrix& h, double tol);

/// A <= B  iff  B - A >= 0 (within tol)
PsdVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol);

/// 1e-8 * max(1, ||lhs|| + ||rhs||), spectral norms.
double report_tolerance(const HermitianMatrix& lhs, const HermitianMatrix& rhs);

/// Builds the report at report_tolerance(lhs, rhs) * tol_scale.
InequalityReport make_report(const HermitianMatrix& lhs, const HermitianMatrix& rhs,
                             ReportContext context, double tol_scale = 1.0);

}  // namespace bohr
