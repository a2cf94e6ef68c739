#pragma once

// Verifiers for the Bohr-type inequalities: the scalar weighted form and its
// classical two-term case, the operator pair form, the weighted field form
// for positive maps, its congruence corollaries, the contraction step
// (X*AX)^r <= X*A^rX, the orthogonal-ranges form for exponents in (2, 4] and
// the weighted discrete Jensen inequality.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bohr/linalg.hpp"
#include "bohr/order.hpp"
#include "bohr/posmaps.hpp"

namespace bohr {

inline constexpr double kScalarRelTol = 1e-10;
inline constexpr double kOrthoRelTol = 1e-10;
inline constexpr double kContractionSlack = 1e-12;

struct ScalarReport {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // rhs - lhs
  bool verdict = false;
  double tolerance = 0.0;
  std::vector<Complex> z;
  std::vector<double> alpha;
  double r = 0.0;
  /// Independent evaluation of rhs through a second formula, when one exists.
  std::optional<double> cross_check_rhs;

  bool holds() const noexcept { return verdict; }
  bool near_equality() const noexcept { return verdict && gap < kEqBand; }
};

/// 1e-10 * max(1, lhs + rhs)
double scalar_tolerance(double lhs, double rhs);

/// |sum z_i|^r <= (sum alpha_i^{1/(1-r)})^{r-1} sum alpha_i |z_i|^r, r > 1.
ScalarReport vasic_keckic_scalar(std::span<const Complex> z, std::span<const double> alpha,
                                 double r);

/// |z + w|^2 <= r|z|^2 + s|w|^2 with 1/r + 1/s = 1. cross_check_rhs holds
/// the two-term weighted form at exponent 2 with alpha = (r - 1, 1).
ScalarReport bohr_scalar(Complex z, Complex w, double r);

/// |A + B|^2 <= r|A|^2 + s|B|^2
InequalityReport bohr_operator_pair(const ComplexMatrix& a, const ComplexMatrix& b, double r,
                                    const VerifyOptions& opts = {});

/// (sum mu_i phi_i(A_i))^r <= Q^{r-1} sum mu_i alpha_i phi_i(A_i^r),
/// Q = sum mu_i alpha_i^{1/(1-r)}. Throws ConditionError when the weighted
/// condition on the maps fails.
InequalityReport field_bohr(const WeightedField& field, double r, const VerifyOptions& opts = {});

/// field_bohr with mu_i = 1 and phi_i(A) = X_i* A X_i.
InequalityReport congruence_bohr(std::span<const ComplexMatrix> x,
                                 std::span<const HermitianMatrix> a,
                                 std::span<const double> alpha, double r,
                                 const VerifyOptions& opts = {});

/// (X*AX)^r <= X*A^rX for a contraction X and PSD A.
InequalityReport hansen_check(const ComplexMatrix& x, const HermitianMatrix& a, double r,
                              const VerifyOptions& opts = {});

/// The two steps of the convexity argument for contractions, with
/// beta_i = alpha_i^{1/(1-r)} and C_i = X_i* A_i X_i:
///   (sum C_i)^r <= (sum beta)^{r-1} sum beta_i^{1-r} C_i^r      (convexity)
///              <= (sum beta)^{r-1} sum alpha_i X_i* A_i^r X_i   (contraction step)
struct ChainReport {
  InequalityReport convexity_step;
  InequalityReport hansen_step;
  InequalityReport combined;  // congruence_bohr on the same data

  bool conjunction() const noexcept { return convexity_step.holds() && hansen_step.holds(); }
  bool consistent() const noexcept { return conjunction() == combined.holds(); }
  double min_gap() const noexcept;
};

ChainReport convexity_chain_bohr(std::span<const ComplexMatrix> x,
                                 std::span<const HermitianMatrix> a,
                                 std::span<const double> alpha, double r,
                                 const VerifyOptions& opts = {});

struct OrthogonalFamilyReport {
  InequalityReport op;  // |sum A_i|^r <= c sum alpha_i |A_i|^r
  ScalarReport norm;    // ||sum A_i||^r <= c sum alpha_i ||A_i||^r

  bool holds() const noexcept { return op.holds() && norm.holds(); }
};

/// 1e-10 * max_i ||A_i||^2
double orthogonality_tolerance(std::span<const ComplexMatrix> a);

/// Family with A_i* A_j = 0 (i != j), 2 < r <= 4, c = (sum alpha^{2/(2-r)})^{(r-2)/2}.
OrthogonalFamilyReport orthogonal_family_bohr(std::span<const ComplexMatrix> a,
                                              std::span<const double> alpha, double r,
                                              const VerifyOptions& opts = {});

/// The closed set of operator convex functions the Jensen verifier accepts:
/// t^2 on the real line and t^r on [0, inf) for 1 < r <= 2. Both vanish at 0.
class OperatorConvexFunction {
 public:
  enum class Kind { square, power };

  static OperatorConvexFunction square();
  static OperatorConvexFunction power(double r, const VerifyOptions& opts = {});
  /// "square" or "power"; `r` is used by "power".
  static OperatorConvexFunction parse(const std::string& tag, double r,
                                      const VerifyOptions& opts = {});

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }
  std::string name() const;
  HermitianMatrix operator()(const HermitianMatrix& a) const;

 private:
  OperatorConvexFunction(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}
  Kind kind_;
  double exponent_;
};

/// f((1/B) sum mu_i beta_i phi_i(A_i)) <= (1/B) sum mu_i beta_i phi_i(f(A_i)),
/// B = sum mu_i beta_i, under sum mu_i beta_i phi_i(I) <= B I. Terms with zero
/// weight are dropped.
InequalityReport jensen_discrete(std::span<const JensenTerm> terms,
                                 const OperatorConvexFunction& f,
                                 const VerifyOptions& opts = {});

}  // namespace bohr
