#pragma once

// Completely positive maps in Kraus form, weighted discrete fields of
// (weight, coefficient, operator, map) and the unitalization that appends
// one extra point carrying the missing mass of the identity.

#include <optional>
#include <vector>

#include "bohr/linalg.hpp"
#include "bohr/order.hpp"

namespace bohr {

inline constexpr double kUnitalRelTol = 1e-9;
inline constexpr double kUnitVectorTol = 1e-12;

/// phi(A) = sum_k V_k A V_k^dagger, every V_k of shape out_dim x in_dim.
class PositiveMap {
 public:
  enum class Kind { kraus, congruence };

  explicit PositiveMap(std::vector<ComplexMatrix> kraus);

  static PositiveMap identity(Index dim);
  static PositiveMap zero(Index in_dim, Index out_dim);

  Index in_dim() const noexcept { return kraus_.front().cols(); }
  Index out_dim() const noexcept { return kraus_.front().rows(); }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

  Kind kind() const noexcept { return congruence_factor_ ? Kind::congruence : Kind::kraus; }
  /// X for maps built by congruence_map(X).
  const std::optional<ComplexMatrix>& congruence_factor() const noexcept {
    return congruence_factor_;
  }

  ComplexMatrix apply(const ComplexMatrix& a) const;
  /// Hermitian in, Hermitian out (re-hermitized).
  HermitianMatrix apply(const HermitianMatrix& a) const;
  /// phi(I)
  HermitianMatrix apply_identity() const;

  /// c * phi for c >= 0 (Kraus operators scaled by sqrt(c)).
  PositiveMap scaled(double c) const;

 private:
  friend PositiveMap congruence_map(const ComplexMatrix& x);
  std::vector<ComplexMatrix> kraus_;
  std::optional<ComplexMatrix> congruence_factor_;
};

ComplexMatrix apply_map(const PositiveMap& phi, const ComplexMatrix& a);

/// phi(A) = X* A X
PositiveMap congruence_map(const ComplexMatrix& x);

/// phi(A) = <A e, e> D, for a unit vector e and PSD D. The Kraus family is
/// { sqrt(lambda_k) u_k e* } over the spectral decomposition of D.
PositiveMap state_compression_map(const ComplexVector& e, const HermitianMatrix& d);

struct FieldEntry {
  double mu = 1.0;     // measure of the point
  double alpha = 1.0;  // coefficient
  HermitianMatrix a;   // positive semidefinite operator
  PositiveMap phi;
};

/// Finite family {(mu_i, alpha_i, A_i, phi_i)}: a discrete parameter space
/// carrying a bounded measure. Entries with mu == 0 are dropped.
class WeightedField {
 public:
  explicit WeightedField(std::vector<FieldEntry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<FieldEntry>& entries() const noexcept { return entries_; }
  Index out_dim() const noexcept { return entries_.front().phi.out_dim(); }
  std::vector<Index> dims() const;
  std::vector<double> alphas() const;

 private:
  std::vector<FieldEntry> entries_;
};

/// alpha^{1/(1-r)}
double condition_weight(double alpha, double r);

/// Q = sum_i mu_i alpha_i^{1/(1-r)}
double condition_total(const WeightedField& field, double r);

/// Throws PreconditionError unless r > hard_lower, and unless r <= soft_upper
/// when out-of-range exploration is not enabled.
void require_exponent(double r, double hard_lower, double soft_upper, const VerifyOptions& opts,
                      const char* where);

/// lhs = sum_i mu_i P_i phi_i(I), rhs = Q I with P_i = alpha_i^{1/(1-r)}.
InequalityReport check_condition(const WeightedField& field, double r,
                                 const VerifyOptions& opts = {});

/// One term of the weighted discrete Jensen inequality.
struct JensenTerm {
  double mu = 1.0;
  double beta = 1.0;
  HermitianMatrix a;  // Hermitian; PSD when the function requires it
  PositiveMap phi;
};

/// The field extended by one extra point of measure 1 whose map supplies
/// Q I - sum_i mu_i P_i phi_i(I), so that the rescaled maps
/// (P_i / Q) phi_i together with phi_extra / Q sum to the identity.
struct UnitalizedField {
  WeightedField base;
  double r = 0.0;
  ComplexVector e;
  PositiveMap extra_map;
  double q = 0.0;
  std::vector<double> p;  // P_i = alpha_i^{1/(1-r)}

  /// sum_i (mu_i P_i / Q) phi_i(I) + (1/Q) phi_extra(I)
  HermitianMatrix unital_sum() const;
  /// ||unital_sum - I||_max
  double unitality_residual() const;
  /// 1e-9 * dim
  double unital_tolerance() const;

  /// The unital field written as Jensen terms (beta = 1, each rescaled map
  /// multiplied by the total measure so the normalized Jensen form reduces
  /// to the unital one). `tilde` holds one operator per base entry,
  /// `tilde_extra` the operator at the extra point.
  std::vector<JensenTerm> jensen_terms(const std::vector<HermitianMatrix>& tilde,
                                       const HermitianMatrix& tilde_extra) const;

  /// jensen_terms with A_i / P_i at the base points and 0 at the extra one.
  std::vector<JensenTerm> substituted_terms() const;
};

/// Appends the extra point. `e` defaults to the first standard basis
/// vector of C^{out_dim}. Throws ConditionError when the weighted condition
/// fails beyond psd tolerance.
UnitalizedField unitalize(const WeightedField& field, double r,
                          const std::optional<ComplexVector>& e = std::nullopt,
                          const VerifyOptions& opts = {});

}  // namespace bohr
