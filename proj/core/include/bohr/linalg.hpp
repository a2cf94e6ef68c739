#pragma once

// Dense complex matrices, Hermitian eigendecomposition and the spectral
// functional calculus everything else is built on.

#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bohr/error.hpp"

namespace bohr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kEigTol = 1e-11;
inline constexpr double kHermitianRelTol = 1e-10;
inline constexpr double kPsdRelTol = 1e-9;

/// max_{j,k} |M[j][k]|
double max_abs(const ComplexMatrix& m);

/// Throws InputError unless `m` is square with finite entries.
void require_square_finite(const ComplexMatrix& m, const std::string& what);

/// 1e-10 * max(1, ||M||_max)
double hermitian_tolerance(const ComplexMatrix& m);

/// 1e-9 * max(1, ||A||_max)
double psd_tolerance(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m);

ComplexMatrix adjoint(const ComplexMatrix& m);

/// A square complex matrix whose entries satisfy M = M* to within
/// `hermitian_tolerance`. Constructed either by checking (`from`) or by
/// symmetrizing (`hermitize`); the stored matrix is always exactly
/// Hermitian bit-for-bit.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Rejects inputs that are not Hermitian within tolerance.
  static HermitianMatrix from(const ComplexMatrix& m);
  static HermitianMatrix identity(Index dim);
  static HermitianMatrix zero(Index dim);
  static HermitianMatrix diagonal(const std::vector<double>& diag);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;
  friend HermitianMatrix operator*(double s, const HermitianMatrix& h) { return h * s; }

 private:
  friend HermitianMatrix hermitize(const ComplexMatrix& m);
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// (M + M*) / 2, with the diagonal forced real.
HermitianMatrix hermitize(const ComplexMatrix& m);

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  ComplexMatrix basis;     // columns are orthonormal eigenvectors

  ComplexMatrix reconstruct() const;
  /// ||U diag(lambda) U* - H||_max
  double reconstruction_residual(const HermitianMatrix& h) const;
  /// ||U* U - I||_max
  double orthonormality_residual() const;
};

/// Throws ConvergenceError (carrying the residual) when the result misses
/// the reconstruction or orthonormality budget.
SpectralDecomposition eig_hermitian(const HermitianMatrix& h);

/// Eigenvalues only, ascending. Same solver as eig_hermitian.
RealVector eigenvalues(const HermitianMatrix& h);

/// A real function together with the closed interval it is defined on.
struct ScalarFunction {
  std::string name;
  std::function<double(double)> fn;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double t) const { return t >= lower && t <= upper; }
};

/// U diag(f(lambda)) U*, re-hermitized. Throws DomainError naming the first
/// eigenvalue outside [f.lower, f.upper].
HermitianMatrix apply_scalar_function(const HermitianMatrix& h, const ScalarFunction& f);

/// A^r for positive semidefinite A and r > 0. Eigenvalues in [-psd_tol, 0)
/// are clamped to 0 and 0^r is taken as 0.
HermitianMatrix matrix_power(const HermitianMatrix& a, double r);

/// |A| = (A*A)^{1/2}
HermitianMatrix abs_op(const ComplexMatrix& a);

/// Spectral norm: the largest eigenvalue of |A|.
double operator_norm(const ComplexMatrix& a);

/// u v*, i.e. the map y -> <y, v> u.
ComplexMatrix rank_one(const ComplexVector& u, const ComplexVector& v);

/// j-th standard basis vector of C^dim.
ComplexVector basis_vector(Index dim, Index j);

}  // namespace bohr
