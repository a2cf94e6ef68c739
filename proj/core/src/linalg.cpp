#include "bohr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bohr {

namespace {

std::string dims_of(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InputError("dimension mismatch: " + dims_of(a.matrix()) + " vs " +
                     dims_of(b.matrix()));
  }
}

HermitianMatrix from_spectrum(const ComplexMatrix& basis, const RealVector& values) {
  const ComplexMatrix m = basis * values.cast<Complex>().asDiagonal() * basis.adjoint();
  return hermitize(m);
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

void require_square_finite(const ComplexMatrix& m, const std::string& what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InputError(what + ": expected a nonempty square matrix, got " + dims_of(m));
  }
  if (!m.allFinite()) {
    throw InputError(what + ": matrix has non-finite entries");
  }
}

double hermitian_tolerance(const ComplexMatrix& m) {
  return kHermitianRelTol * std::max(1.0, max_abs(m));
}

double psd_tolerance(const ComplexMatrix& m) {
  return kPsdRelTol * std::max(1.0, max_abs(m));
}

bool is_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= hermitian_tolerance(m);
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

HermitianMatrix HermitianMatrix::from(const ComplexMatrix& m) {
  require_square_finite(m, "HermitianMatrix");
  const double asym = max_abs(m - m.adjoint());
  if (asym > hermitian_tolerance(m)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |M - M*| = " << asym << " exceeds tolerance "
       << hermitian_tolerance(m);
    throw PreconditionError(os.str());
  }
  return hermitize(m);
}

HermitianMatrix HermitianMatrix::identity(Index dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(Index dim) {
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& diag) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(diag.size()),
                                        static_cast<Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m(static_cast<Index>(i), static_cast<Index>(i)) = diag[i];
  }
  return HermitianMatrix(std::move(m));
}

// Sums and real multiples of exactly Hermitian matrices stay exactly Hermitian.
HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  require_same_dim(*this, o);
  return HermitianMatrix(m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  require_same_dim(*this, o);
  return HermitianMatrix(m_ - o.m_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const { return HermitianMatrix(m_ * s); }

HermitianMatrix hermitize(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InputError("hermitize: expected a square matrix, got " + dims_of(m));
  }
  ComplexMatrix h = (m + m.adjoint()) * 0.5;
  for (Index i = 0; i < h.rows(); ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
  return HermitianMatrix(std::move(h));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return basis * eigenvalues.cast<Complex>().asDiagonal() * basis.adjoint();
}

double SpectralDecomposition::reconstruction_residual(const HermitianMatrix& h) const {
  return max_abs(reconstruct() - h.matrix());
}

double SpectralDecomposition::orthonormality_residual() const {
  const Index n = basis.cols();
  return max_abs(basis.adjoint() * basis - ComplexMatrix::Identity(n, n));
}

SpectralDecomposition eig_hermitian(const HermitianMatrix& h) {
  require_square_finite(h.matrix(), "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eig_hermitian: eigensolver did not converge", INFINITY);
  }
  SpectralDecomposition d{solver.eigenvalues(), solver.eigenvectors()};

  const double recon = d.reconstruction_residual(h);
  const double ortho = d.orthonormality_residual();
  if (recon > kEigTol * std::max(1.0, max_abs(h.matrix())) || ortho > kEigTol) {
    std::ostringstream os;
    os << "eig_hermitian: residual budget exceeded (reconstruction " << recon
       << ", orthonormality " << ortho << ")";
    throw ConvergenceError(os.str(), std::max(recon, ortho));
  }
  return d;
}

RealVector eigenvalues(const HermitianMatrix& h) {
  require_square_finite(h.matrix(), "eigenvalues");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigenvalues: eigensolver did not converge", INFINITY);
  }
  return solver.eigenvalues();
}

HermitianMatrix apply_scalar_function(const HermitianMatrix& h, const ScalarFunction& f) {
  const SpectralDecomposition d = eig_hermitian(h);
  RealVector values(d.eigenvalues.size());
  for (Index i = 0; i < values.size(); ++i) {
    const double lambda = d.eigenvalues(i);
    if (!f.contains(lambda)) {
      std::ostringstream os;
      os.precision(17);
      os << "eigenvalue " << lambda << " lies outside the domain [" << f.lower << ", "
         << f.upper << "] of " << (f.name.empty() ? "f" : f.name);
      throw DomainError(os.str(), lambda);
    }
    values(i) = f.fn(lambda);
  }
  return from_spectrum(d.basis, values);
}

HermitianMatrix matrix_power(const HermitianMatrix& a, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    std::ostringstream os;
    os << "matrix_power: exponent must be a finite positive number, got " << r;
    throw PreconditionError(os.str());
  }
  const SpectralDecomposition d = eig_hermitian(a);
  const double tol = psd_tolerance(a.matrix());
  const double min_eig = d.eigenvalues(0);
  if (min_eig < -tol) {
    std::ostringstream os;
    os.precision(17);
    os << "matrix_power: operand is not positive semidefinite (min eigenvalue " << min_eig
       << " < -" << tol << ")";
    throw PreconditionError(os.str());
  }
  RealVector values(d.eigenvalues.size());
  for (Index i = 0; i < values.size(); ++i) {
    const double lambda = std::max(0.0, d.eigenvalues(i));
    values(i) = lambda == 0.0 ? 0.0 : std::pow(lambda, r);
  }
  return from_spectrum(d.basis, values);
}

HermitianMatrix abs_op(const ComplexMatrix& a) {
  return matrix_power(hermitize(a.adjoint() * a), 0.5);
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  const RealVector values = eigenvalues(hermitize(a.adjoint() * a));
  return std::sqrt(std::max(0.0, values(values.size() - 1)));
}

ComplexMatrix rank_one(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) {
    std::ostringstream os;
    os << "rank_one: dimension mismatch (" << u.size() << " vs " << v.size() << ")";
    throw InputError(os.str());
  }
  return u * v.adjoint();
}

ComplexVector basis_vector(Index dim, Index j) {
  if (j < 0 || j >= dim) throw InputError("basis_vector: index out of range");
  ComplexVector e = ComplexVector::Zero(dim);
  e(j) = 1.0;
  return e;
}

}  // namespace bohr
