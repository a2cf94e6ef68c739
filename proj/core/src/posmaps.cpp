#include "bohr/posmaps.hpp"

#include <cmath>
#include <sstream>

namespace bohr {

PositiveMap::PositiveMap(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InputError("PositiveMap: Kraus family must be nonempty");
  const Index rows = kraus_.front().rows();
  const Index cols = kraus_.front().cols();
  if (rows == 0 || cols == 0) throw InputError("PositiveMap: empty Kraus operator");
  for (const auto& v : kraus_) {
    if (v.rows() != rows || v.cols() != cols) {
      throw InputError("PositiveMap: Kraus operators must share one shape");
    }
    if (!v.allFinite()) throw InputError("PositiveMap: Kraus operator has non-finite entries");
  }
}

PositiveMap PositiveMap::identity(Index dim) {
  return PositiveMap({ComplexMatrix::Identity(dim, dim)});
}

PositiveMap PositiveMap::zero(Index in_dim, Index out_dim) {
  return PositiveMap({ComplexMatrix::Zero(out_dim, in_dim)});
}

ComplexMatrix PositiveMap::apply(const ComplexMatrix& a) const {
  if (a.rows() != in_dim() || a.cols() != in_dim()) {
    std::ostringstream os;
    os << "apply_map: expected a " << in_dim() << "x" << in_dim() << " operand, got "
       << a.rows() << "x" << a.cols();
    throw InputError(os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(out_dim(), out_dim());
  for (const auto& v : kraus_) out.noalias() += v * a * v.adjoint();
  return out;
}

HermitianMatrix PositiveMap::apply(const HermitianMatrix& a) const {
  return hermitize(apply(a.matrix()));
}

HermitianMatrix PositiveMap::apply_identity() const {
  return apply(HermitianMatrix::identity(in_dim()));
}

PositiveMap PositiveMap::scaled(double c) const {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw PreconditionError("PositiveMap::scaled: factor must be finite and nonnegative");
  }
  PositiveMap out = *this;
  const double s = std::sqrt(c);
  for (auto& v : out.kraus_) v *= s;
  if (out.congruence_factor_) *out.congruence_factor_ *= s;
  return out;
}

ComplexMatrix apply_map(const PositiveMap& phi, const ComplexMatrix& a) { return phi.apply(a); }

PositiveMap congruence_map(const ComplexMatrix& x) {
  if (x.size() == 0 || !x.allFinite()) {
    throw InputError("congruence_map: factor must be nonempty and finite");
  }
  PositiveMap phi({x.adjoint()});
  phi.congruence_factor_ = x;
  return phi;
}

PositiveMap state_compression_map(const ComplexVector& e, const HermitianMatrix& d) {
  if (std::abs(e.norm() - 1.0) > kUnitVectorTol) {
    std::ostringstream os;
    os.precision(17);
    os << "state_compression_map: e must be a unit vector (norm " << e.norm() << ")";
    throw PreconditionError(os.str());
  }
  const SpectralDecomposition sd = eig_hermitian(d);
  const double tol = psd_tolerance(d.matrix());
  if (sd.eigenvalues(0) < -tol) {
    std::ostringstream os;
    os.precision(17);
    os << "state_compression_map: D is not positive semidefinite (min eigenvalue "
       << sd.eigenvalues(0) << ")";
    throw PreconditionError(os.str());
  }
  std::vector<ComplexMatrix> kraus;
  for (Index k = 0; k < sd.eigenvalues.size(); ++k) {
    const double lambda = sd.eigenvalues(k);
    if (lambda <= 0.0) continue;
    // sqrt(lambda) u_k e*, an out_dim x in_dim operator
    kraus.push_back(std::sqrt(lambda) * (sd.basis.col(k) * e.adjoint()));
  }
  if (kraus.empty()) return PositiveMap::zero(e.size(), d.dim());
  return PositiveMap(std::move(kraus));
}

WeightedField::WeightedField(std::vector<FieldEntry> entries) {
  for (auto& entry : entries) {
    if (!std::isfinite(entry.mu) || entry.mu < 0.0) {
      throw PreconditionError("WeightedField: measure weights must be finite and nonnegative");
    }
    if (!std::isfinite(entry.alpha) || entry.alpha <= 0.0) {
      throw PreconditionError("WeightedField: coefficients alpha must be finite and positive");
    }
    if (entry.mu == 0.0) continue;
    if (entry.a.dim() == 0) throw InputError("WeightedField: empty operator");
    if (entry.a.dim() != entry.phi.in_dim()) {
      std::ostringstream os;
      os << "WeightedField: operator of dim " << entry.a.dim() << " does not match map input dim "
         << entry.phi.in_dim();
      throw InputError(os.str());
    }
    const PsdVerdict v = is_psd(entry.a, psd_tolerance(entry.a.matrix()));
    if (!v.is_psd) {
      std::ostringstream os;
      os.precision(17);
      os << "WeightedField: operator is not positive semidefinite (min eigenvalue "
         << v.min_eigenvalue << ")";
      throw PreconditionError(os.str());
    }
    entries_.push_back(std::move(entry));
  }
  if (entries_.empty()) throw InputError("WeightedField: no entries with positive measure");
  for (const auto& entry : entries_) {
    if (entry.phi.out_dim() != out_dim()) {
      throw InputError("WeightedField: all maps must share one output dimension");
    }
  }
}

std::vector<Index> WeightedField::dims() const {
  std::vector<Index> out;
  for (const auto& entry : entries_) out.push_back(entry.a.dim());
  return out;
}

std::vector<double> WeightedField::alphas() const {
  std::vector<double> out;
  for (const auto& entry : entries_) out.push_back(entry.alpha);
  return out;
}

double condition_weight(double alpha, double r) { return std::pow(alpha, 1.0 / (1.0 - r)); }

double condition_total(const WeightedField& field, double r) {
  double q = 0.0;
  for (const auto& entry : field.entries()) q += entry.mu * condition_weight(entry.alpha, r);
  return q;
}

void require_exponent(double r, double hard_lower, double soft_upper, const VerifyOptions& opts,
                      const char* where) {
  std::ostringstream os;
  if (!std::isfinite(r) || !(r > hard_lower)) {
    os << where << ": exponent r = " << r << " must exceed " << hard_lower;
    throw PreconditionError(os.str());
  }
  if (r > soft_upper && !opts.allow_out_of_range) {
    os << where << ": exponent r = " << r << " outside (" << hard_lower << ", " << soft_upper
       << "]; pass allow_out_of_range to explore";
    throw PreconditionError(os.str());
  }
}

InequalityReport check_condition(const WeightedField& field, double r, const VerifyOptions& opts) {
  require_exponent(r, 1.0, 2.0, opts, "check_condition");
  const Index dim = field.out_dim();
  HermitianMatrix lhs = HermitianMatrix::zero(dim);
  for (const auto& entry : field.entries()) {
    lhs = lhs + entry.phi.apply_identity() * (entry.mu * condition_weight(entry.alpha, r));
  }
  const HermitianMatrix rhs = HermitianMatrix::identity(dim) * condition_total(field, r);
  return make_report(lhs, rhs,
                     ReportContext{"condition", r, field.alphas(), field.dims(), std::nullopt},
                     opts.tol_scale);
}

HermitianMatrix UnitalizedField::unital_sum() const {
  HermitianMatrix sum = HermitianMatrix::zero(base.out_dim());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& entry = base.entries()[i];
    sum = sum + entry.phi.apply_identity() * (entry.mu * p[i] / q);
  }
  return sum + extra_map.apply_identity() * (1.0 / q);
}

double UnitalizedField::unitality_residual() const {
  return max_abs(unital_sum().matrix() -
                 ComplexMatrix::Identity(base.out_dim(), base.out_dim()));
}

double UnitalizedField::unital_tolerance() const {
  return kUnitalRelTol * static_cast<double>(base.out_dim());
}

std::vector<JensenTerm> UnitalizedField::jensen_terms(const std::vector<HermitianMatrix>& tilde,
                                                      const HermitianMatrix& tilde_extra) const {
  if (tilde.size() != base.size()) {
    throw InputError("jensen_terms: need one operator per field entry");
  }
  double total_measure = 1.0;  // the extra point
  for (const auto& entry : base.entries()) total_measure += entry.mu;

  std::vector<JensenTerm> terms;
  terms.reserve(base.size() + 1);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& entry = base.entries()[i];
    terms.push_back(
        JensenTerm{entry.mu, 1.0, tilde[i], entry.phi.scaled(total_measure * p[i] / q)});
  }
  terms.push_back(JensenTerm{1.0, 1.0, tilde_extra, extra_map.scaled(total_measure / q)});
  return terms;
}

std::vector<JensenTerm> UnitalizedField::substituted_terms() const {
  std::vector<HermitianMatrix> tilde;
  tilde.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    tilde.push_back(base.entries()[i].a * (1.0 / p[i]));
  }
  return jensen_terms(tilde, HermitianMatrix::zero(extra_map.in_dim()));
}

UnitalizedField unitalize(const WeightedField& field, double r,
                          const std::optional<ComplexVector>& e, const VerifyOptions& opts) {
  require_exponent(r, 1.0, 2.0, opts, "unitalize");
  const Index dim = field.out_dim();

  std::vector<double> p;
  HermitianMatrix weighted = HermitianMatrix::zero(dim);
  for (const auto& entry : field.entries()) {
    p.push_back(condition_weight(entry.alpha, r));
    weighted = weighted + entry.phi.apply_identity() * (entry.mu * p.back());
  }
  const double q = condition_total(field, r);
  const HermitianMatrix d = HermitianMatrix::identity(dim) * q - weighted;

  const double min_eig = eigenvalues(d)(0);
  if (min_eig < -psd_tolerance(d.matrix())) {
    std::ostringstream os;
    os.precision(17);
    os << "unitalize: weighted condition fails (min eigenvalue of Q I - sum mu_i P_i phi_i(I) is "
       << min_eig << ")";
    throw ConditionError(os.str(), min_eig);
  }

  const ComplexVector unit = e.value_or(basis_vector(dim, 0));
  UnitalizedField out{field, r, unit, state_compression_map(unit, d), q, std::move(p)};
  const double residual = out.unitality_residual();
  if (residual > out.unital_tolerance()) {
    std::ostringstream os;
    os << "unitalize: unitality residual " << residual << " exceeds " << out.unital_tolerance();
    throw Error(os.str());
  }
  return out;
}

}  // namespace bohr
