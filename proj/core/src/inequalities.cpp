#include "bohr/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bohr {

namespace {

ScalarReport finish(ScalarReport s) {
  s.gap = s.rhs - s.lhs;
  s.tolerance = scalar_tolerance(s.lhs, s.rhs);
  s.verdict = s.gap >= -s.tolerance;
  return s;
}

void require_contraction(const ComplexMatrix& x, const char* where) {
  const double norm = operator_norm(x);
  if (norm > 1.0 + kContractionSlack) {
    std::ostringstream os;
    os.precision(17);
    os << where << ": X is not a contraction (operator norm " << norm << ")";
    throw PreconditionError(os.str());
  }
}

template <class T>
void require_nonempty_same_size(std::span<const T> a, std::size_t n, const char* where) {
  if (a.empty() || a.size() != n) {
    std::ostringstream os;
    os << where << ": expected " << n << " items, got " << a.size();
    throw InputError(os.str());
  }
}

void require_positive(std::span<const double> alpha, const char* where) {
  for (double a : alpha) {
    if (!std::isfinite(a) || a <= 0.0) {
      std::ostringstream os;
      os << where << ": coefficients alpha must be finite and positive";
      throw PreconditionError(os.str());
    }
  }
}

std::vector<Index> dims_of(std::span<const HermitianMatrix> a) {
  std::vector<Index> d;
  for (const auto& m : a) d.push_back(m.dim());
  return d;
}

}  // namespace

double scalar_tolerance(double lhs, double rhs) {
  return kScalarRelTol * std::max(1.0, lhs + rhs);
}

ScalarReport vasic_keckic_scalar(std::span<const Complex> z, std::span<const double> alpha,
                                 double r) {
  if (z.empty()) throw InputError("vasic_keckic_scalar: empty input");
  require_nonempty_same_size(alpha, z.size(), "vasic_keckic_scalar");
  require_positive(alpha, "vasic_keckic_scalar");
  if (!std::isfinite(r) || !(r > 1.0)) {
    throw PreconditionError("vasic_keckic_scalar: exponent r must exceed 1");
  }

  // The bound is invariant under alpha -> c alpha; evaluating it with the
  // smallest coefficient scaled to 1 keeps alpha^{1/(1-r)} in (0, 1].
  const double alpha_min = *std::min_element(alpha.begin(), alpha.end());
  Complex sum = 0.0;
  double weight_sum = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double a = alpha[i] / alpha_min;
    sum += z[i];
    weight_sum += std::pow(a, 1.0 / (1.0 - r));
    weighted += a * std::pow(std::abs(z[i]), r);
  }

  ScalarReport s;
  s.label = "vasic_keckic";
  s.lhs = std::pow(std::abs(sum), r);
  s.rhs = std::pow(weight_sum, r - 1.0) * weighted;
  s.z.assign(z.begin(), z.end());
  s.alpha.assign(alpha.begin(), alpha.end());
  s.r = r;
  return finish(std::move(s));
}

ScalarReport bohr_scalar(Complex z, Complex w, double r) {
  if (!std::isfinite(r) || !(r > 1.0)) {
    throw PreconditionError("bohr_scalar: r must exceed 1");
  }
  const double s_conj = r / (r - 1.0);
  ScalarReport s;
  s.label = "bohr_scalar";
  s.lhs = std::norm(z + w);
  s.rhs = r * std::norm(z) + s_conj * std::norm(w);
  s.z = {z, w};
  s.r = r;

  const std::vector<Complex> zz{z, w};
  const std::vector<double> aa{r - 1.0, 1.0};
  s.cross_check_rhs = vasic_keckic_scalar(zz, aa, 2.0).rhs;
  return finish(std::move(s));
}

InequalityReport bohr_operator_pair(const ComplexMatrix& a, const ComplexMatrix& b, double r,
                                    const VerifyOptions& opts) {
  require_square_finite(a, "bohr_operator_pair");
  require_square_finite(b, "bohr_operator_pair");
  if (a.rows() != b.rows()) throw InputError("bohr_operator_pair: dimension mismatch");
  if (!std::isfinite(r) || !(r > 1.0)) {
    throw PreconditionError("bohr_operator_pair: r must exceed 1");
  }
  const double s = r / (r - 1.0);
  auto square = [](const HermitianMatrix& h) { return hermitize(h.matrix() * h.matrix()); };

  const HermitianMatrix lhs = square(abs_op(a + b));
  const HermitianMatrix rhs = square(abs_op(a)) * r + square(abs_op(b)) * s;
  return make_report(lhs, rhs, ReportContext{"bohr_pair", r, {}, {a.rows()}, std::nullopt},
                     opts.tol_scale);
}

InequalityReport field_bohr(const WeightedField& field, double r, const VerifyOptions& opts) {
  require_exponent(r, 1.0, 2.0, opts, "field_bohr");
  const InequalityReport cond = check_condition(field, r, opts);
  if (!cond.holds()) {
    std::ostringstream os;
    os.precision(17);
    os << "field_bohr: weighted condition on the maps fails (min gap eigenvalue "
       << cond.min_gap() << ")";
    throw ConditionError(os.str(), cond.min_gap());
  }

  const Index dim = field.out_dim();
  HermitianMatrix mean = HermitianMatrix::zero(dim);
  HermitianMatrix weighted = HermitianMatrix::zero(dim);
  for (const auto& entry : field.entries()) {
    mean = mean + entry.phi.apply(entry.a) * entry.mu;
    weighted = weighted + entry.phi.apply(matrix_power(entry.a, r)) * (entry.mu * entry.alpha);
  }
  const double q = condition_total(field, r);
  const HermitianMatrix lhs = matrix_power(mean, r);
  const HermitianMatrix rhs = weighted * std::pow(q, r - 1.0);
  return make_report(lhs, rhs,
                     ReportContext{"field_bohr", r, field.alphas(), field.dims(), std::nullopt},
                     opts.tol_scale);
}

InequalityReport congruence_bohr(std::span<const ComplexMatrix> x,
                                 std::span<const HermitianMatrix> a,
                                 std::span<const double> alpha, double r,
                                 const VerifyOptions& opts) {
  if (x.empty()) throw InputError("congruence_bohr: empty family");
  require_nonempty_same_size(a, x.size(), "congruence_bohr");
  require_nonempty_same_size(alpha, x.size(), "congruence_bohr");
  require_positive(alpha, "congruence_bohr");

  std::vector<FieldEntry> entries;
  for (std::size_t i = 0; i < x.size(); ++i) {
    entries.push_back(FieldEntry{1.0, alpha[i], a[i], congruence_map(x[i])});
  }
  InequalityReport report = field_bohr(WeightedField(std::move(entries)), r, opts);
  report.context.label = "congruence_bohr";
  return report;
}

InequalityReport hansen_check(const ComplexMatrix& x, const HermitianMatrix& a, double r,
                              const VerifyOptions& opts) {
  require_exponent(r, 1.0, 2.0, opts, "hansen_check");
  if (x.rows() != a.dim()) throw InputError("hansen_check: X and A dimensions do not match");
  require_contraction(x, "hansen_check");

  const HermitianMatrix compressed = hermitize(x.adjoint() * a.matrix() * x);
  const HermitianMatrix lhs = matrix_power(compressed, r);
  const HermitianMatrix rhs = hermitize(x.adjoint() * matrix_power(a, r).matrix() * x);
  return make_report(lhs, rhs, ReportContext{"hansen", r, {}, {x.cols()}, std::nullopt},
                     opts.tol_scale);
}

double ChainReport::min_gap() const noexcept {
  return std::min(convexity_step.min_gap(), hansen_step.min_gap());
}

ChainReport convexity_chain_bohr(std::span<const ComplexMatrix> x,
                                 std::span<const HermitianMatrix> a,
                                 std::span<const double> alpha, double r,
                                 const VerifyOptions& opts) {
  if (x.empty()) throw InputError("convexity_chain_bohr: empty family");
  require_nonempty_same_size(a, x.size(), "convexity_chain_bohr");
  require_nonempty_same_size(alpha, x.size(), "convexity_chain_bohr");
  require_positive(alpha, "convexity_chain_bohr");
  require_exponent(r, 1.0, 2.0, opts, "convexity_chain_bohr");
  for (const auto& xi : x) require_contraction(xi, "convexity_chain_bohr");

  const Index dim = x.front().cols();
  std::vector<double> beta;
  double beta_sum = 0.0;
  for (double al : alpha) {
    beta.push_back(condition_weight(al, r));
    beta_sum += beta.back();
  }
  const double prefactor = std::pow(beta_sum, r - 1.0);

  HermitianMatrix sum = HermitianMatrix::zero(dim);
  HermitianMatrix intermediate = HermitianMatrix::zero(dim);
  HermitianMatrix upper = HermitianMatrix::zero(dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].rows() != a[i].dim() || x[i].cols() != dim) {
      throw InputError("convexity_chain_bohr: X_i and A_i dimensions do not match");
    }
    const HermitianMatrix c = hermitize(x[i].adjoint() * a[i].matrix() * x[i]);
    sum = sum + c;
    intermediate = intermediate + matrix_power(c, r) * std::pow(beta[i], 1.0 - r);
    upper = upper +
            hermitize(x[i].adjoint() * matrix_power(a[i], r).matrix() * x[i]) * alpha[i];
  }
  intermediate = intermediate * prefactor;
  upper = upper * prefactor;

  const std::vector<double> alphas(alpha.begin(), alpha.end());
  ReportContext ctx{"convexity_step", r, alphas, dims_of(a), std::nullopt};
  InequalityReport step1 = make_report(matrix_power(sum, r), intermediate, ctx, opts.tol_scale);
  ctx.label = "hansen_step";
  InequalityReport step2 = make_report(intermediate, upper, ctx, opts.tol_scale);
  InequalityReport combined = congruence_bohr(x, a, alpha, r, opts);
  return ChainReport{std::move(step1), std::move(step2), std::move(combined)};
}

double orthogonality_tolerance(std::span<const ComplexMatrix> a) {
  double max_norm = 0.0;
  for (const auto& m : a) max_norm = std::max(max_norm, operator_norm(m));
  return kOrthoRelTol * max_norm * max_norm;
}

OrthogonalFamilyReport orthogonal_family_bohr(std::span<const ComplexMatrix> a,
                                              std::span<const double> alpha, double r,
                                              const VerifyOptions& opts) {
  if (a.empty()) throw InputError("orthogonal_family_bohr: empty family");
  require_nonempty_same_size(alpha, a.size(), "orthogonal_family_bohr");
  require_positive(alpha, "orthogonal_family_bohr");
  require_exponent(r, 2.0, 4.0, opts, "orthogonal_family_bohr");
  const Index dim = a.front().rows();
  for (const auto& m : a) {
    require_square_finite(m, "orthogonal_family_bohr");
    if (m.rows() != dim) throw InputError("orthogonal_family_bohr: dimension mismatch");
  }

  const double tol = orthogonality_tolerance(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      const double cross = operator_norm(a[i].adjoint() * a[j]);
      if (cross > tol) {
        std::ostringstream os;
        os.precision(17);
        os << "orthogonal_family_bohr: ranges of A_" << i << " and A_" << j
           << " are not orthogonal (||A_i* A_j|| = " << cross << " > " << tol << ")";
        throw PreconditionError(os.str());
      }
    }
  }

  double weight_sum = 0.0;
  for (double al : alpha) weight_sum += std::pow(al, 2.0 / (2.0 - r));
  const double c = std::pow(weight_sum, (r - 2.0) / 2.0);

  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  HermitianMatrix weighted = HermitianMatrix::zero(dim);
  double weighted_norms = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += a[i];
    weighted = weighted + matrix_power(abs_op(a[i]), r) * alpha[i];
    weighted_norms += alpha[i] * std::pow(operator_norm(a[i]), r);
  }

  const std::vector<double> alphas(alpha.begin(), alpha.end());
  InequalityReport op =
      make_report(matrix_power(abs_op(total), r), weighted * c,
                  ReportContext{"orthogonal_family", r, alphas, {dim}, std::nullopt},
                  opts.tol_scale);

  ScalarReport norm;
  norm.label = "orthogonal_family_norm";
  norm.lhs = std::pow(operator_norm(total), r);
  norm.rhs = c * weighted_norms;
  norm.alpha = alphas;
  norm.r = r;
  return OrthogonalFamilyReport{std::move(op), finish(std::move(norm))};
}

OperatorConvexFunction OperatorConvexFunction::square() { return {Kind::square, 2.0}; }

OperatorConvexFunction OperatorConvexFunction::power(double r, const VerifyOptions& opts) {
  require_exponent(r, 1.0, 2.0, opts, "OperatorConvexFunction::power");
  return {Kind::power, r};
}

OperatorConvexFunction OperatorConvexFunction::parse(const std::string& tag, double r,
                                                     const VerifyOptions& opts) {
  if (tag == "square") return square();
  if (tag == "power") return power(r, opts);
  throw InputError("unsupported function '" + tag + "' (expected 'square' or 'power')");
}

std::string OperatorConvexFunction::name() const {
  if (kind_ == Kind::square) return "t^2";
  std::ostringstream os;
  os << "t^" << exponent_;
  return os.str();
}

HermitianMatrix OperatorConvexFunction::operator()(const HermitianMatrix& a) const {
  if (kind_ == Kind::square) return hermitize(a.matrix() * a.matrix());
  return matrix_power(a, exponent_);
}

InequalityReport jensen_discrete(std::span<const JensenTerm> terms,
                                 const OperatorConvexFunction& f, const VerifyOptions& opts) {
  std::vector<const JensenTerm*> live;
  double total = 0.0;
  for (const auto& t : terms) {
    if (!std::isfinite(t.mu) || !std::isfinite(t.beta) || t.mu < 0.0 || t.beta < 0.0) {
      throw PreconditionError("jensen_discrete: weights must be finite and nonnegative");
    }
    if (t.mu == 0.0 || t.beta == 0.0) continue;
    if (t.a.dim() != t.phi.in_dim()) {
      throw InputError("jensen_discrete: operator does not match map input dimension");
    }
    live.push_back(&t);
    total += t.mu * t.beta;
  }
  if (live.empty() || !(total > 0.0)) {
    throw InputError("jensen_discrete: total weight must be positive");
  }
  const Index dim = live.front()->phi.out_dim();
  for (const auto* t : live) {
    if (t->phi.out_dim() != dim) {
      throw InputError("jensen_discrete: all maps must share one output dimension");
    }
  }

  // Subunital maps are admissible here: both supported functions satisfy
  // f(0) <= 0 on an interval containing 0.
  HermitianMatrix unit = HermitianMatrix::zero(dim);
  for (const auto* t : live) unit = unit + t->phi.apply_identity() * (t->mu * t->beta);
  const InequalityReport cond =
      make_report(unit, HermitianMatrix::identity(dim) * total,
                  ReportContext{"jensen_condition", {}, {}, {dim}, std::nullopt}, opts.tol_scale);
  if (!cond.holds()) {
    std::ostringstream os;
    os.precision(17);
    os << "jensen_discrete: weighted condition on the maps fails (min gap eigenvalue "
       << cond.min_gap() << ")";
    throw ConditionError(os.str(), cond.min_gap());
  }

  HermitianMatrix mean = HermitianMatrix::zero(dim);
  HermitianMatrix image = HermitianMatrix::zero(dim);
  std::vector<double> betas;
  std::vector<Index> dims;
  for (const auto* t : live) {
    const double w = t->mu * t->beta / total;
    mean = mean + t->phi.apply(t->a) * w;
    image = image + t->phi.apply(f(t->a)) * w;
    betas.push_back(t->beta);
    dims.push_back(t->a.dim());
  }
  const std::optional<double> r =
      f.kind() == OperatorConvexFunction::Kind::power ? std::optional(f.exponent()) : std::nullopt;
  return make_report(f(mean), image, ReportContext{"jensen_" + f.name(), r, betas, dims, std::nullopt},
                     opts.tol_scale);
}

}  // namespace bohr
