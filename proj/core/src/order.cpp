#include "bohr/order.hpp"

#include <algorithm>
#include <sstream>

namespace bohr {

PsdVerdict is_psd(const HermitianMatrix& h, double tol) {
  const RealVector values = eigenvalues(h);
  const double min_eig = values(0);
  return PsdVerdict{min_eig >= -tol, min_eig, tol};
}

PsdVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "loewner_leq: dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw InputError(os.str());
  }
  return is_psd(hermitize(b.matrix() - a.matrix()), tol);
}

double report_tolerance(const HermitianMatrix& lhs, const HermitianMatrix& rhs) {
  return kReportRelTol *
         std::max(1.0, operator_norm(lhs.matrix()) + operator_norm(rhs.matrix()));
}

InequalityReport make_report(const HermitianMatrix& lhs, const HermitianMatrix& rhs,
                             ReportContext context, double tol_scale) {
  if (lhs.dim() != rhs.dim()) {
    std::ostringstream os;
    os << "make_report: dimension mismatch (" << lhs.dim() << " vs " << rhs.dim() << ")";
    throw InputError(os.str());
  }
  if (!(tol_scale > 0.0)) throw InputError("make_report: tol_scale must be positive");

  const double tol = report_tolerance(lhs, rhs) * tol_scale;
  const RealVector gap = eigenvalues(hermitize(rhs.matrix() - lhs.matrix()));

  InequalityReport report{lhs, rhs, {}, {}, std::move(context)};
  report.gap_spectrum.assign(gap.data(), gap.data() + gap.size());
  report.verdict = PsdVerdict{gap(0) >= -tol, gap(0), tol};
  if (report.context.dims.empty()) report.context.dims.push_back(lhs.dim());
  return report;
}

}  // namespace bohr
