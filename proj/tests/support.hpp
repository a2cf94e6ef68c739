#pragma once

#include <gtest/gtest.h>

#include <string>

#include "bohr/linalg.hpp"

namespace bohr::test {

inline ComplexMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Index>(rows.size());
  const auto m = static_cast<Index>(rows.begin()->size());
  ComplexMatrix out(n, m);
  Index i = 0;
  for (const auto& row : rows) {
    Index k = 0;
    for (const auto& v : row) out(i, k++) = v;
    ++i;
  }
  return out;
}

inline ::testing::AssertionResult near(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return ::testing::AssertionFailure() << "shape mismatch";
  }
  const double d = max_abs(a - b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max abs difference " << d << " > " << tol;
}

inline ::testing::AssertionResult near(const HermitianMatrix& a, const ComplexMatrix& b, double tol) {
  return near(a.matrix(), b, tol);
}

// Plain repeated multiplication, independent of the spectral code.
inline ComplexMatrix integer_power(const ComplexMatrix& a, int k) {
  ComplexMatrix out = ComplexMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace bohr::test
