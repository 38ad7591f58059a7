#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "invfield/types.hpp"

namespace testing {

using invfield::cplx;

inline double max_abs(const invfield::CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double identity_defect(const invfield::CMatrix& m) {
  return max_abs(m - invfield::CMatrix::Identity(m.rows(), m.cols()));
}

// Mean and standard error of a sample of real values.
struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

template <class Range>
Moments moments(const Range& xs) {
  double s = 0.0, s2 = 0.0;
  double n = 0.0;
  for (double x : xs) {
    s += x;
    s2 += x * x;
    n += 1.0;
  }
  const double mean = s / n;
  const double var = std::max(0.0, (s2 - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

}  // namespace testing
