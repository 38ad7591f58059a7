#include "invfield/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "invfield/irrep.hpp"

#include <boost/math/statistics/anderson_darling.hpp>

namespace invfield {

TestReport make_report(std::string test, double statistic, double p_value, long n, std::uint64_t seed) {
  TestReport r;
  r.test = std::move(test);
  r.statistic = statistic;
  r.p_value = std::clamp(p_value, 0.0, 1.0);
  r.n = n;
  r.seed = seed;
  for (double alpha : test_levels()) r.reject_at[alpha] = r.p_value < alpha;
  return r;
}

CovarianceEstimate estimate_cov(const std::vector<CVector>& samples) {
  const long n = static_cast<long>(samples.size());
  require(n >= 2, "covariance estimation needs at least 2 samples");
  const int d = static_cast<int>(samples.front().size());
  CVector mean = CVector::Zero(d);
  for (const auto& x : samples) {
    require(x.size() == d, "samples have inconsistent dimensions");
    mean += x;
  }
  mean /= static_cast<double>(n);

  CovarianceEstimate est;
  est.n = n;
  est.C_hat = CMatrix::Zero(d, d);
  for (const auto& x : samples) {
    const CVector c = x - mean;
    est.C_hat += c * c.adjoint();
  }
  est.C_hat /= static_cast<double>(n);
  est.C_hat = (est.C_hat + est.C_hat.adjoint()) / 2.0;

  RMatrix dev2 = RMatrix::Zero(d, d);
  for (const auto& x : samples) {
    const CVector c = x - mean;
    dev2 += (c * c.adjoint() - est.C_hat).cwiseAbs2();
  }
  est.std_err = (dev2 / static_cast<double>(n) / static_cast<double>(n)).cwiseSqrt();
  return est;
}

namespace {

double z_score(cplx value, double se) {
  const double mag = std::abs(value);
  if (se > 0.0) return mag / se;
  return mag == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

ColumnStructureReport check_column_structure(const std::vector<CMatrix>& samples, double z_max) {
  const long n = static_cast<long>(samples.size());
  require(n >= 2, "column structure check needs at least 2 samples");
  const int rows = static_cast<int>(samples.front().rows());
  const int cols = static_cast<int>(samples.front().cols());
  require(cols >= 1 && rows >= 1, "coefficient matrices must be nonempty");

  CMatrix mean = CMatrix::Zero(rows, cols);
  for (const auto& B : samples) {
    require(B.rows() == rows && B.cols() == cols, "samples have inconsistent shapes");
    mean += B;
  }
  mean /= static_cast<double>(n);

  // Per-sample covariance products of the centered entries.
  auto product = [&](const CMatrix& B, int i, int j, int k, int l) {
    return (B(i, j) - mean(i, j)) * std::conj(B(k, l) - mean(k, l));
  };

  ColumnStructureReport report;
  const double dn = static_cast<double>(n);

  for (int j = 0; j < cols; ++j)
    for (int l = j + 1; l < cols; ++l)
      for (int i = 0; i < rows; ++i)
        for (int k = 0; k < rows; ++k) {
          cplx c = 0.0;
          for (const auto& B : samples) c += product(B, i, j, k, l);
          c /= dn;
          double dev2 = 0.0;
          for (const auto& B : samples) dev2 += std::norm(product(B, i, j, k, l) - c);
          report.cross_column_z = std::max(report.cross_column_z, z_score(c, std::sqrt(dev2 / dn / dn)));
        }

  CMatrix pooled = CMatrix::Zero(rows, rows);
  for (int j = 0; j < cols; ++j)
    for (const auto& B : samples) {
      const CVector c = B.col(j) - mean.col(j);
      pooled += c * c.adjoint();
    }
  pooled /= dn * cols;

  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < rows; ++k) {
        // y_t = (within-column product) - (column-averaged product)
        cplx diff = 0.0;
        std::vector<cplx> y(static_cast<std::size_t>(n));
        for (long t = 0; t < n; ++t) {
          cplx avg = 0.0;
          for (int jj = 0; jj < cols; ++jj) avg += product(samples[t], i, jj, k, jj);
          y[t] = product(samples[t], i, j, k, j) - avg / static_cast<double>(cols);
          diff += y[t];
        }
        diff /= dn;
        double dev2 = 0.0;
        for (const auto& v : y) dev2 += std::norm(v - diff);
        report.within_column_z = std::max(report.within_column_z, z_score(diff, std::sqrt(dev2 / dn / dn)));
      }

  // Pooled estimate: every column contributes one sample of the row vector.
  CovarianceEstimate est;
  est.n = n;
  est.C_hat = (pooled + pooled.adjoint()) / 2.0;
  RMatrix dev2 = RMatrix::Zero(rows, rows);
  for (const auto& B : samples) {
    CMatrix avg = CMatrix::Zero(rows, rows);
    for (int j = 0; j < cols; ++j) {
      const CVector c = B.col(j) - mean.col(j);
      avg += c * c.adjoint();
    }
    avg /= static_cast<double>(cols);
    dev2 += (avg - est.C_hat).cwiseAbs2();
  }
  est.std_err = (dev2 / dn / dn).cwiseSqrt();
  report.pooled = est;
  report.passes = report.cross_column_z < z_max && report.within_column_z < z_max;
  return report;
}

double kolmogorov_q(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-17) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestReport ks_two_sample(std::vector<double> x, std::vector<double> y) {
  require(!x.empty() && !y.empty(), "KS test needs two nonempty samples");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(i / n - j / m));
  }
  const double ne = std::sqrt(n * m / (n + m));
  const double p = kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
  return make_report("ks_two_sample", d, p, static_cast<long>(x.size() + y.size()));
}

TestReport gaussianity_test(std::vector<double> samples) {
  const std::size_t n = samples.size();
  require(n >= 100, "gaussianity test needs at least 100 samples");
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1));
  require(sd > 0.0 && std::isfinite(sd), "degenerate variance");
  std::sort(samples.begin(), samples.end());
  const double a2 = boost::math::statistics::anderson_darling_normality_statistic(samples, mean, sd);
  const double dn = static_cast<double>(n);
  const double a = a2 * (1.0 + 0.75 / dn + 2.25 / (dn * dn));
  double p;
  if (a >= 0.6) {
    // The quadratic turns upward past its vertex; the tail is monotone.
    const double t = std::min(a, 5.709 / (2.0 * 0.0186));
    p = std::exp(1.2937 - 5.709 * t + 0.0186 * t * t);
  }
  else if (a >= 0.34)
    p = std::exp(0.9177 - 4.279 * a - 1.38 * a * a);
  else if (a >= 0.2)
    p = 1.0 - std::exp(-8.318 + 42.796 * a - 59.938 * a * a);
  else
    p = 1.0 - std::exp(-13.436 + 101.14 * a - 223.73 * a * a);
  if (!std::isfinite(a)) p = 0.0;
  return make_report("gaussianity", a, p, static_cast<long>(n));
}

FeatureMap coefficient_features(const SelfConjBasis& basis) {
  std::vector<int> idx;
  for (int k = basis.half(); k >= (basis.has_zero() ? 0 : 1); --k) idx.push_back(basis.index_of(k));
  const int zero = basis.has_zero() ? basis.half() : -1;
  return [idx, zero](const CVector& a) {
    std::vector<double> f;
    for (int i : idx) {
      f.push_back(a(i).real());
      if (i != zero) f.push_back(a(i).imag());
      f.push_back(std::abs(a(i)));
    }
    return f;
  };
}

FeatureMap all_entry_features() {
  return [](const CVector& a) {
    std::vector<double> f;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      f.push_back(a(i).real());
      f.push_back(a(i).imag());
      f.push_back(std::abs(a(i)));
    }
    return f;
  };
}

namespace {

std::vector<std::vector<double>> feature_columns(const std::vector<CVector>& xs, const FeatureMap& features) {
  std::vector<std::vector<double>> cols;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const std::vector<double> f = features(xs[t]);
    if (cols.empty()) cols.resize(f.size());
    for (std::size_t c = 0; c < f.size(); ++c) cols[c].push_back(f[c]);
  }
  return cols;
}

}  // namespace

TestReport invariance_test(const std::vector<CVector>& group_a, const std::vector<CVector>& group_b,
                           const Transform& transform, const FeatureMap& features,
                           const std::vector<GroupElement>& g_list) {
  require(!g_list.empty(), "invariance test needs at least one group element");
  require(!group_a.empty() && !group_b.empty(), "invariance test needs samples in both groups");
  const auto cols_a = feature_columns(group_a, features);
  std::vector<TestReport> results;
  for (const auto& g : g_list) {
    std::vector<CVector> moved;
    moved.reserve(group_b.size());
    for (const auto& b : group_b) moved.push_back(transform(b, g));
    const auto cols_b = feature_columns(moved, features);
    for (std::size_t c = 0; c < cols_a.size(); ++c) results.push_back(ks_two_sample(cols_a[c], cols_b[c]));
  }
  const double m = static_cast<double>(results.size());
  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (results[r].p_value < results[best].p_value) best = r;
  return make_report("invariance", results[best].statistic, std::min(1.0, results[best].p_value * m),
                     static_cast<long>(group_a.size() + group_b.size()));
}

TestReport invariance_test(const VectorSampler& sampler, const Transform& transform,
                           const FeatureMap& features, const std::vector<GroupElement>& g_list, long n,
                           RngStream& rng) {
  require(n >= 1000, "invariance test needs n >= 1000");
  require(!g_list.empty(), "invariance test needs at least one group element");
  RngStream ra = rng.split(1);
  RngStream rb = rng.split(2);
  rng.next_u64();
  std::vector<CVector> a, b;
  a.reserve(n);
  b.reserve(n);
  for (long t = 0; t < n; ++t) a.push_back(sampler(ra));
  for (long t = 0; t < n; ++t) b.push_back(sampler(rb));
  TestReport r = invariance_test(a, b, transform, features, g_list);
  r.seed = rng.seed();
  return r;
}

Transform coefficient_rotation(std::shared_ptr<const SelfConjBasis> basis) {
  return [basis](const CVector& a, const GroupElement& g) -> CVector {
    return basis_rep_matrix(*basis, inverse(g)) * a;
  };
}

TestReport invariance_test(const std::function<CoefficientVector(RngStream&)>& sampler,
                           std::shared_ptr<const SelfConjBasis> basis,
                           const std::vector<GroupElement>& g_list, long n, RngStream& rng) {
  require(basis != nullptr, "invariance test needs a basis");
  const VectorSampler draw = [&sampler](RngStream& r) { return sampler(r).values(); };
  return invariance_test(draw, coefficient_rotation(basis), coefficient_features(*basis), g_list, n, rng);
}

CVector flatten(const CMatrix& B) {
  CVector v(B.size());
  for (Eigen::Index i = 0; i < B.rows(); ++i)
    for (Eigen::Index j = 0; j < B.cols(); ++j) v(i * B.cols() + j) = B(i, j);
  return v;
}

CMatrix unflatten(const CVector& v, int d) {
  require(v.size() == static_cast<Eigen::Index>(d) * d, "flattened matrix has the wrong length");
  CMatrix B(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) B(i, j) = v(i * d + j);
  return B;
}

Transform matrix_right_action(int ell) {
  return [ell](const CVector& v, const GroupElement& g) -> CVector {
    const auto* x = std::get_if<SU2Element>(&g);
    require(x != nullptr, "coefficient matrices of H_ell transform under SU(2)");
    return flatten(unflatten(v, ell + 1) * rep_matrix(ell, *x));
  };
}

TestReport phase_invariance_test(const std::vector<cplx>& samples, double phi) {
  require(samples.size() >= 2, "phase test needs at least 2 samples");
  const std::size_t half = samples.size() / 2;
  const cplx rot = std::polar(1.0, phi);
  std::vector<double> re_a, im_a, re_b, im_b;
  for (std::size_t t = 0; t < half; ++t) {
    re_a.push_back(samples[t].real());
    im_a.push_back(samples[t].imag());
  }
  for (std::size_t t = half; t < samples.size(); ++t) {
    const cplx z = rot * samples[t];
    re_b.push_back(z.real());
    im_b.push_back(z.imag());
  }
  const TestReport re = ks_two_sample(re_a, re_b);
  const TestReport im = ks_two_sample(im_a, im_b);
  const TestReport& worst = re.p_value <= im.p_value ? re : im;
  return make_report("phase_invariance", worst.statistic, std::min(1.0, 2.0 * worst.p_value),
                     static_cast<long>(samples.size()));
}

}  // namespace invfield
