#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "invfield/fields.hpp"

namespace invfield {

struct CovarianceEstimate {
  CMatrix C_hat;
  RMatrix std_err;
  long n = 0;
};

/// Levels at which every test reports a decision.
inline const std::vector<double>& test_levels() {
  static const std::vector<double> levels{0.05, 0.01, 0.001};
  return levels;
}

struct TestReport {
  std::string test;
  double statistic = 0.0;
  double p_value = 1.0;
  long n = 0;
  std::map<double, bool> reject_at;
  std::uint64_t seed = 0;

  bool rejects(double alpha) const { return p_value < alpha; }
};

TestReport make_report(std::string test, double statistic, double p_value, long n, std::uint64_t seed = 0);

/// C_hat(i, k) = mean of (x_i - xbar_i) conj(x_k - xbar_k); std_err is the
/// plug-in standard error sqrt(mean |y - C|^2 / n) of each product y.
CovarianceEstimate estimate_cov(const std::vector<CVector>& samples);

struct ColumnStructureReport {
  /// max over i, k and columns j != l of |Cov(T_ij, T_kl)| / std_err.
  double cross_column_z = 0.0;
  /// max over columns j of |C^(j)(i, k) - C(i, k)| / std_err, where C^(j) is
  /// the within-column covariance and C the pooled mean over columns.
  double within_column_z = 0.0;
  CovarianceEstimate pooled;
  bool passes = false;
};

/// Covariance structure of coefficient matrices: entries of different
/// columns uncorrelated, and the same row covariance in every column.
/// Passes iff both z-scores are below `z_max`.
ColumnStructureReport check_column_structure(const std::vector<CMatrix>& samples, double z_max = 4.0);

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value
/// Q_KS((sqrt(ne) + 0.12 + 0.11 / sqrt(ne)) D), ne = nm / (n + m).
TestReport ks_two_sample(std::vector<double> x, std::vector<double> y);

/// Q_KS(lambda) = 2 sum_{j >= 1} (-1)^(j-1) exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

/// Anderson-Darling test for normality with estimated mean and variance.
/// The statistic reported is A*^2 = A^2 (1 + 0.75/n + 2.25/n^2).
TestReport gaussianity_test(std::vector<double> samples);

/// Real features compared by the invariance tests.
using FeatureMap = std::function<std::vector<double>(const CVector&)>;
using Transform = std::function<CVector(const CVector&, const GroupElement&)>;
using VectorSampler = std::function<CVector(RngStream&)>;

/// Re, Im (skipped for the real label-0 entry) and modulus of every
/// coefficient with label >= 0.
FeatureMap coefficient_features(const SelfConjBasis& basis);
/// Re, Im and modulus of every entry.
FeatureMap all_entry_features();

/// Compares each feature of group A against the same feature of group B
/// transformed by each g, by KS with Bonferroni correction over features and
/// elements. Reports the smallest adjusted p-value and its KS statistic.
TestReport invariance_test(const std::vector<CVector>& group_a, const std::vector<CVector>& group_b,
                           const Transform& transform, const FeatureMap& features,
                           const std::vector<GroupElement>& g_list);

/// Draws both groups from `sampler` (n each) and calls the sample version.
TestReport invariance_test(const VectorSampler& sampler, const Transform& transform,
                           const FeatureMap& features, const std::vector<GroupElement>& g_list, long n,
                           RngStream& rng);

/// Coefficient vectors in `basis`, transformed by a -> D(g^{-1}) a.
TestReport invariance_test(const std::function<CoefficientVector(RngStream&)>& sampler,
                           std::shared_ptr<const SelfConjBasis> basis,
                           const std::vector<GroupElement>& g_list, long n, RngStream& rng);

Transform coefficient_rotation(std::shared_ptr<const SelfConjBasis> basis);

/// Coefficient matrices B of H_ell flattened row-major (index i * d + j),
/// transformed by B -> B D(g).
Transform matrix_right_action(int ell);
CVector flatten(const CMatrix& B);
CMatrix unflatten(const CVector& v, int d);

/// First half of `samples` against e^{i phi} times the second half, for the
/// real and imaginary parts, Bonferroni-combined.
TestReport phase_invariance_test(const std::vector<cplx>& samples, double phi);

}  // namespace invfield
