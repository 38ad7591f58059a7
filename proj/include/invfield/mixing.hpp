#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invfield/bases.hpp"

namespace invfield {

enum class Verdict { Mixing, NotMixing, Inconclusive };

std::string to_string(Verdict v);

struct MixingReport {
  int dim = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<GroupElement> witness_g;
  /// Pairing labels (m1, m2), m1 < m2, of the two rows.
  std::optional<std::array<int, 2>> pair;
  /// Best pair margin found: min over m > 0 of ||D_{mi,m}| - |D_{mi,-m}||,
  /// minimized over the two rows.
  double margin = 0.0;
  long samples_used = 0;
  double tol = 0.0;
  /// Proof or reason behind the verdict.
  std::string reason;
};

/// |D_{mi,m}(g)| - |D_{mi,-m}(g)|, rows and columns by pairing label.
double moduli_gap(const SelfConjBasis& basis, const GroupElement& g, int mi, int m);
double moduli_gap(const SelfConjBasis& basis, const CMatrix& D, int mi, int m);

/// min over m > 0 of |moduli_gap| for row `mi`.
double row_margin(const SelfConjBasis& basis, const CMatrix& D, int mi);

/// Haar witness search. Sample i draws from an independent child stream, so
/// the result does not depend on `threads`. Ties go to the lowest sample.
MixingReport check_mixing(const SelfConjBasis& basis, long n_samples, double tol, RngStream& rng,
                          int threads = 1);

/// Evaluates one given element as a witness. Mixing iff its pair margin
/// exceeds `tol`; dimensions 2 and 3 are NotMixing as in check_mixing.
MixingReport check_witness(const SelfConjBasis& basis, const GroupElement& g, double tol);

/// <g(h_s ^ h_-s), h_m ^ h_-m> = D_{m,s} D_{-m,-s} - D_{-m,s} D_{m,-s}.
cplx wedge_pairing_complex(const SelfConjBasis& basis, const GroupElement& g, int s, int m);
/// Real part of wedge_pairing_complex (the imaginary part vanishes).
double wedge_pairing(const SelfConjBasis& basis, const GroupElement& g, int s, int m);

struct OrbitReport {
  /// Numerical dimension of W_m for m = 1..h (entry m - 1).
  std::vector<int> ranks;
  /// Pairs (i, j), 1 <= i, j <= h, with W_i orthogonal to W_j.
  std::vector<std::pair<int, int>> S;
  /// Indices i appearing as the first entry of a pair in S.
  std::vector<int> S_tilde;
  Verdict verdict = Verdict::Inconclusive;
  long samples_used = 0;
  bool converged = false;
};

/// Orbit spans W_m of h_m ^ h_-m in the second exterior power, grown in
/// batches of 4 dim(^2) samples until every rank is unchanged for three
/// consecutive batches. Verdict is Mixing iff at least two indices lie
/// outside S_tilde.
OrbitReport orbit_orthogonality(const SelfConjBasis& basis, long n_samples, double rank_tol,
                                RngStream& rng);

/// One exact comparison of P_{s,j} against P_{s,ell-j}.
struct ExactComparison {
  int s = 0;
  int j = 0;
  bool differ = false;          // polynomials differ on the circle
  bool proportional = false;    // one is a scalar multiple of the other
  int lead_x_plus = 0;          // leading exponent of |a|^2 in P_{s,j}
  int lead_x_minus = 0;         // same for P_{s,ell-j}
  int h1 = 0;                   // min(s, j)
  int h2 = 0;                   // min(s, ell - j)
};

struct S3ExactReport {
  int ell = 0;
  int m1 = 0;
  int m2 = 0;
  /// Doubled torus weights of the two rows (m1, m2) and (m1, -m2).
  std::array<std::array<int, 2>, 2> rows{};
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ExactComparison> comparisons;
  /// h1 != h2 for every comparison with s > ell/2.
  bool table_certificate = false;
  /// Leading exponents differ for every comparison.
  bool leading_certificate = false;
};

/// Exact check that the torus-adapted basis of H_ell (x) H_ell is mixing.
/// With c = floor(ell/2) the rows are e_{c+m1} (x) e_{c+m2} and
/// e_{c+m1} (x) e_{ell-c-m2}, 0 < m1 <= m2 <= ceil(ell/2). Each factor of a
/// row entry is some P^ell_{s,j}(|a|^2); for every row index s in use and
/// every j != ell - j, P_{s,j} and P_{s,ell-j} are compared exactly.
S3ExactReport s3_exact_mixing(int ell, int m1, int m2);

}  // namespace invfield
