#include "invfield/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "invfield/exact_poly.hpp"

namespace invfield {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Mixing: return "Mixing";
    case Verdict::NotMixing: return "NotMixing";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

double moduli_gap(const SelfConjBasis& basis, const CMatrix& D, int mi, int m) {
  require(m > 0 && m <= basis.half(), "column label m must satisfy 0 < m <= dim/2");
  require(mi >= 0 && mi <= basis.half(), "row label out of range");
  const int r = basis.index_of(mi);
  return std::abs(D(r, basis.index_of(m))) - std::abs(D(r, basis.index_of(-m)));
}

double moduli_gap(const SelfConjBasis& basis, const GroupElement& g, int mi, int m) {
  return moduli_gap(basis, basis_rep_matrix(basis, g), mi, m);
}

double row_margin(const SelfConjBasis& basis, const CMatrix& D, int mi) {
  double best = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= basis.half(); ++m) best = std::min(best, std::abs(moduli_gap(basis, D, mi, m)));
  return best;
}

namespace {

struct Candidate {
  double margin = -1.0;
  long index = -1;
  std::array<int, 2> pair{0, 0};
};

bool better(const Candidate& x, const Candidate& y) {
  if (x.margin != y.margin) return x.margin > y.margin;
  return x.index >= 0 && (y.index < 0 || x.index < y.index);
}

// Pair margin of one sample: the second-largest row margin, with its rows.
Candidate evaluate_sample(const SelfConjBasis& basis, const CMatrix& D, long index) {
  std::vector<int> rows;
  for (int mi = basis.has_zero() ? 0 : 1; mi <= basis.half(); ++mi) rows.push_back(mi);
  Candidate c;
  c.index = index;
  if (rows.size() < 2) {
    c.margin = 0.0;
    return c;
  }
  std::vector<std::pair<double, int>> margins;
  for (int mi : rows) margins.emplace_back(row_margin(basis, D, mi), mi);
  std::partial_sort(margins.begin(), margins.begin() + 2, margins.end(),
                    [](const auto& x, const auto& y) {
                      return x.first != y.first ? x.first > y.first : x.second < y.second;
                    });
  c.margin = margins[1].first;
  c.pair = {std::min(margins[0].second, margins[1].second),
            std::max(margins[0].second, margins[1].second)};
  return c;
}

bool structural_verdict(const SelfConjBasis& basis, MixingReport& report) {
  if (basis.dim() > 3) return false;
  report.verdict = Verdict::NotMixing;
  report.reason = basis.dim() == 2
                      ? "only one row label m_i >= 0 exists, so no pair of rows can be chosen"
                      : "the label-0 basis vector is a real function, so row 0 has "
                        "|D_{0,m}| = |D_{0,-m}| identically and only one other row remains";
  return true;
}

}  // namespace

MixingReport check_mixing(const SelfConjBasis& basis, long n_samples, double tol, RngStream& rng,
                          int threads) {
  require(n_samples > 0, "n_samples must be positive");
  require(basis.dim() >= 2, "module dimension must be at least 2");
  require(tol >= 0.0, "tolerance must be nonnegative");
  threads = std::max(1, threads);

  const RngStream root(rng.next_u64(), rng.stream_id());
  const SpaceTag tag = basis.tag();

  std::vector<Candidate> best(threads);
  auto work = [&](int t) {
    for (long i = t; i < n_samples; i += threads) {
      RngStream child = root.split(static_cast<std::uint64_t>(i));
      const GroupElement g = haar_sample_for(tag, child);
      const Candidate c = evaluate_sample(basis, basis_rep_matrix(basis, g), i);
      if (better(c, best[t])) best[t] = c;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Candidate top;
  for (const auto& c : best)
    if (better(c, top)) top = c;

  MixingReport report;
  report.dim = basis.dim();
  report.tol = tol;
  report.samples_used = n_samples;
  report.margin = std::max(0.0, top.margin);

  if (structural_verdict(basis, report)) return report;

  if (top.margin > tol) {
    RngStream child = root.split(static_cast<std::uint64_t>(top.index));
    report.witness_g = haar_sample_for(tag, child);
    report.pair = top.pair;
    report.verdict = Verdict::Mixing;
    report.reason = "witness element separates the moduli for both rows";
  } else {
    report.verdict = Verdict::Inconclusive;
    report.reason = "no sampled element cleared the tolerance";
  }
  return report;
}

MixingReport check_witness(const SelfConjBasis& basis, const GroupElement& g, double tol) {
  require(tol >= 0.0, "tolerance must be nonnegative");
  const Candidate c = evaluate_sample(basis, basis_rep_matrix(basis, g), 0);
  MixingReport report;
  report.dim = basis.dim();
  report.tol = tol;
  report.samples_used = 1;
  report.margin = c.margin;
  if (structural_verdict(basis, report)) return report;
  if (c.margin > tol) {
    report.witness_g = g;
    report.pair = c.pair;
    report.verdict = Verdict::Mixing;
    report.reason = "given element separates the moduli for both rows";
  } else {
    report.verdict = Verdict::Inconclusive;
    report.reason = "given element does not clear the tolerance";
  }
  return report;
}

cplx wedge_pairing_complex(const SelfConjBasis& basis, const GroupElement& g, int s, int m) {
  require(s > 0 && s <= basis.half() && m > 0 && m <= basis.half(),
          "wedge labels must satisfy 0 < s, m <= dim/2");
  const CMatrix D = basis_rep_matrix(basis, g);
  const int ps = basis.index_of(s), ns = basis.index_of(-s);
  const int pm = basis.index_of(m), nm = basis.index_of(-m);
  return D(pm, ps) * D(nm, ns) - D(nm, ps) * D(pm, ns);
}

double wedge_pairing(const SelfConjBasis& basis, const GroupElement& g, int s, int m) {
  return wedge_pairing_complex(basis, g, s, m).real();
}

namespace {

class GramSchmidt {
 public:
  GramSchmidt(int ambient, double tol) : ambient_(ambient), tol_(tol) {}

  void add(CVector v) {
    if (static_cast<int>(basis_.size()) >= ambient_) return;
    const double norm0 = v.norm();
    if (norm0 == 0.0) return;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis_) v -= q.dot(v) * q;
    const double norm = v.norm();
    if (norm > tol_ * norm0) basis_.push_back(v / norm);
  }

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<CVector>& vectors() const { return basis_; }

 private:
  int ambient_;
  double tol_;
  std::vector<CVector> basis_;
};

}  // namespace

OrbitReport orbit_orthogonality(const SelfConjBasis& basis, long n_samples, double rank_tol,
                                RngStream& rng) {
  const int d = basis.dim();
  const int h = basis.half();
  require(h >= 1, "module dimension must be at least 2");
  require(n_samples > 0, "n_samples must be positive");
  const int wedge_dim = d * (d - 1) / 2;
  const long batch = 4L * wedge_dim;

  std::vector<GramSchmidt> spans(h, GramSchmidt(wedge_dim, rank_tol));
  std::vector<int> last_ranks(h, -1);
  int stable = 0;
  OrbitReport report;
  long used = 0;
  while (used < n_samples && stable < 3) {
    const long end = std::min(n_samples, used + batch);
    for (; used < end; ++used) {
      const CMatrix D = basis_rep_matrix(basis, haar_sample_for(basis.tag(), rng));
      for (int m = 1; m <= h; ++m) {
        const auto x = D.col(basis.index_of(m));
        const auto y = D.col(basis.index_of(-m));
        CVector w(wedge_dim);
        int idx = 0;
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) w(idx++) = x(i) * y(j) - x(j) * y(i);
        spans[m - 1].add(std::move(w));
      }
    }
    std::vector<int> ranks(h);
    for (int m = 0; m < h; ++m) ranks[m] = spans[m].rank();
    stable = ranks == last_ranks ? stable + 1 : 0;
    last_ranks = ranks;
  }
  report.samples_used = used;
  report.converged = stable >= 3;
  report.ranks = last_ranks;

  std::vector<bool> in_tilde(h + 1, false);
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= h; ++j) {
      double cross = 0.0;
      for (const auto& u : spans[i - 1].vectors())
        for (const auto& v : spans[j - 1].vectors()) cross = std::max(cross, std::abs(u.dot(v)));
      if (cross < rank_tol) {
        report.S.emplace_back(i, j);
        in_tilde[i] = true;
      }
    }
  int outside = 0;
  for (int i = 1; i <= h; ++i) {
    if (in_tilde[i])
      report.S_tilde.push_back(i);
    else
      ++outside;
  }
  report.verdict = outside >= 2 ? Verdict::Mixing : Verdict::NotMixing;
  if (!report.converged && report.verdict == Verdict::NotMixing) report.verdict = Verdict::Inconclusive;
  return report;
}

S3ExactReport s3_exact_mixing(int ell, int m1, int m2) {
  require(ell >= 1, "degree must be at least 1");
  const int c = ell / 2;
  const int top = ell - c;  // ceil(ell / 2)
  require(0 < m1 && m1 <= m2 && m2 <= top, "row indices must satisfy 0 < m1 <= m2 <= ceil(ell/2)");

  S3ExactReport report;
  report.ell = ell;
  report.m1 = m1;
  report.m2 = m2;
  const int s1 = c + m1;
  const int s2 = c + m2;
  const int s2n = ell - s2;
  report.rows = {std::array<int, 2>{2 * s1 - ell, 2 * s2 - ell},
                 std::array<int, 2>{2 * s1 - ell, 2 * s2n - ell}};

  std::vector<int> row_indices{s1, s2, s2n};
  std::sort(row_indices.begin(), row_indices.end());
  row_indices.erase(std::unique(row_indices.begin(), row_indices.end()), row_indices.end());

  bool all_differ = true;
  bool table = true;
  bool leading = true;
  for (int s : row_indices) {
    for (int j = 0; j <= ell; ++j) {
      if (2 * j == ell || j > ell - j) continue;  // each unordered pair once
      const HomogeneousExact hp = p_poly_homogeneous(ell, s, j);
      const HomogeneousExact hm = p_poly_homogeneous(ell, s, ell - j);
      ExactComparison cmp;
      cmp.s = s;
      cmp.j = j;
      const ExactPoly pp = hp.on_circle();
      const ExactPoly pm = hm.on_circle();
      cmp.differ = !(pp == pm);
      cmp.lead_x_plus = hp.leading_x_exponent();
      cmp.lead_x_minus = hm.leading_x_exponent();
      // Homogeneous forms of equal degree are proportional on the circle iff
      // proportional; a scalar multiple has the same leading exponent.
      if (cmp.lead_x_plus == cmp.lead_x_minus && cmp.lead_x_plus >= 0) {
        const Rational lp = hp.coeffs[cmp.lead_x_plus];
        const Rational lm = hm.coeffs[cmp.lead_x_minus];
        bool prop = true;
        for (int k = 0; k <= ell; ++k)
          if (hp.coeffs[k] * lm != hm.coeffs[k] * lp) prop = false;
        cmp.proportional = prop;
      }
      cmp.h1 = std::min(s, j);
      cmp.h2 = std::min(s, ell - j);
      all_differ = all_differ && cmp.differ && !cmp.proportional;
      // The h1/h2 table covers the rows with positive weight, s > ell/2.
      if (2 * s > ell) table = table && cmp.h1 != cmp.h2;
      leading = leading && cmp.lead_x_plus != cmp.lead_x_minus;
      report.comparisons.push_back(cmp);
    }
  }
  report.table_certificate = table;
  report.leading_certificate = leading;
  report.verdict = all_differ ? Verdict::Mixing : Verdict::Inconclusive;
  return report;
}

}  // namespace invfield
