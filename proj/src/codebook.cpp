#include "codebook.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "rng.hpp"

namespace ddstc {

int Codebook::bits() const {
  std::uint64_t n = size();
  if (n < 2 || (n & (n - 1)) != 0) return -1;
  int b = 0;
  while (n > 1) {
    n >>= 1;
    ++b;
  }
  return b;
}

double Codebook::rate_per_2t() const {
  return std::log2(static_cast<double>(size())) / (2.0 * t);
}

double Codebook::rate_per_t() const {
  return std::log2(static_cast<double>(size())) / t;
}

Eigen::VectorXd assemble_variables(const SignalSet& s, const GroupPartition& p,
                                   std::uint64_t index) {
  LabelCodec codec(s.m());
  auto pts = codec.points(index);
  int k = 0;
  for (const auto& g : p.groups) k += static_cast<int>(g.size());
  Eigen::VectorXd vars = Eigen::VectorXd::Zero(k);
  for (int g = 0; g < 4; ++g) {
    const Eigen::VectorXd& pt = s.points[pts[g]];
    for (int j = 0; j < pt.size(); ++j) vars(p.groups[g][j]) = pt(j);
  }
  return vars;
}

Codebook materialize(std::shared_ptr<const LinearDesign> d,
                     std::shared_ptr<const SignalSet> s) {
  if (!d || !s) throw std::invalid_argument("design and signal set required");
  if (d->num_real_vars() != 4 * s->dim)
    throw std::invalid_argument("design variable count does not match signal set");
  std::uint64_t q = s->q();
  if (q > kMaxMaterialize)
    throw std::invalid_argument("codebook too large to materialize");

  Codebook c;
  c.name = "proposed";
  c.t = d->size();
  c.design = d;
  c.points = s;
  c.partition = canonical_partition(d->num_complex_vars());
  c.group_decodable = true;
  c.words.reserve(q);
  c.scales.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    Eigen::MatrixXcd u = d->evaluate(assemble_variables(*s, c.partition, i));
    c.scales.push_back(std::sqrt(u.squaredNorm() / c.t));
    c.words.push_back(std::move(u));
  }
  return c;
}

UnitarityReport check_scaled_unitary(const Codebook& c, double tol) {
  UnitarityReport r;
  r.ok = true;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < c.size(); ++i) {
    Eigen::MatrixXcd gram = c.words[i].adjoint() * c.words[i];
    double a2 = c.scales[i] * c.scales[i];
    sum_sq += a2;
    double off = 0.0, spread = 0.0;
    for (int row = 0; row < gram.rows(); ++row)
      for (int col = 0; col < gram.cols(); ++col) {
        if (row == col)
          spread = std::max(spread, std::abs(gram(row, col) - a2));
        else
          off = std::max(off, std::abs(gram(row, col)));
      }
    if (off > r.max_offdiag || spread > r.max_diag_spread) r.worst_index = i;
    r.max_offdiag = std::max(r.max_offdiag, off);
    r.max_diag_spread = std::max(r.max_diag_spread, spread);
    if (off > tol || spread > tol) r.ok = false;
  }
  r.mean_scale_sq = c.size() ? sum_sq / c.size() : 0.0;
  return r;
}

namespace {

struct PairScan {
  double min_abs_det = std::numeric_limits<double>::infinity();
  std::uint64_t worst_i = 0, worst_j = 0;

  void feed(const Codebook& c, std::uint64_t i, std::uint64_t j) {
    Eigen::MatrixXcd diff = c.words[i] - c.words[j];
    double d = std::abs(Eigen::PartialPivLU<Eigen::MatrixXcd>(diff).determinant());
    if (d < min_abs_det) {
      min_abs_det = d;
      worst_i = i;
      worst_j = j;
    }
  }

  void merge(const PairScan& o) {
    if (o.min_abs_det < min_abs_det) {
      min_abs_det = o.min_abs_det;
      worst_i = o.worst_i;
      worst_j = o.worst_j;
    }
  }
};

}  // namespace

DiversityResult diversity_and_gain(const Codebook& c,
                                   const DiversityOptions& opt) {
  DiversityResult r;
  std::uint64_t n = c.size();
  if (n < 2) {
    r.fully_diverse = true;
    r.min_abs_det = std::numeric_limits<double>::infinity();
    r.min_gram_det = std::numeric_limits<double>::infinity();
    return r;
  }
  r.pairs_total = n * (n - 1) / 2;
  r.sampled = r.pairs_total > opt.pair_budget;
  if (r.sampled && !opt.sample_on_budget)
    throw std::runtime_error(
        "pair count exceeds budget; enable sampling or raise the budget");
  r.pairs_checked = r.sampled ? opt.pair_budget : r.pairs_total;

  int workers = std::max(1, opt.workers);
  std::vector<PairScan> scans(workers);
  auto run_chunk = [&](int w) {
    PairScan& scan = scans[w];
    if (!r.sampled) {
      // Pair t enumerated lexicographically; split by residue class.
      std::uint64_t t = 0;
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = i + 1; j < n; ++j, ++t)
          if (t % workers == static_cast<std::uint64_t>(w)) scan.feed(c, i, j);
    } else {
      // Sample k is addressed by its own stream, so the sampled pair set
      // does not depend on how samples are split across workers.
      for (std::uint64_t k = w; k < r.pairs_checked;
           k += static_cast<std::uint64_t>(workers)) {
        RandomStream rng(opt.seed, 0x1000000, k);
        std::uint64_t i = rng.next_below(n);
        std::uint64_t j = rng.next_below(n - 1);
        if (j >= i) ++j;
        scan.feed(c, i, j);
      }
    }
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& th : pool) th.join();
  }
  PairScan total;
  for (const auto& s : scans) total.merge(s);

  r.min_abs_det = total.min_abs_det;
  r.min_gram_det = total.min_abs_det * total.min_abs_det;
  r.worst_i = total.worst_i;
  r.worst_j = total.worst_j;
  r.fully_diverse = r.min_gram_det > 1e-12;
  return r;
}

ComplexityCounts complexity_report(const Codebook& c) {
  ComplexityCounts out;
  out.joint_space = c.size();
  out.joint_metric_evals = c.size();
  if (c.group_decodable && c.points) {
    out.per_group_space = c.points->m();
    out.group_metric_evals = 4ull * c.points->m();
  }
  return out;
}

}  // namespace ddstc
