#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "design.hpp"
#include "signalset.hpp"

namespace ddstc {

// Finite set of T x T codeword matrices U with U^H U = a^2 I.  Codebooks
// built from a design carry the design, point set and partition so the
// group decoder can work per variable group; baseline codebooks carry
// only the matrices.
struct Codebook {
  std::string name;
  int t = 0;
  std::vector<Eigen::MatrixXcd> words;
  std::vector<double> scales;
  bool group_decodable = false;
  std::shared_ptr<const LinearDesign> design;
  std::shared_ptr<const SignalSet> points;
  GroupPartition partition;
  // Set when every word is diagonal; enables the cheap decode path.
  std::vector<Eigen::VectorXcd> diagonals;

  std::uint64_t size() const { return words.size(); }
  int bits() const;  // log2(size), or -1 when size is not a power of two
  double rate_per_2t() const;
  double rate_per_t() const;
};

inline constexpr std::uint64_t kMaxMaterialize = std::uint64_t{1} << 20;

// Real-variable vector for codeword index: each group's point lands on
// that group's variable slots.
Eigen::VectorXd assemble_variables(const SignalSet& s, const GroupPartition& p,
                                   std::uint64_t index);

Codebook materialize(std::shared_ptr<const LinearDesign> d,
                     std::shared_ptr<const SignalSet> s);

struct UnitarityReport {
  bool ok = false;
  double max_offdiag = 0.0;
  double max_diag_spread = 0.0;  // worst |diag entry - a^2|
  double mean_scale_sq = 0.0;
  std::uint64_t worst_index = 0;
};

UnitarityReport check_scaled_unitary(const Codebook& c, double tol = 1e-10);

struct DiversityOptions {
  std::uint64_t pair_budget = std::uint64_t{1} << 16;
  bool sample_on_budget = false;
  std::uint64_t seed = 1;
  int workers = 1;
};

struct DiversityResult {
  bool fully_diverse = false;
  double min_abs_det = 0.0;   // min |det(U_i - U_j)|
  double min_gram_det = 0.0;  // min |det((U_i-U_j)^H (U_i-U_j))|
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_checked = 0;
  bool sampled = false;
  std::uint64_t worst_i = 0, worst_j = 0;
};

// Pairwise minimum-determinant scan; refuses when the pair count exceeds
// the budget unless sampling is allowed, in which case a deterministic
// pseudo-random sample of pair_budget pairs is scanned instead.
DiversityResult diversity_and_gain(const Codebook& c,
                                   const DiversityOptions& opt = {});

struct ComplexityCounts {
  std::uint64_t joint_space = 0;
  std::uint64_t per_group_space = 0;  // 0 when not group decodable
  std::uint64_t joint_metric_evals = 0;
  std::uint64_t group_metric_evals = 0;
};

ComplexityCounts complexity_report(const Codebook& c);

}  // namespace ddstc
