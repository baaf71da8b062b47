#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

namespace ddstc {

// T x T matrix of linear forms in K real variables:
//   S(s) = scale * sum_i s[i] * W_i.
// Real variables 2k and 2k+1 are the in-phase and quadrature parts of the
// complex variable x_{k+1}.
class LinearDesign {
 public:
  LinearDesign(double scale, std::vector<Eigen::MatrixXcd> weights);

  int size() const { return size_; }
  int num_real_vars() const { return static_cast<int>(weights_.size()); }
  int num_complex_vars() const { return num_real_vars() / 2; }
  double scale() const { return scale_; }
  const Eigen::MatrixXcd& weight(int i) const { return weights_[i]; }

  LinearDesign with_scale(double scale) const;

  Eigen::MatrixXcd evaluate(const Eigen::VectorXd& s) const;
  Eigen::MatrixXcd evaluate_complex(const Eigen::VectorXcd& x) const;

 private:
  int size_;
  double scale_;
  std::vector<Eigen::MatrixXcd> weights_;
};

// Four disjoint lists of real-variable indices covering all K variables.
struct GroupPartition {
  std::array<std::vector<int>, 4> groups;
};

// In-phase/quadrature split crossed with first/second half of the complex
// variables; the partition under which the built designs decode groupwise.
GroupPartition canonical_partition(int complex_vars);

LinearDesign abba(const LinearDesign& d);
LinearDesign doubling(const LinearDesign& d);

inline constexpr int kMaxLambda = 6;

// Rate-one design on 2^lambda antennas: lambda-1 ABBA rounds on [x1]
// followed by one doubling round, scaled by 1/sqrt(2^lambda).
LinearDesign build_design(int lambda);

struct GroupCheckResult {
  bool ok = false;
  double max_violation = 0.0;
  int worst_i = -1;
  int worst_j = -1;
};

// Checks W_i^H W_j + W_j^H W_i = 0 for every pair of variables in
// different groups.
GroupCheckResult verify_group_decodable(const LinearDesign& d,
                                        const GroupPartition& p,
                                        double tol = 1e-12);

// Entry of a design whose cells are single signed, possibly conjugated
// variables.  sign == 0 marks a zero cell.
struct DesignToken {
  int var = 0;  // 1-based
  bool conj = false;
  int sign = 0;
};

std::string token_str(const DesignToken& t);
std::vector<std::vector<DesignToken>> design_tokens(const LinearDesign& d);
std::string render_design(const LinearDesign& d);

}  // namespace ddstc
