#include "design.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace ddstc {

using Mat = Eigen::MatrixXcd;
using std::complex;

LinearDesign::LinearDesign(double scale, std::vector<Mat> weights)
    : scale_(scale), weights_(std::move(weights)) {
  if (weights_.empty() || weights_.size() % 2 != 0)
    throw std::invalid_argument("weight count must be even and nonzero");
  size_ = static_cast<int>(weights_[0].rows());
  for (const auto& w : weights_)
    if (w.rows() != size_ || w.cols() != size_)
      throw std::invalid_argument("weights must be square and equally sized");
}

LinearDesign LinearDesign::with_scale(double scale) const {
  return LinearDesign(scale, weights_);
}

Mat LinearDesign::evaluate(const Eigen::VectorXd& s) const {
  if (s.size() != num_real_vars())
    throw std::invalid_argument("variable count mismatch");
  Mat out = Mat::Zero(size_, size_);
  for (int i = 0; i < num_real_vars(); ++i)
    if (s(i) != 0.0) out += s(i) * weights_[i];
  return scale_ * out;
}

Mat LinearDesign::evaluate_complex(const Eigen::VectorXcd& x) const {
  if (2 * x.size() != num_real_vars())
    throw std::invalid_argument("variable count mismatch");
  Eigen::VectorXd s(num_real_vars());
  for (int k = 0; k < x.size(); ++k) {
    s(2 * k) = x(k).real();
    s(2 * k + 1) = x(k).imag();
  }
  return evaluate(s);
}

GroupPartition canonical_partition(int complex_vars) {
  if (complex_vars < 2 || complex_vars % 2 != 0)
    throw std::invalid_argument("complex variable count must be even");
  int half = complex_vars / 2;
  GroupPartition p;
  for (int k = 0; k < half; ++k) {
    p.groups[0].push_back(2 * k);
    p.groups[1].push_back(2 * k + 1);
    p.groups[2].push_back(2 * (half + k));
    p.groups[3].push_back(2 * (half + k) + 1);
  }
  return p;
}

LinearDesign abba(const LinearDesign& d) {
  int n = d.size();
  int k = d.num_real_vars();
  std::vector<Mat> out(2 * static_cast<std::size_t>(k), Mat::Zero(2 * n, 2 * n));
  int half = d.num_complex_vars();
  for (int v = 0; v < k; ++v) {
    // Old variables stay on the diagonal blocks, new ones mirror them on
    // the antidiagonal blocks.
    out[v].topLeftCorner(n, n) = d.weight(v);
    out[v].bottomRightCorner(n, n) = d.weight(v);
    int nv = 2 * half + v;
    out[nv].topRightCorner(n, n) = d.weight(v);
    out[nv].bottomLeftCorner(n, n) = d.weight(v);
  }
  return LinearDesign(d.scale(), std::move(out));
}

LinearDesign doubling(const LinearDesign& d) {
  int n = d.size();
  int k = d.num_real_vars();
  std::vector<Mat> out(2 * static_cast<std::size_t>(k), Mat::Zero(2 * n, 2 * n));
  int half = d.num_complex_vars();
  for (int v = 0; v < k; ++v) {
    out[v].topLeftCorner(n, n) = d.weight(v);
    out[v].bottomRightCorner(n, n) = d.weight(v).adjoint();
    int nv = 2 * half + v;
    out[nv].topRightCorner(n, n) = -d.weight(v).adjoint();
    out[nv].bottomLeftCorner(n, n) = d.weight(v);
  }
  return LinearDesign(d.scale(), std::move(out));
}

LinearDesign build_design(int lambda) {
  if (lambda < 1 || lambda > kMaxLambda)
    throw std::invalid_argument("lambda out of range");
  std::vector<Mat> seed(2, Mat::Zero(1, 1));
  seed[0](0, 0) = 1.0;
  seed[1](0, 0) = complex<double>(0.0, 1.0);
  LinearDesign d(1.0, std::move(seed));
  for (int i = 1; i < lambda; ++i) d = abba(d);
  d = doubling(d);
  return d.with_scale(1.0 / std::sqrt(static_cast<double>(1 << lambda)));
}

GroupCheckResult verify_group_decodable(const LinearDesign& d,
                                        const GroupPartition& p, double tol) {
  std::vector<int> group_of(d.num_real_vars(), -1);
  for (int g = 0; g < 4; ++g)
    for (int i : p.groups[g]) {
      if (i < 0 || i >= d.num_real_vars() || group_of[i] != -1)
        throw std::invalid_argument("partition does not cover variables once");
      group_of[i] = g;
    }
  for (int g : group_of)
    if (g == -1) throw std::invalid_argument("partition does not cover variables once");

  GroupCheckResult r;
  r.ok = true;
  for (int i = 0; i < d.num_real_vars(); ++i)
    for (int j = i + 1; j < d.num_real_vars(); ++j) {
      if (group_of[i] == group_of[j]) continue;
      Mat cross = d.weight(i).adjoint() * d.weight(j) +
                  d.weight(j).adjoint() * d.weight(i);
      double v = cross.cwiseAbs().maxCoeff();
      if (v > r.max_violation) {
        r.max_violation = v;
        r.worst_i = i;
        r.worst_j = j;
      }
      if (v > tol) r.ok = false;
    }
  return r;
}

std::string token_str(const DesignToken& t) {
  if (t.sign == 0) return "0";
  std::string s;
  if (t.sign < 0) s += '-';
  s += 'x';
  s += std::to_string(t.var);
  if (t.conj) s += '*';
  return s;
}

std::vector<std::vector<DesignToken>> design_tokens(const LinearDesign& d) {
  int n = d.size();
  int vars = d.num_complex_vars();
  std::vector<std::vector<DesignToken>> grid(n, std::vector<DesignToken>(n));
  const complex<double> I(0.0, 1.0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      DesignToken tok;
      for (int k = 0; k < vars; ++k) {
        complex<double> wi = d.weight(2 * k)(r, c);
        complex<double> wq = d.weight(2 * k + 1)(r, c);
        if (wi == 0.0 && wq == 0.0) continue;
        if (tok.sign != 0)
          throw std::logic_error("cell holds more than one variable");
        if (wi != complex<double>(1.0) && wi != complex<double>(-1.0))
          throw std::logic_error("cell is not a signed variable");
        tok.var = k + 1;
        tok.sign = wi.real() > 0 ? 1 : -1;
        if (wq == I * wi)
          tok.conj = false;
        else if (wq == -I * wi)
          tok.conj = true;
        else
          throw std::logic_error("cell is not a signed variable");
      }
      grid[r][c] = tok;
    }
  return grid;
}

std::string render_design(const LinearDesign& d) {
  auto grid = design_tokens(d);
  int n = d.size();
  std::vector<std::size_t> width(n, 0);
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cells[r][c] = token_str(grid[r][c]);
      width[c] = std::max(width[c], cells[r][c].size());
    }
  std::string out;
  for (int r = 0; r < n; ++r) {
    std::string line;
    for (int c = 0; c < n; ++c) {
      if (c) line += ' ';
      line += cells[r][c];
      line.append(width[c] - cells[r][c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace ddstc
