#include "relays.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clifford.hpp"
#include "rng.hpp"

namespace ddstc {

using Mat = Eigen::MatrixXcd;

Mat initial_matrix(const RelaySystem& rs) {
  Mat x(rs.t(), rs.r());
  for (int j = 0; j < rs.r(); ++j)
    x.col(j) = rs.matrices[j] * (j < rs.m_split ? rs.s0 : rs.s0.conjugate());
  return x;
}

RelaySystem build_relays(int lambda) {
  if (lambda < 1 || lambda > kMaxLambda)
    throw std::invalid_argument("lambda out of range");
  int a = lambda - 1;
  ComplexBasis basis{a};
  int half = 1 << a;

  RelaySystem rs;
  rs.m_split = half;
  for (int d = 0; d < half; ++d) {
    AlgebraElement e = AlgebraElement::basis(a, {0, static_cast<std::uint32_t>(d)});
    rs.matrices.push_back(left_regular_rep(e, basis));
  }
  for (int d = 0; d < half; ++d) {
    AlgebraElement e = AlgebraElement::basis(a, {2, static_cast<std::uint32_t>(d)});
    rs.matrices.push_back(left_regular_rep(e, basis));
  }
  rs.s0 = Eigen::VectorXcd::Zero(basis.size());
  rs.s0(0) = 1.0;
  rs.x0 = initial_matrix(rs);
  return rs;
}

std::vector<Mat> alternate_relay_family(int lambda) {
  if (lambda < 1 || lambda > kMaxLambda)
    throw std::invalid_argument("lambda out of range");
  int a = lambda - 1;
  ComplexBasis basis{a};
  std::vector<Mat> out;
  const std::complex<double> I(0.0, 1.0);
  for (int d = 0; d < (1 << a); ++d) {
    AlgebraElement e = AlgebraElement::basis(a, {2, static_cast<std::uint32_t>(d)});
    out.push_back(I * left_regular_rep(e, basis));
  }
  return out;
}

CompatReport verify_compatibility(const RelaySystem& rs, const Codebook& c,
                                  double tol, std::uint64_t sample_threshold,
                                  std::uint64_t sample_size, std::uint64_t seed) {
  if (rs.t() != c.t) throw std::invalid_argument("matrix size mismatch");

  std::vector<std::uint64_t> indices;
  CompatReport rep;
  if (c.size() > sample_threshold && sample_size < c.size()) {
    rep.sampled = true;
    std::set<std::uint64_t> picked;
    RandomStream rng(seed, 0x2000000, 0);
    while (picked.size() < sample_size) picked.insert(rng.next_below(c.size()));
    indices.assign(picked.begin(), picked.end());
  } else {
    indices.resize(c.size());
    for (std::uint64_t i = 0; i < c.size(); ++i) indices[i] = i;
  }

  rep.ok = true;
  rep.words_checked = indices.size();
  for (std::uint64_t idx : indices) {
    const Mat& u = c.words[idx];
    for (int j = 0; j < rs.r(); ++j) {
      Mat lhs = j < rs.m_split ? Mat(rs.matrices[j] * u)
                               : Mat(rs.matrices[j] * u.conjugate());
      double v = (lhs - u * rs.matrices[j]).cwiseAbs().maxCoeff();
      if (v > rep.max_violation) {
        rep.max_violation = v;
        rep.worst_relay = j;
        rep.worst_word = idx;
      }
      if (v > tol) rep.ok = false;
    }
  }
  return rep;
}

LinearDesign reconstruct_design(const RelaySystem& rs) {
  int t = rs.t();
  int r = rs.r();
  const std::complex<double> I(0.0, 1.0);
  std::vector<Mat> weights(2 * static_cast<std::size_t>(t), Mat::Zero(t, r));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < t; ++k) {
      // Column j is A_j s (or A_j s*), linear in s_k = x_{k+1}.
      weights[2 * k].col(j) += rs.matrices[j].col(k);
      weights[2 * k + 1].col(j) += (j < rs.m_split ? I : -I) * rs.matrices[j].col(k);
    }
  return LinearDesign(1.0 / std::sqrt(static_cast<double>(r)), std::move(weights));
}

std::string relays_csv(const RelaySystem& rs) {
  std::ostringstream os;
  os << "relay,row,col,re,im\n";
  char buf[64];
  for (int j = 0; j < rs.r(); ++j)
    for (int row = 0; row < rs.t(); ++row)
      for (int col = 0; col < rs.t(); ++col) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g",
                      rs.matrices[j](row, col).real(),
                      rs.matrices[j](row, col).imag());
        os << j + 1 << ',' << row + 1 << ',' << col + 1 << ',' << buf << '\n';
      }
  return os.str();
}

}  // namespace ddstc
