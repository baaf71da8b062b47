#include "signalset.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "design.hpp"

namespace ddstc {

std::vector<double> default_radii(int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("point count must be even");
  int n = m / 2;
  if (m == 2) return {1.0};
  if (m == 4) return {1.0 / std::sqrt(3.0), std::sqrt(5.0 / 3.0)};
  if (m == 8) {
    // Optimised radii, renormalised so the squares sum to exactly m/2.
    std::vector<double> r = {0.378, 0.8452, 1.1339, 1.3628};
    double ss = 0.0;
    for (double v : r) ss += v * v;
    double c = std::sqrt(4.0 / ss);
    for (double& v : r) v *= c;
    return r;
  }
  if (m == 16) {
    double s3 = std::sqrt(3.0);
    std::vector<double> c = {1.0,          s3,           1.0 + 2 * s3 / 3,
                             2.0 + s3 / 3, 3.0,          2.0 + s3,
                             3.0 + 2 * s3 / 3, 4.0 + s3 / 3};
    double ss = 0.0;
    for (double v : c) ss += v * v;
    double r1 = std::sqrt(8.0 / ss);
    for (double& v : c) v *= r1;
    return c;
  }
  double ss = 0.0;
  for (int i = 1; i <= n; ++i) ss += static_cast<double>(i) * i;
  double c = std::sqrt((m / 2.0) / ss);
  std::vector<double> r(n);
  for (int i = 1; i <= n; ++i) r[i - 1] = c * i;
  return r;
}

SignalSet build_signal_set(int lambda, std::uint64_t q,
                           const std::vector<double>* radii) {
  if (lambda < 1 || lambda > kMaxLambda)
    throw std::invalid_argument("lambda out of range");
  double root = std::pow(static_cast<double>(q), 0.25);
  int m = static_cast<int>(std::llround(root));
  std::uint64_t mm = m;
  if (m < 2 || m % 2 != 0 || mm * mm * mm * mm != q)
    throw std::invalid_argument("codebook size must be a fourth power of an even integer");

  std::vector<double> r = radii ? *radii : default_radii(m);
  if (static_cast<int>(r.size()) != m / 2)
    throw std::invalid_argument("radius count must be half the point count");
  double prev = 0.0, ss = 0.0;
  for (double v : r) {
    if (v <= prev) throw std::invalid_argument("radii must be positive and increasing");
    prev = v;
    ss += v * v;
  }
  if (std::abs(ss - m / 2.0) > 1e-9)
    throw std::invalid_argument("radius energy must equal half the point count");

  SignalSet s;
  s.lambda = lambda;
  s.dim = 1 << (lambda - 1);
  s.radii = r;
  s.points.reserve(m);
  for (int i = 1; i <= m; ++i) {
    int q_idx = (i - 1) / 2;
    Eigen::VectorXd p = Eigen::VectorXd::Zero(s.dim);
    p(q_idx % s.dim) = (i % 2 == 1) ? r[q_idx] : -r[q_idx];
    s.points.push_back(std::move(p));
  }
  return s;
}

SignalSetReport verify_signal_set(const SignalSet& s, double tol) {
  SignalSetReport rep;

  int max_nonzero = 0, min_nonzero = s.dim + 1;
  for (const auto& p : s.points) {
    int nz = 0;
    for (int i = 0; i < p.size(); ++i)
      if (p(i) != 0.0) ++nz;
    max_nonzero = std::max(max_nonzero, nz);
    min_nonzero = std::min(min_nonzero, nz);
  }
  rep.single_coordinate = {max_nonzero == 1 && min_nonzero == 1,
                           static_cast<double>(max_nonzero)};

  double min_gap = std::numeric_limits<double>::infinity();
  double prev = 0.0, ss = 0.0;
  for (double r : s.radii) {
    min_gap = std::min(min_gap, r - prev);
    prev = r;
    ss += r * r;
  }
  rep.radii_increasing = {min_gap > 0.0, min_gap};
  double energy_err = std::abs(ss - s.m() / 2.0);
  rep.energy = {energy_err <= 1e-9, energy_err};

  int max_support = 0;
  bool all_distinct = true;
  double min_cancel = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.points.size(); ++i)
    for (std::size_t j = i + 1; j < s.points.size(); ++j) {
      Eigen::VectorXd d = s.points[i] - s.points[j];
      std::vector<double> nz;
      for (int k = 0; k < d.size(); ++k)
        if (std::abs(d(k)) > tol) nz.push_back(std::abs(d(k)));
      if (nz.empty()) all_distinct = false;
      max_support = std::max(max_support, static_cast<int>(nz.size()));
      // A two-coordinate difference must not cancel under any sign choice.
      for (std::size_t a = 0; a < nz.size(); ++a)
        for (std::size_t b = a + 1; b < nz.size(); ++b)
          min_cancel = std::min(min_cancel, std::abs(nz[a] - nz[b]));
    }
  rep.pair_support = {all_distinct && max_support <= 2,
                      static_cast<double>(max_support)};
  rep.pair_cancellation = {min_cancel > tol, min_cancel};
  return rep;
}

std::string signal_set_csv(const SignalSet& s) {
  std::ostringstream os;
  os << "group_dim,point_index";
  for (int i = 0; i < s.dim; ++i) os << ",coord_" << i + 1;
  os << '\n';
  char buf[64];
  for (int i = 0; i < s.m(); ++i) {
    os << s.dim << ',' << i + 1;
    for (int k = 0; k < s.dim; ++k) {
      std::snprintf(buf, sizeof buf, "%.10g", s.points[i](k));
      os << ',' << buf;
    }
    os << '\n';
  }
  return os.str();
}

LabelCodec::LabelCodec(int m_) : m(m_) {
  if (m < 2) throw std::invalid_argument("point count must be at least 2");
  if ((m & (m - 1)) == 0) {
    bits_per_group = 0;
    for (int v = m; v > 1; v >>= 1) ++bits_per_group;
  }
}

std::uint64_t LabelCodec::index(const std::array<int, 4>& pts) const {
  std::uint64_t idx = 0;
  for (int g = 0; g < 4; ++g) {
    if (pts[g] < 0 || pts[g] >= m) throw std::out_of_range("point index");
    idx = idx * m + pts[g];
  }
  return idx;
}

std::array<int, 4> LabelCodec::points(std::uint64_t idx) const {
  if (idx >= size()) throw std::out_of_range("codeword index");
  std::array<int, 4> pts{};
  for (int g = 3; g >= 0; --g) {
    pts[g] = static_cast<int>(idx % m);
    idx /= m;
  }
  return pts;
}

}  // namespace ddstc
