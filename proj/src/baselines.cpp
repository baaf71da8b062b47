#include "baselines.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ddstc {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using std::complex;

BaselineRate baseline_rate_from(double rate) {
  if (rate == 1.0) return BaselineRate::one_bpcu;
  if (rate == 1.5) return BaselineRate::three_half_bpcu;
  throw std::invalid_argument("baseline codes support rates 1 and 1.5 only");
}

Codebook cyclic_codebook(BaselineRate rate) {
  int n = rate == BaselineRate::one_bpcu ? 256 : 4096;
  std::array<int, 4> u = rate == BaselineRate::one_bpcu
                             ? std::array<int, 4>{1, 11, 67, 101}
                             : std::array<int, 4>{1, 43, 877, 2039};
  Codebook c;
  c.name = "cyclic";
  c.t = 4;
  c.words.reserve(n);
  c.diagonals.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec d(4);
    for (int k = 0; k < 4; ++k) {
      double phi = 2.0 * M_PI * (static_cast<long long>(i) * u[k] % n) / n;
      d(k) = {std::cos(phi), std::sin(phi)};
    }
    c.words.push_back(d.asDiagonal());
    c.diagonals.push_back(std::move(d));
    c.scales.push_back(1.0);
  }
  return c;
}

RelaySystem cyclic_relay_system() {
  const std::array<complex<double>, 4> w = {
      complex<double>(1, 0), complex<double>(0, 1), complex<double>(-1, 0),
      complex<double>(0, -1)};
  RelaySystem rs;
  rs.m_split = 4;
  for (int j = 0; j < 4; ++j) {
    Vec d(4);
    for (int k = 0; k < 4; ++k) d(k) = w[(k * j) % 4];
    rs.matrices.push_back(d.asDiagonal());
  }
  rs.s0 = 0.5 * Vec::Ones(4);
  rs.x0 = initial_matrix(rs);
  return rs;
}

std::pair<Codebook, RelaySystem> circulant_codebook(BaselineRate rate) {
  int n = rate == BaselineRate::one_bpcu ? 64 : 1024;
  const std::array<double, 4> theta = {0.0, 1.5, 3.0, 4.5};

  Mat shift = Mat::Zero(4, 4);
  for (int k = 0; k < 4; ++k) shift((k + 1) % 4, k) = 1.0;

  RelaySystem rs;
  rs.m_split = 4;
  Mat power = Mat::Identity(4, 4);
  for (int j = 0; j < 4; ++j) {
    rs.matrices.push_back(power);
    power = shift * power;
  }
  rs.s0 = Vec::Zero(4);
  rs.s0(0) = 1.0;
  rs.x0 = initial_matrix(rs);

  Codebook c;
  c.name = "circulant";
  c.t = 4;
  c.words.reserve(4 * static_cast<std::size_t>(n));
  for (int k = 0; k < 4; ++k)
    for (int q = 0; q < n; ++q) {
      double phi = 2.0 * M_PI * q / n + theta[k];
      c.words.push_back(complex<double>(std::cos(phi), std::sin(phi)) *
                        rs.matrices[k]);
      c.scales.push_back(1.0);
    }
  return {std::move(c), std::move(rs)};
}

}  // namespace ddstc
