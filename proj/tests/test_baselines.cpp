#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "baselines.hpp"
#include "doctest.h"

using namespace ddstc;
using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

namespace {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

cd root_of_unity(int num, int den) {
  double ang = 2.0 * M_PI * num / den;
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace

TEST_CASE("rate mapping") {
  CHECK(baseline_rate_from(1.0) == BaselineRate::one_bpcu);
  CHECK(baseline_rate_from(1.5) == BaselineRate::three_half_bpcu);
  CHECK_THROWS_AS(baseline_rate_from(2.0), std::invalid_argument);
  CHECK_THROWS_AS(baseline_rate_from(0.99), std::invalid_argument);
}

TEST_CASE("cyclic codebook structure") {
  Codebook c = cyclic_codebook(BaselineRate::one_bpcu);
  CHECK(c.name == "cyclic");
  CHECK(c.t == 4);
  CHECK(c.size() == 256);
  CHECK(c.bits() == 8);
  CHECK(!c.group_decodable);
  REQUIRE(c.diagonals.size() == 256);

  // Word 0 is the identity, word i the i-th power of the generator.
  CHECK(max_abs(c.words[0] - Mat::Identity(4, 4)) == 0.0);
  const int exps[4] = {1, 11, 67, 101};
  for (int i : {1, 2, 117, 255})
    for (int k = 0; k < 4; ++k) {
      cd want = root_of_unity(i * exps[k] % 256, 256);
      CHECK(std::abs(c.diagonals[i](k) - want) < 1e-14);
      CHECK(std::abs(c.words[i](k, k) - want) < 1e-14);
    }

  for (double a : c.scales) CHECK(a == 1.0);
  UnitarityReport rep = check_scaled_unitary(c);
  CHECK(rep.ok);
  CHECK(rep.mean_scale_sq == 1.0);
}

TEST_CASE("cyclic codebook at the higher rate") {
  Codebook c = cyclic_codebook(BaselineRate::three_half_bpcu);
  CHECK(c.size() == 4096);
  CHECK(c.bits() == 12);
  const int exps[4] = {1, 43, 877, 2039};
  for (int k = 0; k < 4; ++k) {
    cd want = root_of_unity(exps[k], 4096);
    CHECK(std::abs(c.diagonals[1](k) - want) < 1e-14);
  }
}

TEST_CASE("cyclic relay system") {
  RelaySystem rs = cyclic_relay_system();
  CHECK(rs.r() == 4);
  CHECK(rs.m_split == 4);
  CHECK(rs.t() == 4);
  for (int k = 0; k < 4; ++k) CHECK(rs.s0(k) == cd(0.5, 0));

  // X0(k, j) = i^(k j) / 2, a unitary fourth-root transform.
  const cd w[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) CHECK(rs.x0(k, j) == 0.5 * w[(k * j) % 4]);
  CHECK(max_abs(rs.x0.adjoint() * rs.x0 - Mat::Identity(4, 4)) < 1e-15);

  Codebook c = cyclic_codebook(BaselineRate::one_bpcu);
  CompatReport rep = verify_compatibility(rs, c);
  CHECK(rep.ok);
  CHECK(rep.max_violation == 0.0);  // diagonal matrices commute exactly
}

TEST_CASE("circulant codebook and relays") {
  auto [c, rs] = circulant_codebook(BaselineRate::one_bpcu);
  CHECK(c.name == "circulant");
  CHECK(c.t == 4);
  CHECK(c.size() == 256);
  CHECK(!c.group_decodable);
  CHECK(rs.r() == 4);
  CHECK(rs.m_split == 4);

  // Relay j is the j-th power of the cyclic shift.
  Mat shift = Mat::Zero(4, 4);
  shift(1, 0) = shift(2, 1) = shift(3, 2) = shift(0, 3) = 1;
  Mat p = Mat::Identity(4, 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(max_abs(rs.matrices[j] - p) == 0.0);
    p = shift * p;
  }

  CHECK(rs.s0(0) == cd(1, 0));
  CHECK(max_abs(rs.x0 - Mat::Identity(4, 4)) == 0.0);

  // Word k*64+q carries phase 2 pi q / 64 + theta_k on the k-th shift.
  const double theta[4] = {0.0, 1.5, 3.0, 4.5};
  for (int k = 0; k < 4; ++k) {
    int idx = k * 64 + 5;
    cd scalar = std::polar(1.0, 2.0 * M_PI * 5 / 64 + theta[k]);
    Mat want = scalar * rs.matrices[k];
    CHECK(max_abs(c.words[idx] - want) < 1e-14);
  }

  for (double a : c.scales) CHECK(a == 1.0);
  UnitarityReport urep = check_scaled_unitary(c);
  CHECK(urep.ok);

  CompatReport rep = verify_compatibility(rs, c);
  CHECK(rep.ok);
  CHECK(rep.max_violation < 1e-15);

  auto [c15, rs15] = circulant_codebook(BaselineRate::three_half_bpcu);
  CHECK(c15.size() == 4096);
  CHECK(c15.bits() == 12);
  CHECK(max_abs(c15.words[1] - root_of_unity(1, 1024) * Mat::Identity(4, 4)) <
        1e-14);
}
