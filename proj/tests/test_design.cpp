#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "design.hpp"
#include "doctest.h"
#include "rng.hpp"

using namespace ddstc;
using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

namespace {

std::vector<std::string> split_tokens(const std::string& row) {
  std::istringstream in(row);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

void check_grid(const LinearDesign& d, const std::vector<std::string>& rows) {
  auto grid = design_tokens(d);
  REQUIRE(grid.size() == rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto want = split_tokens(rows[r]);
    REQUIRE(want.size() == grid[r].size());
    for (std::size_t c = 0; c < want.size(); ++c)
      CHECK(token_str(grid[r][c]) == want[c]);
  }
}

Eigen::VectorXcd random_complex(int n, RandomStream& rng) {
  Eigen::VectorXcd z(n);
  for (int i = 0; i < n; ++i) z(i) = rng.complex_gaussian();
  return z;
}

}  // namespace

TEST_CASE("two antenna layout and scale") {
  LinearDesign d = build_design(1);
  CHECK(d.size() == 2);
  CHECK(d.num_complex_vars() == 2);
  CHECK(d.scale() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  check_grid(d, {"x1 -x2*", "x2 x1*"});
}

TEST_CASE("four antenna layout and scale") {
  LinearDesign d = build_design(2);
  CHECK(d.size() == 4);
  CHECK(d.num_complex_vars() == 4);
  CHECK(d.scale() == doctest::Approx(0.5).epsilon(1e-15));
  check_grid(d, {"x1 x2 -x3* -x4*",
                 "x2 x1 -x4* -x3*",
                 "x3 x4 x1* x2*",
                 "x4 x3 x2* x1*"});
}

TEST_CASE("eight antenna layout") {
  LinearDesign d = build_design(3);
  CHECK(d.size() == 8);
  CHECK(d.num_complex_vars() == 8);
  check_grid(d, {"x1 x2 x3 x4 -x5* -x6* -x7* -x8*",
                 "x2 x1 x4 x3 -x6* -x5* -x8* -x7*",
                 "x3 x4 x1 x2 -x7* -x8* -x5* -x6*",
                 "x4 x3 x2 x1 -x8* -x7* -x6* -x5*",
                 "x5 x6 x7 x8 x1* x2* x3* x4*",
                 "x6 x5 x8 x7 x2* x1* x4* x3*",
                 "x7 x8 x5 x6 x3* x4* x1* x2*",
                 "x8 x7 x6 x5 x4* x3* x2* x1*"});
}

TEST_CASE("render aligns columns") {
  std::string text = render_design(build_design(1));
  CHECK(text == "x1 -x2*\nx2 x1*\n");
}

TEST_CASE("variable grouping") {
  GroupPartition p = canonical_partition(4);
  CHECK(p.groups[0] == std::vector<int>{0, 2});
  CHECK(p.groups[1] == std::vector<int>{1, 3});
  CHECK(p.groups[2] == std::vector<int>{4, 6});
  CHECK(p.groups[3] == std::vector<int>{5, 7});
}

TEST_CASE("cross group weight condition holds") {
  for (int lambda = 1; lambda <= 4; ++lambda) {
    LinearDesign d = build_design(lambda);
    auto res = verify_group_decodable(d, canonical_partition(d.num_complex_vars()));
    CHECK(res.ok);
    CHECK(res.max_violation < 1e-15);
  }
}

TEST_CASE("real and complex evaluation agree") {
  LinearDesign d = build_design(2);
  RandomStream rng(21, 0, 0);
  Eigen::VectorXcd z = random_complex(4, rng);
  Eigen::VectorXd s(8);
  for (int k = 0; k < 4; ++k) {
    s(2 * k) = z(k).real();
    s(2 * k + 1) = z(k).imag();
  }
  CHECK((d.evaluate(s) - d.evaluate_complex(z)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("block determinant factorization") {
  // S = c [[A, -B^H], [B, A^H]] with commuting circulant-like blocks gives
  // det(S^H S) = c^(2T) det(A^H A + B^H B) det(A A^H + B B^H).
  LinearDesign d = build_design(2);
  RandomStream rng(22, 0, 0);
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXcd z = random_complex(4, rng);
    Mat a(2, 2), b(2, 2);
    a << z(0), z(1), z(1), z(0);
    b << z(2), z(3), z(3), z(2);
    CHECK((a * b - b * a).cwiseAbs().maxCoeff() < 1e-14);
    Mat s = d.evaluate_complex(z);
    cd lhs = (s.adjoint() * s).determinant();
    double c = d.scale();
    cd rhs = std::pow(c * c, 4) *
             (a.adjoint() * a + b.adjoint() * b).determinant() *
             (a * a.adjoint() + b * b.adjoint()).determinant();
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));

    cd det_a = a.determinant();
    cd prod = (z(0) + z(1)) * (z(0) - z(1));
    CHECK(std::abs(det_a - prod) < 1e-12);
  }
}

TEST_CASE("construction steps") {
  LinearDesign seed(1.0, {Mat::Identity(1, 1), cd(0, 1) * Mat::Identity(1, 1)});
  LinearDesign grown = abba(seed);
  CHECK(grown.size() == 2);
  CHECK(grown.num_complex_vars() == 2);
  check_grid(grown, {"x1 x2", "x2 x1"});
  LinearDesign doubled = doubling(grown);
  CHECK(doubled.size() == 4);
  check_grid(doubled, {"x1 x2 -x3* -x4*",
                       "x2 x1 -x4* -x3*",
                       "x3 x4 x1* x2*",
                       "x4 x3 x2* x1*"});
}

TEST_CASE("invalid inputs rejected") {
  CHECK_THROWS_AS(build_design(0), std::invalid_argument);
  CHECK_THROWS_AS(build_design(kMaxLambda + 1), std::invalid_argument);
  CHECK_THROWS_AS(LinearDesign(1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(canonical_partition(3), std::invalid_argument);
  LinearDesign d = build_design(1);
  Eigen::VectorXd wrong(3);
  wrong.setZero();
  CHECK_THROWS_AS(d.evaluate(wrong), std::invalid_argument);
}
