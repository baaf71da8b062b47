#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "verify.hpp"

using namespace ddstc;

TEST_CASE("algebra suite is clean") {
  for (int a = 1; a <= 2; ++a) {
    AlgebraSuite s = run_algebra_suite(a, 100, 1);
    CHECK(s.homomorphism < 1e-12);
    CHECK(s.conjugation < 1e-12);
    CHECK(s.center < 1e-12);
    CHECK(s.anticommute < 1e-12);
  }
}

TEST_CASE("proposed code verifies") {
  auto rows = verify_code("proposed", 2, 1.0, 0, 65536, 1);
  CHECK(all_pass(rows));

  std::set<std::string> names;
  for (const auto& r : rows) names.insert(r.check + "." + r.name);
  for (const char* want :
       {"algebra.homomorphism", "design.group_decodable",
        "design.algebra_match", "signalset.energy", "codebook.unitary_offdiag",
        "codebook.mean_scale_sq", "codebook.fully_diverse", "relays.unitary",
        "relays.x0_identity", "relays.compatibility",
        "relays.reconstruct_match", "relays.alternate_family"})
    CHECK(names.count(want) == 1);
}

TEST_CASE("small proposed code verifies") {
  auto rows = verify_code("proposed", 1, 1.0, 0, 65536, 1);
  CHECK(all_pass(rows));
}

TEST_CASE("baselines verify") {
  for (const char* code : {"cyclic", "circulant"}) {
    auto rows = verify_code(code, 2, 1.0, 0, 65536, 1);
    CHECK(all_pass(rows));
    bool has_x0 = false, has_compat = false;
    for (const auto& r : rows) {
      has_x0 |= (r.name == "x0_unitary");
      has_compat |= (r.name == "compatibility");
    }
    CHECK(has_x0);
    CHECK(has_compat);
  }
}

TEST_CASE("report csv shape") {
  auto rows = verify_code("proposed", 1, 1.0, 0, 65536, 1);
  std::string csv = report_csv(rows);
  CHECK(csv.rfind("check,name,pass,worst_value\n", 0) == 0);
  CHECK(csv.find(",true,") != std::string::npos);
  CHECK(csv.find("algebra,homomorphism,") != std::string::npos);

  std::vector<CheckRow> fake = {{"a", "b", false, 0.5}};
  CHECK(!all_pass(fake));
  CHECK(report_csv(fake) == "check,name,pass,worst_value\na,b,false,0.5\n");
}
