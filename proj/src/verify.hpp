#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ddstc {

struct CheckRow {
  std::string check;  // module-level category
  std::string name;
  bool pass = false;
  double worst = 0.0;
};

struct AlgebraSuite {
  double homomorphism = 0.0;
  double conjugation = 0.0;
  double center = 0.0;
  double anticommute = 0.0;
};

// Worst deviations over `trials` random elements of the algebra with a
// commuting generators.
AlgebraSuite run_algebra_suite(int a, int trials, std::uint64_t seed);

// Full property report for the constructed code (q = 0 picks the rate-one
// size 2^(2T)) or for a baseline at the given rate.
std::vector<CheckRow> verify_code(const std::string& code, int lambda,
                                  double rate, std::uint64_t q_override,
                                  std::uint64_t pair_budget, int workers);

bool all_pass(const std::vector<CheckRow>& rows);
std::string report_csv(const std::vector<CheckRow>& rows);

}  // namespace ddstc
