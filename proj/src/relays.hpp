#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "codebook.hpp"
#include "design.hpp"

namespace ddstc {

// R unitary matrices applied by the relays; the first m_split act on the
// received vector directly, the rest on its conjugate.
struct RelaySystem {
  std::vector<Eigen::MatrixXcd> matrices;
  int m_split = 0;
  Eigen::VectorXcd s0;
  Eigen::MatrixXcd x0;

  int r() const { return static_cast<int>(matrices.size()); }
  int t() const { return static_cast<int>(s0.size()); }
};

// Columns A_1 s, .., A_M s, A_{M+1} s*, .., A_R s* evaluated at s0.
Eigen::MatrixXcd initial_matrix(const RelaySystem& rs);

// Delta-monomial representations for the commuting half, gamma2 times the
// same monomials for the conjugating half; s0 = e_1 makes X0 the identity.
RelaySystem build_relays(int lambda);

// A second valid conjugating family (the gamma2 family rotated by the
// scalar gamma1 represents), demonstrating the choice is not unique.
std::vector<Eigen::MatrixXcd> alternate_relay_family(int lambda);

struct CompatReport {
  bool ok = false;
  double max_violation = 0.0;
  int worst_relay = -1;
  std::uint64_t worst_word = 0;
  std::uint64_t words_checked = 0;
  bool sampled = false;
};

// A_i U = U A_i for the direct relays and A_i conj(U) = U A_i for the
// conjugating ones, over every codeword (sampled above the threshold).
CompatReport verify_compatibility(const RelaySystem& rs, const Codebook& c,
                                  double tol = 1e-10,
                                  std::uint64_t sample_threshold = 4096,
                                  std::uint64_t sample_size = 1000,
                                  std::uint64_t seed = 1);

// X(s) as a linear design in the entries of s; for the built systems this
// recovers the source design.
LinearDesign reconstruct_design(const RelaySystem& rs);

std::string relays_csv(const RelaySystem& rs);

}  // namespace ddstc
