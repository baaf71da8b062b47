#pragma once

#include "codebook.hpp"
#include "relays.hpp"

namespace ddstc {

enum class BaselineRate { one_bpcu, three_half_bpcu };

// Maps 1.0 / 1.5 bpcu to the tag; anything else is rejected.
BaselineRate baseline_rate_from(double rate);

// Diagonal cyclic group codebook on four antennas: codewords are powers of
// diag(zeta_N^{u_1..u_4}).
Codebook cyclic_codebook(BaselineRate rate);

// Diagonal relay matrices (fourth-root powers) commuting with the cyclic
// codewords; s0 = (1/2)(1,1,1,1) makes X0 a unitary DFT-type matrix.
RelaySystem cyclic_relay_system();

// Circulant code: relay matrices are shift powers, codewords are rotated
// PSK scalars times those shifts.
std::pair<Codebook, RelaySystem> circulant_codebook(BaselineRate rate);

}  // namespace ddstc
