#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "codebook.hpp"
#include "relays.hpp"
#include "rng.hpp"

namespace ddstc {

struct SimConfig {
  double power = 100.0;  // total average power P, linear
  double pi1 = 1.0;
  double pi2 = 0.25;  // default 1/R, set by make_sim_config
  int block_channel_uses = 800;
  double noise_scale = 1.0;  // 0 disables noise (test hook)
};

SimConfig make_sim_config(double snr_db, int r, int block_channel_uses = 800);

struct ChannelState {
  Eigen::VectorXcd f;  // source -> relay
  Eigen::VectorXcd g;  // relay -> destination
  Eigen::VectorXcd h;  // f_j g_j, conjugated past the split
};

ChannelState draw_channel(const RelaySystem& rs, RandomStream& rng);

Eigen::VectorXcd differential_encode(const Eigen::MatrixXcd& u,
                                     const Eigen::VectorXcd& s_prev,
                                     double a_prev);

// One two-stage hop: per-relay receive with noise, unitary processing
// (conjugated past the split), coherent sum at the destination plus noise.
Eigen::VectorXcd relay_and_receive(const Eigen::VectorXcd& s,
                                   const RelaySystem& rs,
                                   const ChannelState& ch, const SimConfig& cfg,
                                   RandomStream& rng);

// Deterministic amplitude of the signal part: y = gain * X h + noise.
double receive_gain(const SimConfig& cfg, int t);

enum class DecoderKind { joint, group };

struct DecodeResult {
  std::uint64_t index = 0;
};

class Decoder {
 public:
  Decoder(const Codebook& c, DecoderKind kind);
  DecodeResult decode(const Eigen::VectorXcd& y_cur,
                      const Eigen::VectorXcd& y_prev, double a_prev) const;
  DecoderKind kind() const { return kind_; }
  std::uint64_t metric_evals_per_decode() const;

 private:
  DecodeResult decode_joint(const Eigen::VectorXcd& y_cur,
                            const Eigen::VectorXcd& y_prev,
                            double a_prev) const;
  DecodeResult decode_group(const Eigen::VectorXcd& y_cur,
                            const Eigen::VectorXcd& y_prev,
                            double a_prev) const;

  const Codebook* book_;
  DecoderKind kind_;
  // Per group, per point: scale * sum of that point's weighted B_i.
  std::array<std::vector<Eigen::MatrixXcd>, 4> parts_;
  std::array<int, 4> group_of_var_{};
};

struct BlockCounts {
  std::uint64_t cycles = 0;
  std::uint64_t codeword_errors = 0;
  std::uint64_t bit_errors = 0;
};

// One quasi-static block: fresh channel, initial reference cycle, then
// random codewords decoded against the previous observation.
BlockCounts run_block(const Codebook& c, const RelaySystem& rs,
                      const SimConfig& cfg, const Decoder& dec,
                      RandomStream& rng);

}  // namespace ddstc
