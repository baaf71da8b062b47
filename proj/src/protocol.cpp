#include "protocol.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ddstc {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

SimConfig make_sim_config(double snr_db, int r, int block_channel_uses) {
  SimConfig cfg;
  cfg.power = std::pow(10.0, snr_db / 10.0);
  cfg.pi1 = 1.0;
  cfg.pi2 = 1.0 / r;
  cfg.block_channel_uses = block_channel_uses;
  return cfg;
}

ChannelState draw_channel(const RelaySystem& rs, RandomStream& rng) {
  ChannelState ch;
  int r = rs.r();
  ch.f.resize(r);
  ch.g.resize(r);
  ch.h.resize(r);
  for (int j = 0; j < r; ++j) ch.f(j) = rng.complex_gaussian();
  for (int j = 0; j < r; ++j) ch.g(j) = rng.complex_gaussian();
  for (int j = 0; j < r; ++j)
    ch.h(j) = (j < rs.m_split ? ch.f(j) : std::conj(ch.f(j))) * ch.g(j);
  return ch;
}

Vec differential_encode(const Mat& u, const Vec& s_prev, double a_prev) {
  if (a_prev <= 0.0) throw std::invalid_argument("previous scale must be positive");
  return u * s_prev / a_prev;
}

double receive_gain(const SimConfig& cfg, int t) {
  double p = cfg.power;
  return std::sqrt(cfg.pi1 * cfg.pi2 * t * p * p / (cfg.pi1 * p + 1.0));
}

Vec relay_and_receive(const Vec& s, const RelaySystem& rs,
                      const ChannelState& ch, const SimConfig& cfg,
                      RandomStream& rng) {
  int t = rs.t();
  if (s.size() != t) throw std::invalid_argument("vector length mismatch");
  double c1 = std::sqrt(cfg.pi1 * t * cfg.power);
  double c2 = std::sqrt(cfg.pi2 * cfg.power / (cfg.pi1 * cfg.power + 1.0));

  Vec y = Vec::Zero(t);
  Vec v(t);
  for (int j = 0; j < rs.r(); ++j) {
    for (int k = 0; k < t; ++k) v(k) = cfg.noise_scale * rng.complex_gaussian();
    Vec received = c1 * ch.f(j) * s + v;
    if (j >= rs.m_split) received = received.conjugate();
    y += (c2 * ch.g(j)) * (rs.matrices[j] * received);
  }
  for (int k = 0; k < t; ++k) y(k) += cfg.noise_scale * rng.complex_gaussian();
  return y;
}

Decoder::Decoder(const Codebook& c, DecoderKind kind) : book_(&c), kind_(kind) {
  if (c.size() == 0) throw std::invalid_argument("empty codebook");
  if (kind == DecoderKind::joint) return;
  if (!c.group_decodable || !c.design || !c.points)
    throw std::invalid_argument("codebook is not group decodable");
  const LinearDesign& d = *c.design;
  const SignalSet& s = *c.points;
  for (int g = 0; g < 4; ++g) {
    parts_[g].reserve(s.m());
    for (int p = 0; p < s.m(); ++p) {
      Mat part = Mat::Zero(d.size(), d.size());
      for (int j = 0; j < s.dim; ++j)
        if (s.points[p](j) != 0.0)
          part += s.points[p](j) * d.weight(c.partition.groups[g][j]);
      parts_[g].push_back(d.scale() * part);
    }
  }
}

std::uint64_t Decoder::metric_evals_per_decode() const {
  if (kind_ == DecoderKind::joint) return book_->size();
  return 4ull * book_->points->m();
}

DecodeResult Decoder::decode(const Vec& y_cur, const Vec& y_prev,
                             double a_prev) const {
  if (a_prev <= 0.0) throw std::invalid_argument("previous scale must be positive");
  return kind_ == DecoderKind::joint ? decode_joint(y_cur, y_prev, a_prev)
                                     : decode_group(y_cur, y_prev, a_prev);
}

DecodeResult Decoder::decode_joint(const Vec& y_cur, const Vec& y_prev,
                                   double a_prev) const {
  Vec z = y_prev / a_prev;
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_idx = 0;
  if (!book_->diagonals.empty()) {
    for (std::uint64_t i = 0; i < book_->size(); ++i) {
      double m = (y_cur - book_->diagonals[i].cwiseProduct(z)).squaredNorm();
      if (m < best) {
        best = m;
        best_idx = i;
      }
    }
  } else {
    for (std::uint64_t i = 0; i < book_->size(); ++i) {
      double m = (y_cur - book_->words[i] * z).squaredNorm();
      if (m < best) {
        best = m;
        best_idx = i;
      }
    }
  }
  return {best_idx};
}

DecodeResult Decoder::decode_group(const Vec& y_cur, const Vec& y_prev,
                                   double a_prev) const {
  Vec z = y_prev / a_prev;
  const SignalSet& s = *book_->points;
  std::array<int, 4> winners{};
  for (int g = 0; g < 4; ++g) {
    double best = std::numeric_limits<double>::infinity();
    for (int p = 0; p < s.m(); ++p) {
      double m = (y_cur - parts_[g][p] * z).squaredNorm();
      if (m < best) {
        best = m;
        winners[g] = p;
      }
    }
  }
  LabelCodec codec(s.m());
  return {codec.index(winners)};
}

BlockCounts run_block(const Codebook& c, const RelaySystem& rs,
                      const SimConfig& cfg, const Decoder& dec,
                      RandomStream& rng) {
  int two_t = 2 * rs.t();
  if (cfg.block_channel_uses % two_t != 0)
    throw std::invalid_argument("block length must be a multiple of 2T");
  int cycles = cfg.block_channel_uses / two_t;
  std::uint64_t q = c.size();

  BlockCounts counts;
  ChannelState ch = draw_channel(rs, rng);
  Vec s = rs.s0;
  double a_true = 1.0, a_hat = 1.0;
  Vec y_prev = relay_and_receive(s, rs, ch, cfg, rng);

  for (int t = 1; t < cycles; ++t) {
    std::uint64_t tx = rng.next_below(q);
    s = differential_encode(c.words[tx], s, a_true);
    a_true = c.scales[tx];
    Vec y = relay_and_receive(s, rs, ch, cfg, rng);
    DecodeResult r = dec.decode(y, y_prev, a_hat);
    ++counts.cycles;
    if (r.index != tx) {
      ++counts.codeword_errors;
      counts.bit_errors += std::popcount(r.index ^ tx);
    }
    a_hat = c.scales[r.index];
    y_prev = y;
  }
  return counts;
}

}  // namespace ddstc
