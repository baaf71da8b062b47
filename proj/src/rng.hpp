#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace ddstc {

// Philox4x64-10 counter-based generator (Salmon et al. 2011).
// Stateless block function: same (counter, key) always yields the same block,
// so independent streams are cheap and replay is exact.
inline std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> x,
                                               std::array<std::uint64_t, 2> k) {
  constexpr std::uint64_t M0 = 0xD2E7470EE14C6C93ULL;
  constexpr std::uint64_t M1 = 0xCA5A826395121157ULL;
  constexpr std::uint64_t W0 = 0x9E3779B97F4A7C15ULL;
  constexpr std::uint64_t W1 = 0xBB67AE8584CAA73BULL;
  for (int r = 0; r < 10; ++r) {
    unsigned __int128 p0 = static_cast<unsigned __int128>(M0) * x[0];
    unsigned __int128 p1 = static_cast<unsigned __int128>(M1) * x[2];
    std::uint64_t hi0 = static_cast<std::uint64_t>(p0 >> 64);
    std::uint64_t lo0 = static_cast<std::uint64_t>(p0);
    std::uint64_t hi1 = static_cast<std::uint64_t>(p1 >> 64);
    std::uint64_t lo1 = static_cast<std::uint64_t>(p1);
    x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
    k[0] += W0;
    k[1] += W1;
  }
  return x;
}

// One logical random stream, addressed by (seed, domain, block).
// Draw order alone advances the state; the addressing never does, so results
// are independent of how work is split across threads.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t domain, std::uint64_t block)
      : key_{seed, domain}, block_(block) {}

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      buf_ = philox4x64({counter_++, 0, block_, 0}, key_);
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  // Uniform on [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe as a log argument.
  double uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0,n) via rejection, exact for any n >= 1.
  std::uint64_t next_below(std::uint64_t n) {
    if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
    std::uint64_t lim = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= lim);
    return v % n;
  }

  // Standard normal, Box-Muller; second value of each pair is cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    double phi = 2.0 * M_PI * uniform();
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

  // Circularly symmetric complex normal, unit total variance.
  std::complex<double> complex_gaussian() {
    double r = std::sqrt(-std::log(uniform_pos()));
    double phi = 2.0 * M_PI * uniform();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::array<std::uint64_t, 2> key_;
  std::uint64_t block_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 4> buf_{};
  int pos_ = 4;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ddstc
