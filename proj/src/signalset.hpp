#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ddstc {

// m points in R^dim, each supported on a single coordinate.  Point 2q+1
// carries +radius[q] and point 2q+2 carries -radius[q] at coordinate
// (q mod dim), cycling through the coordinates as the radius grows.
struct SignalSet {
  int lambda = 0;
  int dim = 0;
  std::vector<double> radii;
  std::vector<Eigen::VectorXd> points;

  int m() const { return static_cast<int>(points.size()); }
  std::uint64_t q() const {
    std::uint64_t mm = points.size();
    return mm * mm * mm * mm;
  }
};

// Radii for an m-point per-group set with sum of squares m/2.  Sizes 4, 8
// and 16 use the tabulated optimised values; otherwise equally spaced.
std::vector<double> default_radii(int m);

SignalSet build_signal_set(int lambda, std::uint64_t q,
                           const std::vector<double>* radii = nullptr);

struct SignalSetCheck {
  bool ok = false;
  double worst = 0.0;
};

struct SignalSetReport {
  SignalSetCheck single_coordinate;  // worst: max nonzero count over points
  SignalSetCheck radii_increasing;   // worst: min forward gap
  SignalSetCheck energy;             // worst: |sum r^2 - m/2|
  SignalSetCheck pair_support;       // worst: max support of a difference
  SignalSetCheck pair_cancellation;  // worst: min |d_i| -+ |d_j| gap on supports
  bool ok() const {
    return single_coordinate.ok && radii_increasing.ok && energy.ok &&
           pair_support.ok && pair_cancellation.ok;
  }
};

SignalSetReport verify_signal_set(const SignalSet& s, double tol = 1e-12);

std::string signal_set_csv(const SignalSet& s);

// Maps a codeword index to the four per-group point indices and back.
// Bit labelling splits the index into four equal fields, group 0 in the
// most significant position; it needs m to be a power of two.
struct LabelCodec {
  int m = 0;
  int bits_per_group = -1;  // -1 when m is not a power of two

  explicit LabelCodec(int m_);
  std::uint64_t size() const {
    std::uint64_t mm = m;
    return mm * mm * mm * mm;
  }
  std::uint64_t index(const std::array<int, 4>& pts) const;
  std::array<int, 4> points(std::uint64_t idx) const;
};

}  // namespace ddstc
