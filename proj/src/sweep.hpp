#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "codebook.hpp"
#include "protocol.hpp"
#include "relays.hpp"

namespace ddstc {

struct CodeBundle {
  Codebook book;
  RelaySystem relays;
};

// code: proposed | cyclic | circulant.  For the proposed code the size is
// 2^(2 T rate) unless q_override is given; baselines accept rates 1, 1.5.
CodeBundle build_code(const std::string& code, int lambda, double rate,
                      std::uint64_t q_override = 0);

struct ExperimentSpec {
  std::string code = "proposed";
  int lambda = 2;
  double rate = 1.0;
  std::uint64_t q_override = 0;
  std::vector<double> snr_db;
  std::uint64_t min_errors = 500;
  std::uint64_t max_blocks = 1000000;
  std::uint64_t seed = 1;
  std::string decoder = "auto";  // auto | joint | group
  int workers = 1;
  int block_channel_uses = 800;
  double noise_scale = 1.0;  // test hook
};

// "a:b:s" -> a, a+s, .., up to b inclusive (within half-step slack).
std::vector<double> parse_snr_grid(const std::string& text);

struct ResultRow {
  std::string code;
  double rate_bpcu = 0.0;
  double snr_db = 0.0;
  std::uint64_t blocks = 0;
  std::uint64_t cycles = 0;
  std::uint64_t codeword_errors = 0;
  std::uint64_t bit_errors = 0;
  double cer = 0.0;
  double ber = 0.0;
  std::uint64_t seed = 0;
  std::string decoder;
};

using ProgressFn = std::function<void(const std::string&)>;

// Monte Carlo over quasi-static blocks, one row per SNR point.  Block b of
// point p always consumes the stream (seed, p, b), so output bytes do not
// depend on the worker count.
std::vector<ResultRow> run_sweep(const CodeBundle& bundle,
                                 const ExperimentSpec& spec,
                                 const ProgressFn& progress = nullptr);

std::string result_csv_header();
std::string result_csv_row(const ResultRow& row);
std::string result_csv(const std::vector<ResultRow>& rows);

}  // namespace ddstc
