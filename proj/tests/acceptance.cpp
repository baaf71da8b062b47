// Acceptance gate: eight structural and behavioural criteria, one line each.
// Run with no arguments for the full gate or with a criterion number 1..8.
#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "baselines.hpp"
#include "codebook.hpp"
#include "design.hpp"
#include "protocol.hpp"
#include "relays.hpp"
#include "rng.hpp"
#include "signalset.hpp"
#include "sweep.hpp"
#include "verify.hpp"

using namespace ddstc;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

Codebook proposed_book(int lambda, std::uint64_t q) {
  auto d = std::make_shared<LinearDesign>(build_design(lambda));
  auto s = std::make_shared<SignalSet>(build_signal_set(lambda, q));
  return materialize(d, s);
}

bool grid_matches(const LinearDesign& d,
                  const std::vector<std::string>& rows, std::string& err) {
  auto grid = design_tokens(d);
  if (grid.size() != rows.size()) {
    err = "size mismatch";
    return false;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::istringstream in(rows[r]);
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      std::string want;
      if (!(in >> want) || token_str(grid[r][c]) != want) {
        err = "cell (" + std::to_string(r) + "," + std::to_string(c) + ")";
        return false;
      }
    }
  }
  return true;
}

// 1: the four and eight antenna layouts match the published grids exactly.
Outcome criterion_1() {
  std::string err;
  bool ok4 = grid_matches(build_design(2),
                          {"x1 x2 -x3* -x4*",
                           "x2 x1 -x4* -x3*",
                           "x3 x4 x1* x2*",
                           "x4 x3 x2* x1*"},
                          err);
  if (!ok4) return {false, "four antenna layout: " + err};
  bool ok8 = grid_matches(build_design(3),
                          {"x1 x2 x3 x4 -x5* -x6* -x7* -x8*",
                           "x2 x1 x4 x3 -x6* -x5* -x8* -x7*",
                           "x3 x4 x1 x2 -x7* -x8* -x5* -x6*",
                           "x4 x3 x2 x1 -x8* -x7* -x6* -x5*",
                           "x5 x6 x7 x8 x1* x2* x3* x4*",
                           "x6 x5 x8 x7 x2* x1* x4* x3*",
                           "x7 x8 x5 x6 x3* x4* x1* x2*",
                           "x8 x7 x6 x5 x4* x3* x2* x1*"},
                          err);
  if (!ok8) return {false, "eight antenna layout: " + err};
  return {true, "token grids exact"};
}

// 2: algebra invariants over 1000 random elements per size.
Outcome criterion_2() {
  double worst = 0.0;
  for (int a = 1; a <= 3; ++a) {
    AlgebraSuite s = run_algebra_suite(a, 1000, 1);
    worst = std::max({worst, s.homomorphism, s.conjugation, s.center,
                      s.anticommute});
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max violation %.3g", worst);
  return {worst < 1e-12, buf};
}

// 3: relay systems for lambda 1..3 against their full codebooks.
Outcome criterion_3() {
  Mat a2(4, 4), a3(4, 4), a4(4, 4);
  a2 << 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  a3 << 0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0;
  a4 << 0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0;

  for (int lambda = 1; lambda <= 3; ++lambda) {
    RelaySystem rs = build_relays(lambda);
    int t = rs.t();
    for (const Mat& m : rs.matrices)
      if (max_abs(m.adjoint() * m - Mat::Identity(t, t)) >= 1e-12)
        return {false, "relay not unitary"};
    if (max_abs(rs.x0 - Mat::Identity(t, t)) != 0.0)
      return {false, "start matrix not the identity"};

    std::uint64_t q = std::uint64_t{1} << (2 << lambda);  // 16, 256, 65536
    Codebook c = proposed_book(lambda, q);
    CompatReport rep = verify_compatibility(rs, c);
    if (!rep.ok) return {false, "commutation failed"};
    if (lambda == 3 && (!rep.sampled || rep.words_checked != 1000))
      return {false, "large codebook was not sampled at 1000 words"};
  }

  RelaySystem rs = build_relays(2);
  if (max_abs(rs.matrices[0] - Mat::Identity(4, 4)) != 0.0 ||
      max_abs(rs.matrices[1] - a2) != 0.0 ||
      max_abs(rs.matrices[2] - a3) != 0.0 ||
      max_abs(rs.matrices[3] - a4) != 0.0)
    return {false, "four relay matrices differ from the reference set"};
  return {true, "unitary, commuting, identity start, reference match"};
}

// 4: rate-one four relay codebook is scaled unitary and fully diverse.
Outcome criterion_4() {
  Codebook c = proposed_book(2, 256);
  UnitarityReport u = check_scaled_unitary(c);
  if (u.max_offdiag >= 1e-10) return {false, "off-diagonal energy"};
  if (std::abs(u.mean_scale_sq - 1.0) > 1e-12)
    return {false, "mean squared scale differs from one"};

  DiversityOptions opt;
  opt.pair_budget = 40000;
  DiversityResult div = diversity_and_gain(c, opt);
  if (div.pairs_checked != 32640) return {false, "pair scan incomplete"};
  char buf[96];
  std::snprintf(buf, sizeof buf, "min |det| %.6g over %llu pairs",
                div.min_abs_det,
                static_cast<unsigned long long>(div.pairs_checked));
  if (!(div.min_abs_det > 1e-12)) return {false, buf};
  return {true, buf};
}

// 5: joint and group decoders give the same index on noisy data.
Outcome criterion_5() {
  Codebook c = proposed_book(2, 256);
  RelaySystem rs = build_relays(2);
  Decoder joint(c, DecoderKind::joint);
  Decoder group(c, DecoderKind::group);
  SimConfig cfg = make_sim_config(20.0, rs.r());
  const int trials = 10000;
  int agree = 0;
  for (int i = 0; i < trials; ++i) {
    RandomStream rng(5, 0, i);
    ChannelState ch = draw_channel(rs, rng);
    Vec y_prev = relay_and_receive(rs.s0, rs, ch, cfg, rng);
    std::uint64_t tx = rng.next_below(c.size());
    Vec s = differential_encode(c.words[tx], rs.s0, 1.0);
    Vec y = relay_and_receive(s, rs, ch, cfg, rng);
    if (joint.decode(y, y_prev, 1.0).index == group.decode(y, y_prev, 1.0).index)
      ++agree;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d/%d agreements", agree, trials);
  return {agree == trials, buf};
}

// 6: decoding search space accounting at both rates.
Outcome criterion_6() {
  ComplexityCounts r1 = complexity_report(proposed_book(2, 256));
  if (r1.per_group_space != 4 || r1.joint_space != 256)
    return {false, "rate one spaces"};
  ComplexityCounts r15 = complexity_report(proposed_book(2, 4096));
  if (r15.per_group_space != 8 || r15.joint_space != 4096)
    return {false, "rate 1.5 spaces"};
  ComplexityCounts cy1 = complexity_report(cyclic_codebook(BaselineRate::one_bpcu));
  ComplexityCounts cy15 =
      complexity_report(cyclic_codebook(BaselineRate::three_half_bpcu));
  auto [ci1, rs1] = circulant_codebook(BaselineRate::one_bpcu);
  auto [ci15, rs15] = circulant_codebook(BaselineRate::three_half_bpcu);
  (void)rs1;
  (void)rs15;
  ComplexityCounts cc1 = complexity_report(ci1);
  ComplexityCounts cc15 = complexity_report(ci15);
  if (cy1.joint_space != 256 || cy15.joint_space != 4096 ||
      cc1.joint_space != 256 || cc15.joint_space != 4096)
    return {false, "baseline joint spaces"};
  if (cy1.per_group_space != 0 || cc1.per_group_space != 0)
    return {false, "baselines must not report a group split"};
  return {true, "(4,256) and (8,4096); baselines joint only"};
}

// Linear interpolation of the SNR at which log10(cer) crosses the target.
bool crossing_snr(const std::vector<ResultRow>& rows, double target,
                  double& out) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double a = rows[i - 1].cer, b = rows[i].cer;
    if (a >= target && b <= target && a > 0 && b > 0 && a != b) {
      double la = std::log10(a), lb = std::log10(b), lt = std::log10(target);
      out = rows[i - 1].snr_db +
            (rows[i].snr_db - rows[i - 1].snr_db) * (lt - la) / (lb - la);
      return true;
    }
  }
  return false;
}

// 7: error-rate ordering and the crossing gap at cer 1e-2, rate one.
Outcome criterion_7() {
  const std::vector<double> grid = {18.0, 21.0, 24.0, 27.0, 30.0};
  ExperimentSpec spec;
  spec.lambda = 2;
  spec.rate = 1.0;
  spec.min_errors = 500;
  spec.max_blocks = 4000000;
  spec.seed = 1;
  spec.workers = 1;
  spec.snr_db = grid;

  spec.code = "proposed";
  auto rows_p = run_sweep(build_code("proposed", 2, 1.0), spec);
  spec.code = "cyclic";
  auto rows_cy = run_sweep(build_code("cyclic", 2, 1.0), spec);
  spec.code = "circulant";
  auto rows_ci = run_sweep(build_code("circulant", 2, 1.0), spec);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (rows_p[i].codeword_errors < 500 || rows_cy[i].codeword_errors < 500 ||
        rows_ci[i].codeword_errors < 500)
      return {false, "a grid point finished under 500 errors"};
    if (rows_p[i].cer <= 1e-2) {
      if (!(rows_p[i].cer < rows_cy[i].cer && rows_cy[i].cer < rows_ci[i].cer)) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "ordering broken at %.3g dB: %.3g vs %.3g vs %.3g",
                      grid[i], rows_p[i].cer, rows_cy[i].cer, rows_ci[i].cer);
        return {false, buf};
      }
    }
  }

  double snr_p = 0, snr_cy = 0;
  if (!crossing_snr(rows_p, 1e-2, snr_p))
    return {false, "proposed curve does not cross cer 1e-2 inside the grid"};
  if (!crossing_snr(rows_cy, 1e-2, snr_cy))
    return {false, "cyclic curve does not cross cer 1e-2 inside the grid"};
  double gap = snr_cy - snr_p;
  char buf[96];
  std::snprintf(buf, sizeof buf, "gap at cer 1e-2: %.2f dB (%.2f vs %.2f)",
                gap, snr_p, snr_cy);
  return {gap >= 3.0, buf};
}

// 8: result CSV bytes do not depend on the worker count.
Outcome criterion_8() {
  ExperimentSpec spec;
  spec.code = "proposed";
  spec.lambda = 2;
  spec.rate = 1.0;
  spec.snr_db = {14.0};
  spec.min_errors = 200;
  spec.max_blocks = 20000;
  spec.seed = 7;
  CodeBundle bundle = build_code("proposed", 2, 1.0);

  std::string first;
  for (int workers : {1, 4, 8}) {
    spec.workers = workers;
    std::string csv = result_csv(run_sweep(bundle, spec));
    if (first.empty())
      first = csv;
    else if (csv != first) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "workers %d changed the bytes", workers);
      return {false, buf};
    }
  }
  return {true, "identical bytes for workers 1, 4, 8"};
}

using Criterion = Outcome (*)();

const Criterion kCriteria[8] = {criterion_1, criterion_2, criterion_3,
                                criterion_4, criterion_5, criterion_6,
                                criterion_7, criterion_8};

const char* kLabels[8] = {"design layouts",     "algebra invariants",
                          "relay systems",      "codebook quality",
                          "decoder equivalence", "complexity accounting",
                          "performance ordering", "determinism"};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 8) {
      std::fprintf(stderr, "usage: %s [1..8]\n", argv[0]);
      return 2;
    }
  }
  bool all_ok = true;
  for (int i = 1; i <= 8; ++i) {
    if (only && i != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome out = kCriteria[i - 1]();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("criterion %d (%s): %s, %s [%.1fs]\n", i, kLabels[i - 1],
                out.pass ? "PASS" : "FAIL", out.detail.c_str(), secs);
    std::fflush(stdout);
    all_ok &= out.pass;
  }
  return all_ok ? 0 : 1;
}
