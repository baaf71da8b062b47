#include "sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "baselines.hpp"

namespace ddstc {

CodeBundle build_code(const std::string& code, int lambda, double rate,
                      std::uint64_t q_override) {
  if (code == "proposed") {
    RelaySystem rs = build_relays(lambda);
    std::uint64_t q = q_override;
    if (q == 0) {
      double bits = 2.0 * rs.t() * rate;
      if (bits < 4.0 || bits != std::floor(bits))
        throw std::invalid_argument("rate does not give an integer bit count");
      if (bits >= 62)
        throw std::invalid_argument("codebook size out of range");
      q = std::uint64_t{1} << static_cast<int>(bits);
    }
    auto design = std::make_shared<const LinearDesign>(build_design(lambda));
    auto points = std::make_shared<const SignalSet>(build_signal_set(lambda, q));
    return {materialize(design, points), std::move(rs)};
  }
  if (code == "cyclic")
    return {cyclic_codebook(baseline_rate_from(rate)), cyclic_relay_system()};
  if (code == "circulant") {
    auto [book, rs] = circulant_codebook(baseline_rate_from(rate));
    return {std::move(book), std::move(rs)};
  }
  throw std::invalid_argument("unknown code: " + code);
}

std::vector<double> parse_snr_grid(const std::string& text) {
  double a = 0, b = 0, s = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &a, &b, &s, &tail) != 3 ||
      s <= 0.0 || b < a)
    throw std::invalid_argument("snr grid must be start:stop:step with step > 0");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    double v = a + i * s;
    if (v > b + s * 1e-9) break;
    grid.push_back(v);
  }
  return grid;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

BlockCounts run_point(const CodeBundle& bundle, const ExperimentSpec& spec,
                      const Decoder& dec, const SimConfig& cfg,
                      std::size_t point_index, std::uint64_t& blocks_done,
                      const ProgressFn& progress) {
  BlockCounts total;
  blocks_done = 0;
  int workers = std::max(1, spec.workers);
  // Batch sizes follow a fixed schedule and the stopping rule is evaluated
  // only at batch boundaries, so the simulated block set never depends on
  // the worker split.
  std::uint64_t batch = 32;
  while (total.codeword_errors < spec.min_errors &&
         blocks_done < spec.max_blocks) {
    std::uint64_t count = std::min(batch, spec.max_blocks - blocks_done);
    std::uint64_t start = blocks_done;

    auto run_range = [&](BlockCounts& into, std::uint64_t from, std::uint64_t step) {
      for (std::uint64_t b = from; b < start + count; b += step) {
        RandomStream rng(spec.seed, point_index, b);
        BlockCounts one = run_block(bundle.book, bundle.relays, cfg, dec, rng);
        into.cycles += one.cycles;
        into.codeword_errors += one.codeword_errors;
        into.bit_errors += one.bit_errors;
      }
    };

    if (workers == 1 || count == 1) {
      run_range(total, start, 1);
    } else {
      std::vector<BlockCounts> parts(workers);
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back(run_range, std::ref(parts[w]), start + w,
                          static_cast<std::uint64_t>(workers));
      for (auto& th : pool) th.join();
      for (const auto& p : parts) {
        total.cycles += p.cycles;
        total.codeword_errors += p.codeword_errors;
        total.bit_errors += p.bit_errors;
      }
    }

    blocks_done += count;
    batch = std::min<std::uint64_t>(batch * 2, 1024);
    if (progress) {
      std::ostringstream os;
      os << "# snr=" << fmt_double(10.0 * std::log10(cfg.power))
         << " blocks=" << blocks_done << " errors=" << total.codeword_errors;
      progress(os.str());
    }
  }
  return total;
}

}  // namespace

std::vector<ResultRow> run_sweep(const CodeBundle& bundle,
                                 const ExperimentSpec& spec,
                                 const ProgressFn& progress) {
  if (spec.snr_db.empty()) throw std::invalid_argument("empty SNR grid");
  if (spec.min_errors == 0 || spec.max_blocks == 0)
    throw std::invalid_argument("stopping rule must allow at least one block");
  int bits = bundle.book.bits();
  if (bits <= 0)
    throw std::invalid_argument("codebook size must be a power of two");

  DecoderKind kind;
  if (spec.decoder == "joint")
    kind = DecoderKind::joint;
  else if (spec.decoder == "group")
    kind = DecoderKind::group;
  else if (spec.decoder == "auto")
    kind = bundle.book.group_decodable ? DecoderKind::group : DecoderKind::joint;
  else
    throw std::invalid_argument("decoder must be auto, joint or group");
  Decoder dec(bundle.book, kind);

  std::vector<ResultRow> rows;
  for (std::size_t p = 0; p < spec.snr_db.size(); ++p) {
    SimConfig cfg = make_sim_config(spec.snr_db[p], bundle.relays.r(),
                                    spec.block_channel_uses);
    cfg.noise_scale = spec.noise_scale;
    std::uint64_t blocks = 0;
    BlockCounts counts =
        run_point(bundle, spec, dec, cfg, p, blocks, progress);

    ResultRow row;
    row.code = bundle.book.name;
    row.rate_bpcu = bundle.book.rate_per_2t();
    row.snr_db = spec.snr_db[p];
    row.blocks = blocks;
    row.cycles = counts.cycles;
    row.codeword_errors = counts.codeword_errors;
    row.bit_errors = counts.bit_errors;
    row.cer = counts.cycles ? static_cast<double>(counts.codeword_errors) /
                                  static_cast<double>(counts.cycles)
                            : 0.0;
    row.ber = counts.cycles ? static_cast<double>(counts.bit_errors) /
                                  (static_cast<double>(counts.cycles) * bits)
                            : 0.0;
    row.seed = spec.seed;
    row.decoder = kind == DecoderKind::joint ? "joint" : "group";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string result_csv_header() {
  return "code,rate_bpcu,snr_db,blocks,cycles,codeword_errors,bit_errors,cer,"
         "ber,seed,decoder\n";
}

std::string result_csv_row(const ResultRow& r) {
  std::ostringstream os;
  os << r.code << ',' << fmt_double(r.rate_bpcu) << ',' << fmt_double(r.snr_db)
     << ',' << r.blocks << ',' << r.cycles << ',' << r.codeword_errors << ','
     << r.bit_errors << ',' << fmt_double(r.cer) << ',' << fmt_double(r.ber)
     << ',' << r.seed << ',' << r.decoder << '\n';
  return os.str();
}

std::string result_csv(const std::vector<ResultRow>& rows) {
  std::string out = result_csv_header();
  for (const auto& r : rows) out += result_csv_row(r);
  return out;
}

}  // namespace ddstc
