#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddstc/ddstc.h"

namespace {

struct Options {
  std::string code = "proposed";
  int lambda = 2;
  double rate = 1.0;
  std::uint64_t q = 0;
  double snr = 20.0;
  std::string snr_grid;
  std::uint64_t seed = 1;
  std::string decoder = "auto";
  std::uint64_t min_errors = 500;
  std::uint64_t max_blocks = 1000000;
  int workers = 1;
  std::uint64_t pair_budget = 0;
  int block_uses = 800;
  bool relays = false;
};

int fail_status(ddstc_status st) {
  std::fprintf(stderr, "error: %s (%s)\n", ddstc_last_error(),
               ddstc_status_name(st));
  return 2;
}

int fail_msg(const char* msg) {
  std::fprintf(stderr, "error: %s\n", msg);
  return 2;
}

// "a:b:s" -> a, a+s, .., up to b inclusive within a small slack.
bool parse_grid(const std::string& text, std::vector<double>& out) {
  double start = 0, stop = 0, step = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &tail) !=
          3 ||
      step <= 0)
    return false;
  for (double v = start; v <= stop + step * 1e-9; v += step) out.push_back(v);
  return !out.empty();
}

void print_progress(const char* line, void*) {
  std::fprintf(stderr, "%s\n", line);
  std::fflush(stderr);
}

int print_report(ddstc_status st, ddstc_report* rep) {
  if (st != DDSTC_OK) return fail_status(st);
  std::fputs(ddstc_report_text(rep), stdout);
  int ok = ddstc_report_pass(rep);
  ddstc_report_destroy(rep);
  return ok ? 0 : 1;
}

int run_code_dump(const Options& opt,
                  ddstc_status (*fn)(const ddstc_code*, ddstc_report**)) {
  ddstc_code* code = nullptr;
  ddstc_status st =
      ddstc_code_create(opt.code.c_str(), opt.lambda, opt.rate, opt.q, &code);
  if (st != DDSTC_OK) return fail_status(st);
  ddstc_report* rep = nullptr;
  st = fn(code, &rep);
  ddstc_code_destroy(code);
  return print_report(st, rep);
}

int run_complexity(const Options& opt) {
  ddstc_code* code = nullptr;
  ddstc_status st =
      ddstc_code_create(opt.code.c_str(), opt.lambda, opt.rate, opt.q, &code);
  if (st != DDSTC_OK) return fail_status(st);
  ddstc_code_info info;
  st = ddstc_code_info_get(code, &info);
  ddstc_code_destroy(code);
  if (st != DDSTC_OK) return fail_status(st);
  std::printf(
      "code,t,relays,codewords,bits,rate_bpcu,group_decodable,"
      "joint_metric_evals,group_metric_evals\n");
  std::printf("%s,%d,%d,%" PRIu64 ",%d,%.10g,%s,%" PRIu64 ",%" PRIu64 "\n",
              opt.code.c_str(), info.t, info.relays, info.codewords, info.bits,
              info.rate_bpcu, info.group_decodable ? "true" : "false",
              info.joint_metric_evals, info.group_metric_evals);
  return 0;
}

int run_verify(const Options& opt) {
  ddstc_report* rep = nullptr;
  ddstc_status st = ddstc_verify(opt.code.c_str(), opt.lambda, opt.rate, opt.q,
                                 opt.pair_budget, opt.workers, &rep);
  return print_report(st, rep);
}

int run_simulate(const Options& opt, const std::vector<double>& grid) {
  ddstc_sim_spec spec;
  ddstc_sim_spec_init(&spec);
  spec.code = opt.code.c_str();
  spec.lambda = opt.lambda;
  spec.rate = opt.rate;
  spec.q_override = opt.q;
  spec.snr_db = grid.data();
  spec.snr_count = grid.size();
  spec.min_errors = opt.min_errors;
  spec.max_blocks = opt.max_blocks;
  spec.seed = opt.seed;
  spec.decoder = opt.decoder.c_str();
  spec.workers = opt.workers;
  spec.block_channel_uses = opt.block_uses;
  ddstc_report* rep = nullptr;
  ddstc_status st = ddstc_simulate(&spec, print_progress, nullptr, &rep);
  return print_report(st, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential distributed space-time code toolkit"};
  app.fallthrough();
  Options opt;

  app.add_option("--code", opt.code, "Code family: proposed, cyclic, circulant")
      ->capture_default_str();
  app.add_option("--lambda", opt.lambda,
                 "Antenna exponent, T = 2^lambda (proposed code)")
      ->capture_default_str();
  app.add_option("--rate", opt.rate, "Rate in bits per channel use")
      ->capture_default_str();
  app.add_option("--q", opt.q, "Codebook size override (0 = from rate)")
      ->capture_default_str();
  app.add_option("--snr", opt.snr, "Receive SNR in dB (simulate)")
      ->capture_default_str();
  app.add_option("--snr-grid", opt.snr_grid, "SNR grid start:stop:step (sweep)");
  app.add_option("--seed", opt.seed, "Simulation seed")->capture_default_str();
  app.add_option("--decoder", opt.decoder, "Decoder: auto, joint, group")
      ->capture_default_str();
  app.add_option("--min-errors", opt.min_errors,
                 "Stop an SNR point after this many codeword errors")
      ->capture_default_str();
  app.add_option("--max-blocks", opt.max_blocks, "Per-point block cap")
      ->capture_default_str();
  app.add_option("--workers", opt.workers, "Worker threads (0 = hardware)")
      ->capture_default_str();
  app.add_option("--pair-budget", opt.pair_budget,
                 "Diversity pair scan budget (0 = default)");
  app.add_option("--block-uses", opt.block_uses,
                 "Channel uses per quasi-static block")
      ->capture_default_str();
  app.add_flag("--relays", opt.relays, "Print relay matrices instead (design)");
  app.set_config("--config", "", "Flat key = value configuration file");

  CLI::App* design = app.add_subcommand("design", "Print the codeword layout");
  CLI::App* signalset =
      app.add_subcommand("signalset", "Print the per-group constellation CSV");
  CLI::App* verify =
      app.add_subcommand("verify", "Run the structural check suite");
  CLI::App* simulate =
      app.add_subcommand("simulate", "Error-rate run at one SNR point");
  CLI::App* sweep =
      app.add_subcommand("sweep", "Error-rate sweep over an SNR grid");
  CLI::App* complexity =
      app.add_subcommand("complexity", "Print decoding search space sizes");
  app.require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  if (design->parsed())
    return run_code_dump(opt, opt.relays ? ddstc_relays_csv : ddstc_render_design);
  if (signalset->parsed()) return run_code_dump(opt, ddstc_signal_set_csv);
  if (verify->parsed()) return run_verify(opt);
  if (complexity->parsed()) return run_complexity(opt);
  if (simulate->parsed()) return run_simulate(opt, {opt.snr});
  if (sweep->parsed()) {
    std::vector<double> grid;
    if (opt.snr_grid.empty() || !parse_grid(opt.snr_grid, grid))
      return fail_msg("sweep needs --snr-grid start:stop:step with step > 0");
    return run_simulate(opt, grid);
  }
  return fail_msg("no subcommand given");
}
