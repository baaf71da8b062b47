#include "ddstc/ddstc.h"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "codebook.hpp"
#include "design.hpp"
#include "relays.hpp"
#include "signalset.hpp"
#include "sweep.hpp"
#include "verify.hpp"

struct ddstc_code {
  ddstc::CodeBundle bundle;
};

struct ddstc_report {
  std::string text;
  int pass = 1;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
ddstc_status guarded(Fn&& fn) {
  try {
    fn();
    return DDSTC_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DDSTC_ERR_INVALID;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return DDSTC_ERR_INVALID;
  } catch (const std::logic_error& e) {
    g_last_error = e.what();
    return DDSTC_ERR_INVALID;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return DDSTC_ERR_REFUSED;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DDSTC_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DDSTC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DDSTC_ERR_INTERNAL;
  }
}

ddstc_status invalid(const char* msg) {
  g_last_error = msg;
  return DDSTC_ERR_INVALID;
}

ddstc_status make_report(std::string text, int pass, ddstc_report** out) {
  *out = new ddstc_report{std::move(text), pass};
  return DDSTC_OK;
}

int resolve_workers(int32_t workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

extern "C" {

const char* ddstc_version(void) { return "1.0.0"; }

const char* ddstc_status_name(ddstc_status status) {
  switch (status) {
    case DDSTC_OK: return "ok";
    case DDSTC_ERR_INVALID: return "invalid argument";
    case DDSTC_ERR_REFUSED: return "budget exceeded";
    case DDSTC_ERR_NOMEM: return "out of memory";
    case DDSTC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ddstc_last_error(void) { return g_last_error.c_str(); }

ddstc_status ddstc_code_create(const char* code, int32_t lambda, double rate,
                               uint64_t q_override, ddstc_code** out) {
  if (!out) return invalid("null output pointer");
  *out = nullptr;
  if (!code) return invalid("null code name");
  return guarded([&] {
    auto bundle = ddstc::build_code(code, lambda, rate, q_override);
    *out = new ddstc_code{std::move(bundle)};
  });
}

void ddstc_code_destroy(ddstc_code* code) { delete code; }

ddstc_status ddstc_code_info_get(const ddstc_code* code,
                                 ddstc_code_info* out) {
  if (!code || !out) return invalid("null argument");
  const ddstc::Codebook& book = code->bundle.book;
  ddstc::ComplexityCounts cx = ddstc::complexity_report(book);
  out->t = book.t;
  out->relays = code->bundle.relays.r();
  out->direct_relays = code->bundle.relays.m_split;
  out->codewords = book.size();
  out->bits = book.bits();
  out->rate_bpcu = book.rate_per_2t();
  out->group_decodable = book.group_decodable ? 1 : 0;
  out->joint_metric_evals = cx.joint_metric_evals;
  out->group_metric_evals = cx.group_metric_evals;
  return DDSTC_OK;
}

ddstc_status ddstc_render_design(const ddstc_code* code, ddstc_report** out) {
  if (!code || !out) return invalid("null argument");
  *out = nullptr;
  if (!code->bundle.book.design)
    return invalid("code does not carry a design");
  return guarded([&] {
    make_report(ddstc::render_design(*code->bundle.book.design), 1, out);
  });
}

ddstc_status ddstc_signal_set_csv(const ddstc_code* code,
                                  ddstc_report** out) {
  if (!code || !out) return invalid("null argument");
  *out = nullptr;
  if (!code->bundle.book.points)
    return invalid("code does not carry a signal set");
  return guarded([&] {
    make_report(ddstc::signal_set_csv(*code->bundle.book.points), 1, out);
  });
}

ddstc_status ddstc_relays_csv(const ddstc_code* code, ddstc_report** out) {
  if (!code || !out) return invalid("null argument");
  *out = nullptr;
  return guarded(
      [&] { make_report(ddstc::relays_csv(code->bundle.relays), 1, out); });
}

ddstc_status ddstc_verify(const char* code, int32_t lambda, double rate,
                          uint64_t q_override, uint64_t pair_budget,
                          int32_t workers, ddstc_report** out) {
  if (!out) return invalid("null output pointer");
  *out = nullptr;
  if (!code) return invalid("null code name");
  if (pair_budget == 0) pair_budget = ddstc::DiversityOptions{}.pair_budget;
  return guarded([&] {
    auto rows = ddstc::verify_code(code, lambda, rate, q_override, pair_budget,
                                   resolve_workers(workers));
    make_report(ddstc::report_csv(rows), ddstc::all_pass(rows) ? 1 : 0, out);
  });
}

void ddstc_sim_spec_init(ddstc_sim_spec* spec) {
  if (!spec) return;
  ddstc::ExperimentSpec d;
  spec->code = nullptr;
  spec->lambda = d.lambda;
  spec->rate = d.rate;
  spec->q_override = d.q_override;
  spec->snr_db = nullptr;
  spec->snr_count = 0;
  spec->min_errors = d.min_errors;
  spec->max_blocks = d.max_blocks;
  spec->seed = d.seed;
  spec->decoder = nullptr;
  spec->workers = 1;
  spec->block_channel_uses = d.block_channel_uses;
  spec->noise_scale = d.noise_scale;
}

ddstc_status ddstc_simulate(const ddstc_sim_spec* spec,
                            ddstc_progress_fn progress, void* progress_arg,
                            ddstc_report** out) {
  if (!out) return invalid("null output pointer");
  *out = nullptr;
  if (!spec) return invalid("null spec");
  if (!spec->snr_db && spec->snr_count > 0)
    return invalid("null SNR grid with nonzero count");
  return guarded([&] {
    ddstc::ExperimentSpec es;
    es.code = spec->code ? spec->code : "proposed";
    es.lambda = spec->lambda;
    es.rate = spec->rate;
    es.q_override = spec->q_override;
    es.snr_db.assign(spec->snr_db, spec->snr_db + spec->snr_count);
    es.min_errors = spec->min_errors;
    es.max_blocks = spec->max_blocks;
    es.seed = spec->seed;
    es.decoder = spec->decoder ? spec->decoder : "auto";
    es.workers = resolve_workers(spec->workers);
    es.block_channel_uses = spec->block_channel_uses;
    es.noise_scale = spec->noise_scale;

    ddstc::CodeBundle bundle =
        ddstc::build_code(es.code, es.lambda, es.rate, es.q_override);
    ddstc::ProgressFn fn;
    if (progress)
      fn = [progress, progress_arg](const std::string& line) {
        progress(line.c_str(), progress_arg);
      };
    auto rows = ddstc::run_sweep(bundle, es, fn);
    make_report(ddstc::result_csv(rows), 1, out);
  });
}

const char* ddstc_report_text(const ddstc_report* report) {
  return report ? report->text.c_str() : "";
}

int32_t ddstc_report_pass(const ddstc_report* report) {
  return report && report->pass ? 1 : 0;
}

void ddstc_report_destroy(ddstc_report* report) { delete report; }

}  // extern "C"
