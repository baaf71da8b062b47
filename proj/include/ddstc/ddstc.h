#ifndef DDSTC_H
#define DDSTC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ddstc_status {
  DDSTC_OK = 0,
  DDSTC_ERR_INVALID = 1,  /* bad argument or unsupported combination */
  DDSTC_ERR_REFUSED = 2,  /* work exceeds a configured budget */
  DDSTC_ERR_NOMEM = 3,
  DDSTC_ERR_INTERNAL = 4
} ddstc_status;

/* Codebook plus relay processing matrices for one code family. */
typedef struct ddstc_code ddstc_code;

/* Owned text result; some carry an overall pass flag. */
typedef struct ddstc_report ddstc_report;

const char* ddstc_version(void);
const char* ddstc_status_name(ddstc_status status);

/* Message for the calling thread's most recent failure, never NULL. */
const char* ddstc_last_error(void);

/* code: "proposed", "cyclic" or "circulant".  lambda sets T = 2^lambda for
 * the proposed code and is ignored by the baselines.  rate is in bits per
 * channel use; the baselines accept 1 and 1.5.  q_override forces the
 * proposed codebook size (0 derives it from the rate). */
ddstc_status ddstc_code_create(const char* code, int32_t lambda, double rate,
                               uint64_t q_override, ddstc_code** out);
void ddstc_code_destroy(ddstc_code* code);

typedef struct ddstc_code_info {
  int32_t t;              /* codeword matrix size */
  int32_t relays;
  int32_t direct_relays;  /* applying A_j to the received vector, not its
                             conjugate */
  uint64_t codewords;
  int32_t bits;           /* log2(codewords), -1 when not a power of two */
  double rate_bpcu;
  int32_t group_decodable;
  uint64_t joint_metric_evals;  /* metric evaluations per decoded codeword */
  uint64_t group_metric_evals;  /* 0 when not group decodable */
} ddstc_code_info;

ddstc_status ddstc_code_info_get(const ddstc_code* code, ddstc_code_info* out);

/* Variable layout of the codeword matrix, proposed code only. */
ddstc_status ddstc_render_design(const ddstc_code* code, ddstc_report** out);

/* Per-group constellation, proposed code only.  CSV columns:
 * group_dim,point_index,coord_1..coord_L. */
ddstc_status ddstc_signal_set_csv(const ddstc_code* code, ddstc_report** out);

/* Relay matrices.  CSV columns: relay,row,col,re,im. */
ddstc_status ddstc_relays_csv(const ddstc_code* code, ddstc_report** out);

/* Structural check suite.  CSV columns: check,name,pass,worst_value; the
 * report pass flag is set only when every row passes.  Pair scans larger
 * than pair_budget fall back to a deterministic sample (0 = default
 * budget).  workers <= 0 picks the hardware thread count. */
ddstc_status ddstc_verify(const char* code, int32_t lambda, double rate,
                          uint64_t q_override, uint64_t pair_budget,
                          int32_t workers, ddstc_report** out);

typedef struct ddstc_sim_spec {
  const char* code;       /* NULL = "proposed" */
  int32_t lambda;
  double rate;
  uint64_t q_override;
  const double* snr_db;   /* per-point receive SNR grid, dB */
  size_t snr_count;
  uint64_t min_errors;    /* finish a point after this many codeword errors */
  uint64_t max_blocks;    /* hard per-point block cap */
  uint64_t seed;
  const char* decoder;    /* NULL or "auto", "joint", "group" */
  int32_t workers;        /* <= 0 picks the hardware thread count */
  int32_t block_channel_uses;
  double noise_scale;     /* 1.0 for the standard channel */
} ddstc_sim_spec;

/* Fills the documented defaults; snr grid stays empty. */
void ddstc_sim_spec_init(ddstc_sim_spec* spec);

typedef void (*ddstc_progress_fn)(const char* line, void* arg);

/* Differential error-rate sweep, one result row per SNR point.  The report
 * text is the result CSV and does not depend on the worker count.  progress
 * may be NULL; it receives status lines while a point runs. */
ddstc_status ddstc_simulate(const ddstc_sim_spec* spec,
                            ddstc_progress_fn progress, void* progress_arg,
                            ddstc_report** out);

const char* ddstc_report_text(const ddstc_report* report);
int32_t ddstc_report_pass(const ddstc_report* report);
void ddstc_report_destroy(ddstc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DDSTC_H */
