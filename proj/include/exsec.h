/*
 * C interface to the exchange security economics library.
 *
 * All functions return exsec_status; on failure exsec_last_error() holds a
 * message for the calling thread until its next failing call. Objects behind
 * opaque handles are created by the library and must be released with the
 * matching *_destroy function.
 */
#ifndef EXSEC_H
#define EXSEC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum exsec_status {
  EXSEC_OK = 0,
  EXSEC_ERR_IO = 1,         /* file access or file content failure */
  EXSEC_ERR_DOMAIN = 2,     /* argument outside the model's domain */
  EXSEC_ERR_INFEASIBLE = 3, /* model has no feasible answer here */
  EXSEC_ERR_INTERNAL = 4,
} exsec_status;

const char* exsec_last_error(void);
const char* exsec_version(void);

/* ---- market environment ---- */

typedef struct exsec_params exsec_params;

exsec_status exsec_params_create(double market_volume, double big_exchange_volume,
                                 double big_exchange_fee, double fee_sensitive_fraction,
                                 double attack_probability_constant,
                                 double risk_exposure_constant, exsec_params** out);

/* Scales both volumes by `scale`, keeping fee rates and cost constants. */
exsec_status exsec_params_price_shock(const exsec_params* params, double scale,
                                      exsec_params** out);

void exsec_params_destroy(exsec_params* params);

/* ---- profit evaluation ---- */

typedef struct exsec_profit_breakdown {
  double volume;
  double revenue;
  double investment_cost;
  double attack_probability;
  double loss_if_breached;
  double expected_risk_cost;
  double expected_profit;
} exsec_profit_breakdown;

exsec_status exsec_expected_profit(const exsec_params* params, double fee_rate,
                                   double investment, exsec_profit_breakdown* out);

/* ---- optimization ---- */

typedef enum exsec_fee_mode {
  EXSEC_FEE_SECURITY_AWARE = 0,
  EXSEC_FEE_SECURITY_BLIND = 1,
} exsec_fee_mode;

typedef struct exsec_optimal_decision {
  double fee_rate;
  double investment;
  double volume;
  double expected_profit;
  int mode; /* exsec_fee_mode */
} exsec_optimal_decision;

exsec_status exsec_optimal_decision(const exsec_params* params, int mode,
                                    exsec_optimal_decision* out);

/* Lattice maximization over fee (linear on [0, big fee], fee_steps points)
 * and investment (log-spaced on [investment_lo, investment_hi]); independent
 * check on the closed forms. */
exsec_status exsec_grid_search(const exsec_params* params, int fee_steps, double investment_lo,
                               double investment_hi, int investment_steps,
                               exsec_optimal_decision* out);

/* ---- simulation ---- */

typedef struct exsec_sim_summary {
  int64_t days_simulated;
  double mean_daily_profit;
  double profit_variance;
  double quantile_01;
  double quantile_05;
  double quantile_50;
  double quantile_95;
  double quantile_99;
  int64_t total_incidents;
  int64_t ruin_day; /* 0-based; -1 when no ruin or no initial capital */
  double cumulative_profit;
} exsec_sim_summary;

/* initial_capital may be NULL to disable ruin detection. Identical inputs
 * give bit-identical summaries for any worker_threads value. */
exsec_status exsec_simulate(const exsec_params* params, double fee_rate, double investment,
                            int64_t days, int64_t shards, uint64_t seed,
                            const double* initial_capital, int worker_threads,
                            exsec_sim_summary* out);

exsec_status exsec_expected_total_loss_sharded(const exsec_params* params, double fee_rate,
                                               double investment, int64_t shards, double* out);

/* ---- parameter estimation ---- */

exsec_status exsec_estimate_alpha(int64_t breach_count, int64_t observation_days, double* out);

/* breaches.csv: header "exchange_id,date", one row per confirmed breach. */
exsec_status exsec_estimate_alpha_csv(const char* breaches_csv_path, int64_t observation_days,
                                      double* out);

/* pricing.csv: header "vendor,upfront_fee,recurring_fee,recurring_period_days,
 * amortization_window_days". */
exsec_status exsec_estimate_beta_csv(const char* pricing_csv_path, double* out);

/* volumes.csv: header "exchange_id,date,volume". start_date/end_date are
 * inclusive ISO dates; NULL leaves that side unbounded. */
exsec_status exsec_estimate_market_csv(const char* volumes_csv_path, const char* start_date,
                                       const char* end_date, double* market_volume,
                                       double* big_exchange_volume,
                                       double* fee_sensitive_suggestion);

/* ---- parameter sweeps ---- */

typedef struct exsec_grid exsec_grid;

/* Axis parameter names: alpha_M, beta_M, V_M, gamma_BS, f_S, I.
 * spacing flags: 0 linear, 1 log. */
exsec_status exsec_sweep_optimal_investment(const exsec_params* params, const char* x_name,
                                            double x_lo, double x_hi, int x_steps, int x_log,
                                            const char* y_name, double y_lo, double y_hi,
                                            int y_steps, int y_log, int worker_threads,
                                            exsec_grid** out);

exsec_status exsec_sweep_profit(const exsec_params* params, const char* x_name, double x_lo,
                                double x_hi, int x_steps, int x_log, const char* y_name,
                                double y_lo, double y_hi, int y_steps, int y_log,
                                int worker_threads, exsec_grid** out);

void exsec_grid_destroy(exsec_grid* grid);

exsec_status exsec_grid_dims(const exsec_grid* grid, int* x_steps, int* y_steps);

/* Writes NAN for infeasible cells. */
exsec_status exsec_grid_value(const exsec_grid* grid, int ix, int iy, double* out);

exsec_status exsec_grid_write_csv(const exsec_grid* grid, const char* path);

/* Copies the conventional "<metric>__<xparam>__<yparam>.csv" name. */
exsec_status exsec_grid_csv_filename(const exsec_grid* grid, char* buffer, size_t buffer_size);

#ifdef __cplusplus
}
#endif

#endif /* EXSEC_H */
