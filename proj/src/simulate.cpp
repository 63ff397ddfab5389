#include "exsec/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "exsec/errors.hpp"
#include "exsec/model.hpp"
#include "exsec/rng.hpp"
#include "parallel.hpp"

namespace exsec {

namespace {

void validate_config(const SimConfig& config) {
  if (config.days < 1) throw domain_error("days must be >= 1");
  if (config.shards < 1) throw domain_error("shards must be >= 1");
  if (config.worker_threads < 1) throw domain_error("worker_threads must be >= 1");
  if (config.initial_capital && !std::isfinite(*config.initial_capital))
    throw domain_error("initial_capital must be finite");
}

// Linear interpolation between closest ranks on the sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double probe) {
  const auto n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = probe * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

SimResult simulate(const ExchangeDecision& decision, const MarketParams& params,
                   const SimConfig& config) {
  validate_decision(decision, params);
  validate_config(config);

  const double volume = anticipated_volume(decision.fee_rate, params);
  const double shard_volume = volume / static_cast<double>(config.shards);
  const double shard_probability = attack_probability(shard_volume, params);
  double incident_loss = 0.0;
  if (shard_probability > 0.0 && params.risk_exposure_constant > 0.0) {
    const double shard_investment = decision.investment / static_cast<double>(config.shards);
    incident_loss = loss_exposure(shard_volume, shard_investment, params);
  }
  const double incident_free_profit = decision.fee_rate * volume - decision.investment;
  const bool draw_incidents = shard_probability > 0.0;

  // Day profits are filled independently per day from the keyed generator,
  // then reduced serially, so the worker count cannot change any output.
  std::vector<double> day_profit(static_cast<std::size_t>(config.days));
  std::vector<std::int64_t> incident_partials(
      static_cast<std::size_t>(std::max(config.worker_threads, 1)), 0);
  detail::parallel_chunks(config.days, config.worker_threads,
                          [&](int chunk, std::int64_t lo, std::int64_t hi) {
                            std::int64_t incidents = 0;
                            for (std::int64_t day = lo; day < hi; ++day) {
                              std::int64_t hits = 0;
                              if (draw_incidents) {
                                for (std::int64_t shard = 0; shard < config.shards; ++shard) {
                                  const double u = unit_uniform(
                                      config.seed, static_cast<std::uint64_t>(day),
                                      static_cast<std::uint64_t>(shard));
                                  if (u < shard_probability) ++hits;
                                }
                              }
                              incidents += hits;
                              day_profit[static_cast<std::size_t>(day)] =
                                  incident_free_profit -
                                  static_cast<double>(hits) * incident_loss;
                            }
                            incident_partials[static_cast<std::size_t>(chunk)] = incidents;
                          });

  SimResult result{};
  result.days_simulated = config.days;
  for (const std::int64_t partial : incident_partials) result.total_incidents += partial;

  // Welford accumulation in day order.
  double mean = 0.0;
  double m2 = 0.0;
  double cumulative = 0.0;
  std::int64_t count = 0;
  double capital = config.initial_capital.value_or(0.0);
  for (std::int64_t day = 0; day < config.days; ++day) {
    const double x = day_profit[static_cast<std::size_t>(day)];
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
    cumulative += x;
    if (config.initial_capital) {
      capital += x;
      if (!result.ruin_day && capital < 0.0) result.ruin_day = day;
    }
  }
  result.mean_daily_profit = mean;
  result.profit_variance = config.days > 1 ? m2 / static_cast<double>(config.days - 1) : 0.0;
  result.cumulative_profit = cumulative;

  std::sort(day_profit.begin(), day_profit.end());
  for (std::size_t i = 0; i < kProfitQuantileProbes.size(); ++i)
    result.profit_quantiles[i] = quantile_sorted(day_profit, kProfitQuantileProbes[i]);
  return result;
}

double expected_total_loss_sharded(const ExchangeDecision& decision, const MarketParams& params,
                                   std::int64_t shards) {
  validate_decision(decision, params);
  if (shards < 1) throw domain_error("shards must be >= 1");
  const double volume = anticipated_volume(decision.fee_rate, params);
  const double shard_volume = volume / static_cast<double>(shards);
  const double shard_probability = attack_probability(shard_volume, params);
  if (shard_probability == 0.0 || params.risk_exposure_constant == 0.0 || volume == 0.0)
    return 0.0;
  // Per-incident loss equals the breached shard's exposure, which reduces to
  // the unsharded ratio volume/investment scaled by the cost constant.
  const double per_incident = loss_exposure(volume, decision.investment, params);
  return static_cast<double>(shards) * shard_probability * per_incident;
}

}  // namespace exsec
