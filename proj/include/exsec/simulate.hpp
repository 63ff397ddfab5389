#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "exsec/market.hpp"

namespace exsec {

struct SimConfig {
  std::int64_t days = 1;
  // Number of independent exchange systems the volume and investment are
  // split across. Each shard carries volume/shards and investment/shards and
  // suffers incidents on its own.
  std::int64_t shards = 1;
  std::uint64_t seed = 0;
  // Enables ruin detection: ruin is the first day whose end-of-day cumulative
  // capital (initial_capital + profits so far) is below zero.
  std::optional<double> initial_capital;
  // Execution detail only; any worker count produces bit-identical results.
  int worker_threads = 1;
};

inline constexpr std::array<double, 5> kProfitQuantileProbes{0.01, 0.05, 0.50, 0.95, 0.99};

struct SimResult {
  std::int64_t days_simulated = 0;
  double mean_daily_profit = 0.0;
  double profit_variance = 0.0;  // sample variance over the trajectory
  std::array<double, 5> profit_quantiles{};  // at kProfitQuantileProbes
  std::int64_t total_incidents = 0;
  std::optional<std::int64_t> ruin_day;  // 0-based day index; absent without initial_capital
  double cumulative_profit = 0.0;
};

// Realizes the daily profit process over config.days days. Each day, each
// shard independently suffers an incident with the attack probability of its
// own volume share; an incident loses that shard's full exposure. Identical
// (decision, params, config) inputs give bit-identical results.
SimResult simulate(const ExchangeDecision& decision, const MarketParams& params,
                   const SimConfig& config);

// Analytic expected total daily loss of the sharded process. Algebraically
// independent of the shard count; serves as a cross-check that sharding
// preserves the unsharded expected risk cost.
double expected_total_loss_sharded(const ExchangeDecision& decision, const MarketParams& params,
                                   std::int64_t shards);

}  // namespace exsec
