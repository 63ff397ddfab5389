#include "exsec/optimize.hpp"

#include <cmath>

#include "exsec/errors.hpp"
#include "exsec/model.hpp"

namespace exsec {

namespace {

// Optimal investment per unit of volume; also the fee premium that prices
// the marginal risk of extra volume.
double risk_premium_rate(const MarketParams& params) {
  return std::sqrt(params.attack_probability_constant * params.risk_exposure_constant /
                   params.market_volume);
}

}  // namespace

double optimal_investment(double volume, const MarketParams& params) {
  if (!(volume >= 0.0)) throw domain_error("volume must be >= 0");
  return volume * risk_premium_rate(params);
}

double optimal_fee_security_blind(const MarketParams& params) {
  return params.big_exchange_fee / 2.0;
}

double optimal_fee_security_aware(const MarketParams& params) {
  const double fee = params.big_exchange_fee / 2.0 + risk_premium_rate(params);
  if (fee > params.big_exchange_fee)
    throw infeasible_error(
        "risk dominates market: risk-adjusted fee would exceed the big-exchange fee");
  return fee;
}

OptimalDecision optimal_decision(const MarketParams& params, FeeMode mode) {
  OptimalDecision out{};
  out.mode = mode;
  out.fee_rate = mode == FeeMode::security_aware ? optimal_fee_security_aware(params)
                                                 : optimal_fee_security_blind(params);
  out.volume = anticipated_volume(out.fee_rate, params);
  out.investment = optimal_investment(out.volume, params);
  out.expected_profit = out.volume * (out.fee_rate - 2.0 * risk_premium_rate(params));
  return out;
}

OptimalDecision grid_search_oracle(const MarketParams& params, int fee_steps,
                                   InvestmentRange investment_range, int investment_steps) {
  if (fee_steps < 3 || investment_steps < 3)
    throw domain_error("grid search needs at least 3 steps per axis");
  if (!(investment_range.lo > 0.0) || !(investment_range.lo < investment_range.hi) ||
      !std::isfinite(investment_range.hi))
    throw domain_error("investment range must satisfy 0 < lo < hi");

  const double fee_hi = params.big_exchange_fee;
  const double log_lo = std::log(investment_range.lo);
  const double log_span = std::log(investment_range.hi) - log_lo;

  OptimalDecision best{};
  best.mode = FeeMode::security_aware;
  bool have_best = false;
  for (int i = 0; i < fee_steps; ++i) {
    const double fee =
        i == fee_steps - 1 ? fee_hi : fee_hi * static_cast<double>(i) / (fee_steps - 1);
    for (int j = 0; j < investment_steps; ++j) {
      const double investment =
          j == 0 ? investment_range.lo
                 : (j == investment_steps - 1
                        ? investment_range.hi
                        : std::exp(log_lo + log_span * static_cast<double>(j) /
                                                (investment_steps - 1)));
      const ProfitBreakdown b = expected_profit({fee, investment}, params);
      // Strict improvement keeps the first maximizer found, which is the
      // smallest fee and then the smallest investment by loop order.
      if (!have_best || b.expected_profit > best.expected_profit) {
        have_best = true;
        best.fee_rate = fee;
        best.investment = investment;
        best.volume = b.volume;
        best.expected_profit = b.expected_profit;
      }
    }
  }
  return best;
}

}  // namespace exsec
