#pragma once

#include "exsec/market.hpp"

namespace exsec {

enum class FeeMode {
  security_aware,  // fee carries the risk premium of the volume it attracts
  security_blind,  // fee maximizes raw fee revenue, ignoring risk
};

struct OptimalDecision {
  double fee_rate;
  double investment;
  double volume;
  double expected_profit;
  FeeMode mode;
};

// Best-response security investment for a given daily volume:
// volume * sqrt(attack_constant * risk_constant / market_volume).
double optimal_investment(double volume, const MarketParams& params);

// Half the big exchange's fee.
double optimal_fee_security_blind(const MarketParams& params);

// Half the big exchange's fee plus the risk premium
// sqrt(attack_constant * risk_constant / market_volume). Throws
// infeasible_error when the premium pushes the fee past the big exchange's
// rate, i.e. the entrant cannot profitably undercut.
double optimal_fee_security_aware(const MarketParams& params);

// Jointly optimal fee, volume, investment and expected profit for the mode.
OptimalDecision optimal_decision(const MarketParams& params, FeeMode mode);

struct InvestmentRange {
  double lo;
  double hi;
};

// Exhaustive lattice maximization of expected profit, used as an independent
// check on the closed forms above. Fee axis is linear on
// [0, big_exchange_fee]; investment axis is log-spaced on [lo, hi]. Ties
// break toward the smaller fee, then the smaller investment.
OptimalDecision grid_search_oracle(const MarketParams& params, int fee_steps,
                                   InvestmentRange investment_range, int investment_steps);

}  // namespace exsec
