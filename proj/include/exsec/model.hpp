#pragma once

#include "exsec/market.hpp"

namespace exsec {

// Daily volume a small exchange attracts at fee `fee_rate`: the fee-sensitive
// slice of the big exchange's users, linear in the undercut. Zero at
// fee_rate == big_exchange_fee, maximal (fraction * big volume) at zero fee.
double anticipated_volume(double fee_rate, const MarketParams& params);

// Daily breach probability of an exchange trading `volume`, proportional to
// its market share. A result above 1 is an error, never a clamp.
double attack_probability(double volume, const MarketParams& params);

// Funds lost if a breach happens: daily volume divided by investment, scaled
// by the per-instance cost constant. Zero investment with positive volume at
// risk is an error ("unbounded exposure").
double loss_exposure(double volume, double investment, const MarketParams& params);

// Expected daily profit and all of its terms at the given decision.
ProfitBreakdown expected_profit(const ExchangeDecision& decision, const MarketParams& params);

// One stochastic day: the full loss exposure is lost iff `uniform_draw` falls
// below the attack probability. `uniform_draw` must lie in [0, 1).
double profit_sample(const ExchangeDecision& decision, const MarketParams& params,
                     double uniform_draw);

}  // namespace exsec
