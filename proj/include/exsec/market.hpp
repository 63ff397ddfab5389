#pragma once

namespace exsec {

// Environment a small exchange operates in. All volumes and currency amounts
// are per day, in one resolving currency; fee rates are dimensionless.
// The constructor validates every bound and throws domain_error, so an
// instance in hand is always usable.
struct MarketParams {
  double market_volume;                // total daily market volume, > 0
  double big_exchange_volume;          // dominant exchange's daily volume, (0, market_volume]
  double big_exchange_fee;             // dominant exchange's fee rate, (0, 1)
  double fee_sensitive_fraction;       // share of its users who would switch over fees, [0, 1]
  double attack_probability_constant;  // breach probability per unit of market share, >= 0
  double risk_exposure_constant;       // daily cost of one independent exchange instance, >= 0

  MarketParams(double market_volume, double big_exchange_volume, double big_exchange_fee,
               double fee_sensitive_fraction, double attack_probability_constant,
               double risk_exposure_constant);
};

// The exchange's two choice variables.
struct ExchangeDecision {
  double fee_rate;    // must lie in [0, params.big_exchange_fee]
  double investment;  // daily security spend, >= 0
};

// Throws domain_error when the decision violates its bounds against params.
void validate_decision(const ExchangeDecision& decision, const MarketParams& params);

// Terms of the expected daily profit. Fields are mutually consistent:
// revenue = fee * volume, expected_risk_cost = attack_probability *
// loss_if_breached, expected_profit = revenue - investment_cost -
// expected_risk_cost.
struct ProfitBreakdown {
  double volume;
  double revenue;
  double investment_cost;
  double attack_probability;
  double loss_if_breached;
  double expected_risk_cost;
  double expected_profit;
};

}  // namespace exsec
