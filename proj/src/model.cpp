#include "exsec/model.hpp"

#include <cmath>

#include "exsec/errors.hpp"

namespace exsec {

double anticipated_volume(double fee_rate, const MarketParams& params) {
  if (!(fee_rate >= 0.0)) throw domain_error("fee_rate must be >= 0");
  if (!(fee_rate <= params.big_exchange_fee)) throw domain_error("fee exceeds big-exchange fee");
  return params.fee_sensitive_fraction * params.big_exchange_volume *
         (params.big_exchange_fee - fee_rate) / params.big_exchange_fee;
}

double attack_probability(double volume, const MarketParams& params) {
  if (!(volume >= 0.0)) throw domain_error("volume must be >= 0");
  if (!(volume <= params.market_volume)) throw domain_error("volume exceeds market_volume");
  const double probability = params.attack_probability_constant * volume / params.market_volume;
  if (probability > 1.0) throw domain_error("attack probability exceeds 1");
  return probability;
}

double loss_exposure(double volume, double investment, const MarketParams& params) {
  if (!(volume >= 0.0)) throw domain_error("volume must be >= 0");
  if (!std::isfinite(investment) || !(investment >= 0.0))
    throw domain_error("investment must be finite and >= 0");
  if (params.risk_exposure_constant == 0.0 || volume == 0.0) return 0.0;
  if (investment == 0.0)
    throw domain_error("unbounded exposure: zero investment with positive volume at risk");
  return params.risk_exposure_constant * volume / investment;
}

ProfitBreakdown expected_profit(const ExchangeDecision& decision, const MarketParams& params) {
  validate_decision(decision, params);
  ProfitBreakdown out{};
  out.volume = anticipated_volume(decision.fee_rate, params);
  out.revenue = decision.fee_rate * out.volume;
  out.investment_cost = decision.investment;
  out.attack_probability = attack_probability(out.volume, params);
  if (params.risk_exposure_constant == 0.0 || out.volume == 0.0) {
    out.loss_if_breached = 0.0;
  } else if (decision.investment == 0.0 && params.attack_probability_constant == 0.0) {
    // No attacks means no risk term; the exposure ratio alone is undefined
    // at zero investment, so report no loss rather than failing.
    out.loss_if_breached = 0.0;
  } else {
    out.loss_if_breached = loss_exposure(out.volume, decision.investment, params);
  }
  out.expected_risk_cost = out.attack_probability * out.loss_if_breached;
  out.expected_profit = out.revenue - out.investment_cost - out.expected_risk_cost;
  return out;
}

double profit_sample(const ExchangeDecision& decision, const MarketParams& params,
                     double uniform_draw) {
  if (!(uniform_draw >= 0.0) || !(uniform_draw < 1.0))
    throw domain_error("uniform_draw must lie in [0, 1)");
  const ProfitBreakdown b = expected_profit(decision, params);
  const double incident_free = b.revenue - b.investment_cost;
  return uniform_draw < b.attack_probability ? incident_free - b.loss_if_breached : incident_free;
}

}  // namespace exsec
