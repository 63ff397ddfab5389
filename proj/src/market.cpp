#include "exsec/market.hpp"

#include <cmath>

#include "exsec/errors.hpp"

namespace exsec {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw domain_error(message);
}

}  // namespace

MarketParams::MarketParams(double market_volume_, double big_exchange_volume_,
                           double big_exchange_fee_, double fee_sensitive_fraction_,
                           double attack_probability_constant_, double risk_exposure_constant_)
    : market_volume(market_volume_),
      big_exchange_volume(big_exchange_volume_),
      big_exchange_fee(big_exchange_fee_),
      fee_sensitive_fraction(fee_sensitive_fraction_),
      attack_probability_constant(attack_probability_constant_),
      risk_exposure_constant(risk_exposure_constant_) {
  require(std::isfinite(market_volume) && std::isfinite(big_exchange_volume) &&
              std::isfinite(big_exchange_fee) && std::isfinite(fee_sensitive_fraction) &&
              std::isfinite(attack_probability_constant) && std::isfinite(risk_exposure_constant),
          "market parameters must all be finite");
  require(market_volume > 0.0, "market_volume must be > 0");
  require(big_exchange_volume > 0.0, "big_exchange_volume must be > 0");
  require(big_exchange_volume <= market_volume,
          "big_exchange_volume must not exceed market_volume");
  require(big_exchange_fee > 0.0 && big_exchange_fee < 1.0,
          "big_exchange_fee must lie in (0, 1)");
  require(fee_sensitive_fraction >= 0.0 && fee_sensitive_fraction <= 1.0,
          "fee_sensitive_fraction must lie in [0, 1]");
  require(attack_probability_constant >= 0.0, "attack_probability_constant must be >= 0");
  require(risk_exposure_constant >= 0.0, "risk_exposure_constant must be >= 0");
  // Largest volume the model can assign is fee_sensitive_fraction * big
  // volume; the attack probability there must not exceed 1.
  const double max_probability =
      attack_probability_constant * (fee_sensitive_fraction * big_exchange_volume) / market_volume;
  require(max_probability <= 1.0,
          "attack probability would exceed 1 at maximal anticipated volume");
}

void validate_decision(const ExchangeDecision& decision, const MarketParams& params) {
  if (!(decision.fee_rate >= 0.0)) throw domain_error("fee_rate must be >= 0");
  if (!(decision.fee_rate <= params.big_exchange_fee))
    throw domain_error("fee exceeds big-exchange fee");
  if (!std::isfinite(decision.investment) || !(decision.investment >= 0.0))
    throw domain_error("investment must be finite and >= 0");
}

}  // namespace exsec
