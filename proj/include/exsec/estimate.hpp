#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exsec/calendar.hpp"

namespace exsec {

// One confirmed breach event.
struct BreachRecord {
  std::string exchange_id;
  Date date;
};

// Vendor pricing for running one managed exchange deployment.
struct PricingEntry {
  std::string vendor;
  double upfront_fee = 0.0;             // one-time, amortized over the window
  double recurring_fee = 0.0;           // charged once per recurring period
  double recurring_period_days = 0.0;   // days per recurrence, > 0
  double amortization_window_days = 0.0;  // days the upfront fee is spread over, > 0
};

struct VolumeRecord {
  std::string exchange_id;
  Date date;
  double volume = 0.0;  // currency/day, >= 0
};

// Inclusive date window; an absent bound is unbounded on that side.
struct DateRange {
  std::optional<Date> start;
  std::optional<Date> end;
};

struct MarketEstimate {
  double market_volume = 0.0;            // mean daily total volume
  double big_exchange_volume = 0.0;      // mean daily volume of the largest exchange
  double fee_sensitive_suggestion = 0.0; // median exchange's share of the market
};

// Market-level daily breach rate: events divided by observation days.
double estimate_alpha(std::int64_t breach_count, std::int64_t observation_days);

// Mean daily cost of one managed deployment across vendors, amortizing the
// upfront fee over the window and prorating recurring fees per day.
double estimate_beta(const std::vector<PricingEntry>& entries);

// Volume aggregates over the window. Days without records are absent, not
// zero: the market mean runs over days with any record, each exchange's mean
// over its own present days.
MarketEstimate estimate_market(const std::vector<VolumeRecord>& records, const DateRange& window);

// CSV schemas (headers fixed, ISO-8601 dates, dot-decimal numbers, '\n'
// newlines, no quoting):
//   breaches.csv: exchange_id,date
//   pricing.csv:  vendor,upfront_fee,recurring_fee,recurring_period_days,amortization_window_days
//   volumes.csv:  exchange_id,date,volume
std::vector<BreachRecord> read_breaches_csv(const std::string& path);
std::vector<PricingEntry> read_pricing_csv(const std::string& path);
std::vector<VolumeRecord> read_volumes_csv(const std::string& path);
void write_breaches_csv(const std::vector<BreachRecord>& records, const std::string& path);
void write_pricing_csv(const std::vector<PricingEntry>& entries, const std::string& path);
void write_volumes_csv(const std::vector<VolumeRecord>& records, const std::string& path);

}  // namespace exsec
