#include "exsec/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "exsec/errors.hpp"
#include "text.hpp"

namespace exsec {

namespace {

constexpr const char* kBreachesHeader = "exchange_id,date";
constexpr const char* kPricingHeader =
    "vendor,upfront_fee,recurring_fee,recurring_period_days,amortization_window_days";
constexpr const char* kVolumesHeader = "exchange_id,date,volume";

std::string row_context(const std::string& path, std::size_t line_number) {
  return path + ":" + std::to_string(line_number);
}

// Reads all '\n'-separated data rows after validating the header line.
std::vector<std::string> read_rows(const std::string& path, const char* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw io_error(path + ": empty file, expected header");
  if (std::string(detail::strip_carriage_return(line)) != header)
    throw io_error(path + ": expected header '" + std::string(header) + "'");
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    const auto stripped = detail::strip_carriage_return(line);
    if (stripped.empty()) continue;
    rows.emplace_back(stripped);
  }
  return rows;
}

std::vector<std::string_view> split_row(const std::string& row, std::size_t expected,
                                        const std::string& context) {
  auto fields = detail::split_fields(row);
  if (fields.size() != expected)
    throw io_error(context + ": expected " + std::to_string(expected) + " fields, got " +
                   std::to_string(fields.size()));
  return fields;
}

Date parse_date_field(std::string_view field, const std::string& context) {
  try {
    return parse_iso_date(std::string(field));
  } catch (const domain_error& err) {
    throw io_error(context + ": " + err.what());
  }
}

void validate_pricing_entry(const PricingEntry& entry) {
  if (entry.vendor.empty()) throw domain_error("vendor must be nonempty");
  if (!(entry.upfront_fee >= 0.0) || !(entry.recurring_fee >= 0.0))
    throw domain_error("pricing fees must be >= 0");
  if (!(entry.recurring_period_days > 0.0) || !(entry.amortization_window_days > 0.0))
    throw domain_error("pricing periods must be > 0");
}

bool in_window(const Date& date, const DateRange& window) {
  const std::int64_t day = days_from_epoch(date);
  if (window.start && day < days_from_epoch(*window.start)) return false;
  if (window.end && day > days_from_epoch(*window.end)) return false;
  return true;
}

std::ofstream open_for_writing(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open file for writing: " + path);
  return out;
}

}  // namespace

double estimate_alpha(std::int64_t breach_count, std::int64_t observation_days) {
  if (observation_days < 1) throw domain_error("observation window must cover at least one day");
  if (breach_count < 0) throw domain_error("breach count must be >= 0");
  return static_cast<double>(breach_count) / static_cast<double>(observation_days);
}

double estimate_beta(const std::vector<PricingEntry>& entries) {
  if (entries.empty()) throw domain_error("pricing list is empty");
  double total = 0.0;
  for (const PricingEntry& entry : entries) {
    validate_pricing_entry(entry);
    total += entry.upfront_fee / entry.amortization_window_days +
             entry.recurring_fee / entry.recurring_period_days;
  }
  return total / static_cast<double>(entries.size());
}

MarketEstimate estimate_market(const std::vector<VolumeRecord>& records, const DateRange& window) {
  std::map<std::int64_t, double> daily_totals;
  struct Accumulator {
    double sum = 0.0;
    std::int64_t days = 0;
  };
  std::map<std::string, Accumulator> per_exchange;
  for (const VolumeRecord& record : records) {
    if (record.exchange_id.empty()) throw domain_error("exchange_id must be nonempty");
    if (!(record.volume >= 0.0) || !std::isfinite(record.volume))
      throw domain_error("volume must be finite and >= 0");
    if (!in_window(record.date, window)) continue;
    daily_totals[days_from_epoch(record.date)] += record.volume;
    auto& acc = per_exchange[record.exchange_id];
    acc.sum += record.volume;
    acc.days += 1;
  }
  if (daily_totals.empty()) throw domain_error("no volume records in window");

  MarketEstimate out{};
  double total = 0.0;
  for (const auto& [day, volume] : daily_totals) total += volume;
  out.market_volume = total / static_cast<double>(daily_totals.size());

  std::vector<double> means;
  means.reserve(per_exchange.size());
  for (const auto& [id, acc] : per_exchange)
    means.push_back(acc.sum / static_cast<double>(acc.days));
  out.big_exchange_volume = *std::max_element(means.begin(), means.end());

  std::sort(means.begin(), means.end());
  const std::size_t n = means.size();
  const double median =
      n % 2 == 1 ? means[n / 2] : (means[n / 2 - 1] + means[n / 2]) / 2.0;
  out.fee_sensitive_suggestion = median / out.market_volume;
  return out;
}

std::vector<BreachRecord> read_breaches_csv(const std::string& path) {
  std::vector<BreachRecord> records;
  std::size_t line_number = 1;
  for (const std::string& row : read_rows(path, kBreachesHeader)) {
    ++line_number;
    const std::string context = row_context(path, line_number);
    const auto fields = split_row(row, 2, context);
    if (fields[0].empty()) throw io_error(context + ": exchange_id must be nonempty");
    records.push_back({std::string(fields[0]), parse_date_field(fields[1], context)});
  }
  return records;
}

std::vector<PricingEntry> read_pricing_csv(const std::string& path) {
  std::vector<PricingEntry> entries;
  std::size_t line_number = 1;
  for (const std::string& row : read_rows(path, kPricingHeader)) {
    ++line_number;
    const std::string context = row_context(path, line_number);
    const auto fields = split_row(row, 5, context);
    PricingEntry entry;
    entry.vendor = std::string(fields[0]);
    entry.upfront_fee = detail::parse_double(fields[1], context);
    entry.recurring_fee = detail::parse_double(fields[2], context);
    entry.recurring_period_days = detail::parse_double(fields[3], context);
    entry.amortization_window_days = detail::parse_double(fields[4], context);
    try {
      validate_pricing_entry(entry);
    } catch (const domain_error& err) {
      throw io_error(context + ": " + err.what());
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<VolumeRecord> read_volumes_csv(const std::string& path) {
  std::vector<VolumeRecord> records;
  std::size_t line_number = 1;
  for (const std::string& row : read_rows(path, kVolumesHeader)) {
    ++line_number;
    const std::string context = row_context(path, line_number);
    const auto fields = split_row(row, 3, context);
    if (fields[0].empty()) throw io_error(context + ": exchange_id must be nonempty");
    VolumeRecord record;
    record.exchange_id = std::string(fields[0]);
    record.date = parse_date_field(fields[1], context);
    record.volume = detail::parse_double(fields[2], context);
    if (!(record.volume >= 0.0)) throw io_error(context + ": volume must be >= 0");
    records.push_back(std::move(record));
  }
  return records;
}

void write_breaches_csv(const std::vector<BreachRecord>& records, const std::string& path) {
  auto out = open_for_writing(path);
  out << kBreachesHeader << '\n';
  for (const BreachRecord& record : records)
    out << record.exchange_id << ',' << format_iso_date(record.date) << '\n';
  if (!out) throw io_error("write failed: " + path);
}

void write_pricing_csv(const std::vector<PricingEntry>& entries, const std::string& path) {
  auto out = open_for_writing(path);
  out << kPricingHeader << '\n';
  for (const PricingEntry& entry : entries) {
    validate_pricing_entry(entry);
    out << entry.vendor << ',' << detail::format_double(entry.upfront_fee) << ','
        << detail::format_double(entry.recurring_fee) << ','
        << detail::format_double(entry.recurring_period_days) << ','
        << detail::format_double(entry.amortization_window_days) << '\n';
  }
  if (!out) throw io_error("write failed: " + path);
}

void write_volumes_csv(const std::vector<VolumeRecord>& records, const std::string& path) {
  auto out = open_for_writing(path);
  out << kVolumesHeader << '\n';
  for (const VolumeRecord& record : records)
    out << record.exchange_id << ',' << format_iso_date(record.date) << ','
        << detail::format_double(record.volume) << '\n';
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace exsec
