#pragma once

#include <cstdint>
#include <string>

namespace exsec {

// Proleptic Gregorian calendar date.
struct Date {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..month length

  friend bool operator==(const Date&, const Date&) = default;
};

bool is_valid_date(const Date& date);

// Civil days since 1970-01-01; valid dates only.
std::int64_t days_from_epoch(const Date& date);

// Strict "YYYY-MM-DD"; throws domain_error on malformed or impossible dates.
Date parse_iso_date(const std::string& text);

std::string format_iso_date(const Date& date);

inline bool operator<(const Date& a, const Date& b) {
  return days_from_epoch(a) < days_from_epoch(b);
}
inline bool operator<=(const Date& a, const Date& b) {
  return days_from_epoch(a) <= days_from_epoch(b);
}

}  // namespace exsec
