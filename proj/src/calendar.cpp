#include "exsec/calendar.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "exsec/errors.hpp"

namespace exsec {

namespace {

bool is_leap(int year) {
  return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

int month_length(int year, int month) {
  static constexpr std::array<int, 12> lengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year)) return 29;
  return lengths[static_cast<std::size_t>(month - 1)];
}

int parse_fixed_digits(const std::string& text, std::size_t pos, std::size_t count) {
  int value = 0;
  const char* first = text.data() + pos;
  const auto [ptr, ec] = std::from_chars(first, first + count, value);
  if (ec != std::errc{} || ptr != first + count)
    throw domain_error("invalid ISO date: " + text);
  return value;
}

}  // namespace

bool is_valid_date(const Date& date) {
  return date.month >= 1 && date.month <= 12 && date.day >= 1 &&
         date.day <= month_length(date.year, date.month);
}

std::int64_t days_from_epoch(const Date& date) {
  if (!is_valid_date(date)) throw domain_error("invalid date: " + format_iso_date(date));
  // Days-from-civil conversion over 400-year eras.
  const int y = date.year - (date.month <= 2 ? 1 : 0);
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<std::int64_t>(y - era * 400);
  const std::int64_t doy = (153 * (date.month + (date.month > 2 ? -3 : 9)) + 2) / 5 + date.day - 1;
  const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

Date parse_iso_date(const std::string& text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-')
    throw domain_error("invalid ISO date: " + text);
  Date date{};
  date.year = parse_fixed_digits(text, 0, 4);
  date.month = parse_fixed_digits(text, 5, 2);
  date.day = parse_fixed_digits(text, 8, 2);
  if (!is_valid_date(date)) throw domain_error("invalid ISO date: " + text);
  return date;
}

std::string format_iso_date(const Date& date) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02d", date.year, date.month, date.day);
  return buffer;
}

}  // namespace exsec
