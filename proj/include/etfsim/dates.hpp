#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace etfsim {

/// Calendar date (UTC), stored as days since 1970-01-01.
///
/// All market data is daily; intraday timestamps only appear on trade
/// fills and never cross into the calendar domain.
class Date {
public:
    Date() = default;

    static Date from_ymd(int year, unsigned month, unsigned day);
    static Date from_serial(std::int32_t days_since_epoch);

    /// Parses "YYYY-MM-DD". Throws Error on malformed or invalid dates.
    static Date parse(std::string_view iso);

    std::string to_string() const;

    std::int32_t serial() const { return serial_; }
    int year() const;
    unsigned month() const;
    unsigned day() const;

    Date add_days(int n) const { return from_serial(serial_ + n); }

    /// Calendar-aware month shift; the day is clamped to the target
    /// month's length (e.g. Jan 31 + 1 month = Feb 28/29).
    Date add_months(int n) const;

    /// First day of this date's calendar month.
    Date month_start() const;

    auto operator<=>(const Date&) const = default;

private:
    std::int32_t serial_{0};
};

/// Whole days from a to b (positive when b is later).
inline int days_between(Date a, Date b) { return b.serial() - a.serial(); }

}  // namespace etfsim
