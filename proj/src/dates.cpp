#include "etfsim/dates.hpp"

#include <chrono>
#include <cstdio>

#include "etfsim/errors.hpp"

namespace etfsim {

namespace chr = std::chrono;

namespace {

chr::year_month_day to_ymd(std::int32_t serial) {
    return chr::year_month_day{chr::sys_days{chr::days{serial}}};
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
    const chr::year_month_day ymd{chr::year{year}, chr::month{month}, chr::day{day}};
    if (!ymd.ok()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "invalid calendar date %04d-%02u-%02u", year, month, day);
        throw Error(buf);
    }
    return from_serial(static_cast<std::int32_t>(chr::sys_days{ymd}.time_since_epoch().count()));
}

Date Date::from_serial(std::int32_t days_since_epoch) {
    Date d;
    d.serial_ = days_since_epoch;
    return d;
}

Date Date::parse(std::string_view iso) {
    int y = 0;
    unsigned m = 0, d = 0;
    char sep1 = 0, sep2 = 0;
    int consumed = 0;
    const std::string s(iso);
    if (std::sscanf(s.c_str(), "%d%c%u%c%u%n", &y, &sep1, &m, &sep2, &d, &consumed) != 5 ||
        sep1 != '-' || sep2 != '-' || static_cast<size_t>(consumed) != s.size()) {
        throw Error("malformed date '" + s + "', expected YYYY-MM-DD");
    }
    return from_ymd(y, m, d);
}

std::string Date::to_string() const {
    const auto ymd = to_ymd(serial_);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

int Date::year() const { return static_cast<int>(to_ymd(serial_).year()); }
unsigned Date::month() const { return static_cast<unsigned>(to_ymd(serial_).month()); }
unsigned Date::day() const { return static_cast<unsigned>(to_ymd(serial_).day()); }

Date Date::add_months(int n) const {
    auto ymd = to_ymd(serial_);
    ymd += chr::months{n};
    if (!ymd.ok()) {
        ymd = ymd.year() / ymd.month() / chr::last;
    }
    return from_serial(static_cast<std::int32_t>(chr::sys_days{ymd}.time_since_epoch().count()));
}

Date Date::month_start() const {
    const auto ymd = to_ymd(serial_);
    return from_serial(static_cast<std::int32_t>(
        chr::sys_days{ymd.year() / ymd.month() / chr::day{1}}.time_since_epoch().count()));
}

}  // namespace etfsim
