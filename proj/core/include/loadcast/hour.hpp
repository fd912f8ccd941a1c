#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace loadcast {

/// A UTC timestamp truncated to the hour. All series indexing is based on it.
using UtcHour = std::chrono::sys_time<std::chrono::hours>;
using UtcSeconds = std::chrono::sys_seconds;

struct CivilHour {
    int year;
    int month; // 1..12
    int day;   // 1..31
    int hour;  // 0..23
};

UtcHour floor_to_hour(UtcSeconds t);
UtcHour make_hour(int year, int month, int day, int hour);
CivilHour civil(UtcHour t);

bool is_leap_year(int year);
int hours_in_year(int year); // 8784 for leap years, 8760 otherwise
UtcHour year_begin(int year);

int year_of(UtcHour t);
int month_of(UtcHour t);    // 1..12
int day_of_year(UtcHour t); // 1..366
int day_of_week(UtcHour t); // Monday = 0 .. Sunday = 6
int hour_of_day(UtcHour t); // 0..23

std::string format_hour(UtcHour t);       // "2021-06-01T12:00Z"
std::string format_seconds(UtcSeconds t); // "2021-06-01T12:34:56Z"

/// Parses "YYYY-MM-DD HH:MM[:SS]" or "YYYY-MM-DDTHH:MM[:SS][Z]" into seconds
/// since the epoch with no zone attached; the caller decides whether the
/// wall time is UTC or local.
std::optional<std::int64_t> parse_civil_seconds(std::string_view text);

/// Parses a timestamp that must fall exactly on an hour boundary.
std::optional<UtcHour> parse_hour(std::string_view text);

} // namespace loadcast
