#include "loadcast/hour.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace loadcast {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(UtcHour t) {
    return chr::year_month_day{chr::floor<chr::days>(t)};
}

std::optional<int> parse_int_field(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

} // namespace

UtcHour floor_to_hour(UtcSeconds t) {
    return chr::floor<chr::hours>(t);
}

UtcHour make_hour(int year, int month, int day, int hour) {
    chr::year_month_day ymd{chr::year{year}, chr::month{static_cast<unsigned>(month)},
                            chr::day{static_cast<unsigned>(day)}};
    return chr::sys_days{ymd} + chr::hours{hour};
}

CivilHour civil(UtcHour t) {
    auto days = chr::floor<chr::days>(t);
    chr::year_month_day ymd{days};
    auto h = chr::duration_cast<chr::hours>(t - days).count();
    return CivilHour{int(ymd.year()), int(unsigned(ymd.month())), int(unsigned(ymd.day())),
                     static_cast<int>(h)};
}

bool is_leap_year(int year) {
    return chr::year{year}.is_leap();
}

int hours_in_year(int year) {
    return is_leap_year(year) ? 8784 : 8760;
}

UtcHour year_begin(int year) {
    return make_hour(year, 1, 1, 0);
}

int year_of(UtcHour t) {
    return int(to_ymd(t).year());
}

int month_of(UtcHour t) {
    return int(unsigned(to_ymd(t).month()));
}

int day_of_year(UtcHour t) {
    auto days = chr::floor<chr::days>(t);
    chr::year_month_day ymd{days};
    auto jan1 = chr::sys_days{chr::year_month_day{ymd.year(), chr::January, chr::day{1}}};
    return static_cast<int>((days - jan1).count()) + 1;
}

int day_of_week(UtcHour t) {
    chr::weekday wd{chr::floor<chr::days>(t)};
    return static_cast<int>(wd.iso_encoding()) - 1; // ISO: Monday = 1
}

int hour_of_day(UtcHour t) {
    auto days = chr::floor<chr::days>(t);
    return static_cast<int>(chr::duration_cast<chr::hours>(t - days).count());
}

std::string format_hour(UtcHour t) {
    CivilHour c = civil(t);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:00Z", c.year, c.month, c.day, c.hour);
    return buf;
}

std::string format_seconds(UtcSeconds t) {
    auto h = chr::floor<chr::hours>(t);
    auto rem = chr::duration_cast<chr::seconds>(t - h).count();
    CivilHour c = civil(h);
    char buf[28];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", c.year, c.month, c.day,
                  c.hour, static_cast<int>(rem / 60), static_cast<int>(rem % 60));
    return buf;
}

std::optional<std::int64_t> parse_civil_seconds(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (!text.empty() && (text.back() == 'Z' || text.back() == 'z')) {
        text.remove_suffix(1);
    }
    if (text.size() < 16 || text[4] != '-' || text[7] != '-' ||
        (text[10] != ' ' && text[10] != 'T') || text[13] != ':') {
        return std::nullopt;
    }
    auto year = parse_int_field(text.substr(0, 4));
    auto month = parse_int_field(text.substr(5, 2));
    auto day = parse_int_field(text.substr(8, 2));
    auto hour = parse_int_field(text.substr(11, 2));
    auto minute = parse_int_field(text.substr(14, 2));
    std::optional<int> second = 0;
    if (text.size() > 16) {
        if (text.size() != 19 || text[16] != ':') {
            return std::nullopt;
        }
        second = parse_int_field(text.substr(17, 2));
    }
    if (!year || !month || !day || !hour || !minute || !second) {
        return std::nullopt;
    }
    if (*month < 1 || *month > 12 || *day < 1 || *hour > 23 || *minute > 59 || *second > 59 ||
        *hour < 0 || *minute < 0 || *second < 0) {
        return std::nullopt;
    }
    std::chrono::year_month_day ymd{std::chrono::year{*year},
                                    std::chrono::month{static_cast<unsigned>(*month)},
                                    std::chrono::day{static_cast<unsigned>(*day)}};
    if (!ymd.ok()) {
        return std::nullopt;
    }
    std::chrono::sys_days d{ymd};
    return d.time_since_epoch().count() * std::int64_t{86400} + *hour * 3600 + *minute * 60 +
           *second;
}

std::optional<UtcHour> parse_hour(std::string_view text) {
    auto secs = parse_civil_seconds(text);
    if (!secs || *secs % 3600 != 0) {
        return std::nullopt;
    }
    return UtcHour{std::chrono::hours{*secs / 3600}};
}

} // namespace loadcast
