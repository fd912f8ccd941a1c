#include "loadcast/timezone.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>

namespace loadcast {

namespace {

struct TzifHeader {
    char version;
    std::uint32_t isutcnt, isstdcnt, leapcnt, timecnt, typecnt, charcnt;
};

class ByteCursor {
public:
    ByteCursor(const std::string& data, const std::string& label) : data_(data), label_(label) {}

    void skip(std::size_t n) {
        require(n);
        pos_ += n;
    }

    std::uint8_t u8() {
        require(1);
        return static_cast<std::uint8_t>(data_[pos_++]);
    }

    std::uint32_t u32be() {
        require(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v = (v << 8) | static_cast<std::uint8_t>(data_[pos_++]);
        }
        return v;
    }

    std::int32_t i32be() { return static_cast<std::int32_t>(u32be()); }

    std::int64_t i64be() {
        require(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v = (v << 8) | static_cast<std::uint8_t>(data_[pos_++]);
        }
        return static_cast<std::int64_t>(v);
    }

    std::string bytes(std::size_t n) {
        require(n);
        std::string s = data_.substr(pos_, n);
        pos_ += n;
        return s;
    }

private:
    void require(std::size_t n) {
        if (pos_ + n > data_.size()) {
            throw InputError("timezone '" + label_ + "': truncated TZif file");
        }
    }

    const std::string& data_;
    std::string label_;
    std::size_t pos_ = 0;
};

TzifHeader read_header(ByteCursor& cur, const std::string& label) {
    if (cur.bytes(4) != "TZif") {
        throw InputError("timezone '" + label + "': not a TZif file");
    }
    TzifHeader h{};
    h.version = static_cast<char>(cur.u8());
    cur.skip(15);
    h.isutcnt = cur.u32be();
    h.isstdcnt = cur.u32be();
    h.leapcnt = cur.u32be();
    h.timecnt = cur.u32be();
    h.typecnt = cur.u32be();
    h.charcnt = cur.u32be();
    return h;
}

struct TtInfo {
    std::int32_t utoff;
    bool isdst;
};

struct ZoneData {
    std::vector<std::int64_t> transitions;
    std::vector<std::uint8_t> type_index;
    std::vector<TtInfo> types;
};

ZoneData read_data_block(ByteCursor& cur, const TzifHeader& h, bool wide,
                         const std::string& label) {
    ZoneData z;
    z.transitions.reserve(h.timecnt);
    for (std::uint32_t i = 0; i < h.timecnt; ++i) {
        z.transitions.push_back(wide ? cur.i64be() : std::int64_t{cur.i32be()});
    }
    z.type_index.reserve(h.timecnt);
    for (std::uint32_t i = 0; i < h.timecnt; ++i) {
        std::uint8_t idx = cur.u8();
        if (idx >= h.typecnt) {
            throw InputError("timezone '" + label + "': transition type out of range");
        }
        z.type_index.push_back(idx);
    }
    z.types.reserve(h.typecnt);
    for (std::uint32_t i = 0; i < h.typecnt; ++i) {
        std::int32_t utoff = cur.i32be();
        bool isdst = cur.u8() != 0;
        cur.u8(); // designation index, unused
        z.types.push_back(TtInfo{utoff, isdst});
    }
    cur.skip(h.charcnt);
    cur.skip(h.leapcnt * (wide ? 12 : 8));
    cur.skip(h.isstdcnt);
    cur.skip(h.isutcnt);
    return z;
}

ZoneData parse_tzif(const std::string& data, const std::string& label) {
    ByteCursor cur(data, label);
    TzifHeader h1 = read_header(cur, label);
    ZoneData z = read_data_block(cur, h1, /*wide=*/false, label);
    if (h1.version >= '2') {
        TzifHeader h2 = read_header(cur, label);
        z = read_data_block(cur, h2, /*wide=*/true, label);
        // Footer (POSIX TZ string for instants past the last transition) is
        // intentionally ignored; see class comment.
    }
    if (z.types.empty()) {
        throw InputError("timezone '" + label + "': no time types");
    }
    return z;
}

std::optional<std::chrono::seconds> parse_fixed_offset(const std::string& name) {
    if (name == "UTC" || name == "Z" || name == "utc") {
        return std::chrono::seconds{0};
    }
    if (name.size() < 2 || (name[0] != '+' && name[0] != '-')) {
        return std::nullopt;
    }
    int sign = name[0] == '-' ? -1 : 1;
    std::string digits = name.substr(1);
    std::string hh, mm = "00";
    auto colon = digits.find(':');
    if (colon != std::string::npos) {
        hh = digits.substr(0, colon);
        mm = digits.substr(colon + 1);
    } else if (digits.size() <= 2) {
        hh = digits;
    } else if (digits.size() == 4) {
        hh = digits.substr(0, 2);
        mm = digits.substr(2);
    } else {
        return std::nullopt;
    }
    auto to_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty() || s.size() > 2) {
            return std::nullopt;
        }
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) {
            return std::nullopt;
        }
        return v;
    };
    auto h = to_int(hh);
    auto m = to_int(mm);
    if (!h || !m || *h > 18 || *m > 59) {
        return std::nullopt;
    }
    return std::chrono::seconds{sign * (*h * 3600 + *m * 60)};
}

std::filesystem::path zoneinfo_root() {
    if (const char* env = std::getenv("TZDIR"); env && *env) {
        return env;
    }
    return "/usr/share/zoneinfo";
}

bool valid_zone_name(const std::string& name) {
    if (name.empty() || name.front() == '/' || name.find("..") != std::string::npos) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '/' || c == '_' || c == '-' ||
               c == '+';
    });
}

} // namespace

Timezone Timezone::utc() {
    return fixed_offset(std::chrono::seconds{0}, "UTC");
}

Timezone Timezone::fixed_offset(std::chrono::seconds offset, std::string name) {
    Timezone tz;
    tz.name_ = name.empty() ? ("fixed" + std::to_string(offset.count())) : std::move(name);
    tz.intervals_.push_back(
        Interval{std::numeric_limits<std::int64_t>::min(), static_cast<std::int32_t>(offset.count())});
    return tz;
}

Timezone Timezone::resolve(const std::string& name) {
    if (auto fixed = parse_fixed_offset(name)) {
        return fixed_offset(*fixed, name);
    }
    if (!valid_zone_name(name)) {
        throw InputError("unresolvable timezone '" + name + "'");
    }
    auto path = zoneinfo_root() / name;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("unresolvable timezone '" + name + "' (no zoneinfo entry at " +
                         path.string() + ")");
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ZoneData z = parse_tzif(data, name);

    Timezone tz;
    tz.name_ = name;
    // Offset before the first transition: the first standard-time type, in
    // keeping with the usual reading of TZif data.
    std::int32_t initial = z.types.front().utoff;
    for (const TtInfo& t : z.types) {
        if (!t.isdst) {
            initial = t.utoff;
            break;
        }
    }
    tz.intervals_.push_back(Interval{std::numeric_limits<std::int64_t>::min(), initial});
    for (std::size_t i = 0; i < z.transitions.size(); ++i) {
        tz.intervals_.push_back(
            Interval{z.transitions[i], z.types[z.type_index[i]].utoff});
    }
    return tz;
}

std::chrono::seconds Timezone::offset_at(UtcSeconds utc) const {
    std::int64_t u = utc.time_since_epoch().count();
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), u,
                               [](std::int64_t v, const Interval& iv) { return v < iv.utc_start; });
    --it;
    return std::chrono::seconds{it->offset};
}

UtcSeconds Timezone::to_utc(std::int64_t naive_local_seconds) const {
    const std::int64_t kMaxOffset = 24 * 3600;
    // Candidate intervals lie near the local instant read as UTC.
    auto hi = std::upper_bound(
        intervals_.begin(), intervals_.end(), naive_local_seconds + kMaxOffset,
        [](std::int64_t v, const Interval& iv) { return v < iv.utc_start; });
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    bool found = false;
    for (auto it = intervals_.begin(); it != hi; ++it) {
        std::int64_t start = it->utc_start;
        std::int64_t end = (it + 1 != intervals_.end()) ? (it + 1)->utc_start
                                                        : std::numeric_limits<std::int64_t>::max();
        if (start != std::numeric_limits<std::int64_t>::min() &&
            start > naive_local_seconds + kMaxOffset) {
            break;
        }
        if (end != std::numeric_limits<std::int64_t>::max() &&
            end < naive_local_seconds - kMaxOffset) {
            continue;
        }
        std::int64_t u = naive_local_seconds - it->offset;
        if (u >= start && u < end) {
            found = true;
            best = std::min(best, u);
        }
    }
    if (!found) {
        throw NonexistentLocalTime("local time does not exist in zone '" + name_ + "'");
    }
    return UtcSeconds{std::chrono::seconds{best}};
}

} // namespace loadcast
