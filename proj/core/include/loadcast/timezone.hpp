#pragma once

#include "loadcast/error.hpp"
#include "loadcast/hour.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace loadcast {

/// A local wall time that does not exist in a zone (spring-forward gap).
/// Callers treat the offending row as malformed rather than aborting.
class NonexistentLocalTime : public InputError {
public:
    explicit NonexistentLocalTime(const std::string& msg) : InputError(msg) {}
};

/// UTC-offset rules for one zone. Built either from a fixed offset or from a
/// TZif file in the system zoneinfo database ($TZDIR, /usr/share/zoneinfo).
///
/// Instants past the last recorded transition reuse the final offset; the
/// database ships explicit transitions well past the range of any demand
/// data this pipeline handles.
class Timezone {
public:
    /// Accepts "UTC", "Z", "+HH:MM", "-HH:MM", "+HHMM", "+HH", or an IANA
    /// zone name. Throws InputError when the name cannot be resolved.
    static Timezone resolve(const std::string& name);

    static Timezone utc();
    static Timezone fixed_offset(std::chrono::seconds offset, std::string name = "");

    const std::string& name() const { return name_; }

    std::chrono::seconds offset_at(UtcSeconds utc) const;

    /// Converts a naive wall-clock time (seconds since epoch, read as local)
    /// to UTC. Ambiguous times (DST fold) resolve to the earliest matching
    /// UTC instant; nonexistent times throw NonexistentLocalTime.
    UtcSeconds to_utc(std::int64_t naive_local_seconds) const;

private:
    struct Interval {
        std::int64_t utc_start; // inclusive; first entry is INT64_MIN
        std::int32_t offset;    // seconds east of UTC
    };

    Timezone() = default;

    std::string name_;
    std::vector<Interval> intervals_;
};

} // namespace loadcast
