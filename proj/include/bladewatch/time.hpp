#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bladewatch {

/// Seconds since 1970-01-01T00:00:00Z.
using Timestamp = std::int64_t;

inline constexpr Timestamp kSecondsPerDay = 86400;

/// Parses an ISO 8601 instant: `YYYY-MM-DD`, optionally followed by `T` or a
/// space and `HH:MM[:SS[.fff]]`, optionally followed by `Z` or `+HH:MM`/`-HH:MM`.
/// Fractional seconds are truncated. Instants without an offset are UTC.
std::optional<Timestamp> parse_iso8601(std::string_view text);

/// Formats as `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_iso8601(Timestamp t);

}  // namespace bladewatch
