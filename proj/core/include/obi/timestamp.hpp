#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace obi {

using UtcTime = std::chrono::sys_seconds;

/// Parses `YYYY-MM-DD`, `YYYY-MM-DDTHH:MM[:SS[.frac]]` with an optional `Z`
/// or `+HH:MM`/`-HH:MM` offset (space also accepted as the date/time
/// separator). A missing offset is read as UTC. Fractional seconds are
/// truncated.
std::optional<UtcTime> parse_iso8601(std::string_view text);

/// `YYYY-MM-DDTHH:MM:SSZ`
std::string format_utc(UtcTime t);

/// Normalizes any accepted ISO-8601 string to `format_utc` form.
std::optional<std::string> normalize_iso8601(std::string_view text);

} // namespace obi
