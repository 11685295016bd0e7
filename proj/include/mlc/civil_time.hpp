#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mlc {

/// A UTC calendar date. All day bucketing in the pipeline happens on these.
struct CivilDate {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  friend bool operator==(const CivilDate&, const CivilDate&) = default;
  friend auto operator<=>(const CivilDate&, const CivilDate&) = default;
};

/// Days since 1970-01-01 (may be negative). Howard Hinnant's algorithm.
std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t z);

std::string to_string(const CivilDate& d);                     // "YYYY-MM-DD"
std::optional<CivilDate> parse_date(std::string_view text);    // strict

/// An instant, stored as seconds since the Unix epoch in UTC.
struct Timestamp {
  std::int64_t epoch_seconds = 0;

  friend bool operator==(const Timestamp&, const Timestamp&) = default;
  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

/// Parses "YYYY-MM-DDTHH:MM:SS" followed by "Z", "+HH:MM", "-HH:MM" or
/// "+HHMM". Fractional seconds are accepted and discarded. The offset is
/// folded into the stored UTC instant.
std::optional<Timestamp> parse_iso8601(std::string_view text);

/// Renders as UTC with an explicit +00:00 offset.
std::string to_iso8601_utc(const Timestamp& t);

/// The UTC calendar date the instant falls on. This is the day-boundary rule
/// for the whole pipeline.
CivilDate utc_date(const Timestamp& t);

}  // namespace mlc
