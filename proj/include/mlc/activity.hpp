#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlc/civil_time.hpp"
#include "mlc/commit.hpp"
#include "mlc/service_map.hpp"

namespace mlc {

/// Project-wide active days (UTC dates with at least one surviving commit),
/// indexed 1..A, and per service the day indices on which it was updated.
/// Every service declared in the map is present in `updates`, possibly with
/// an empty index list.
struct ActivityCalendar {
  std::vector<CivilDate> days;                                   // strictly increasing
  std::map<std::string, std::vector<std::uint32_t>> updates;     // sorted indices

  [[nodiscard]] std::size_t active_day_count() const { return days.size(); }

  friend bool operator==(const ActivityCalendar&, const ActivityCalendar&) = default;
};

/// A service is updated on a day iff some commit on that UTC date changes at
/// least one file resolving to it. Days whose commits touch only unmapped
/// files still count as active days.
ActivityCalendar build_calendar(std::span<const CommitRecord> commits, const ServiceMap& map);

struct PairDayEntry {
  std::uint32_t day_index = 0;  // into ActivityCalendar::days, 1-based
  bool mu_updated = false;
  bool nu_updated = false;

  friend bool operator==(const PairDayEntry&, const PairDayEntry&) = default;
};

/// The relevant active days of one pair: every day where mu or nu was
/// updated, in day order. Days touching neither service are dropped.
struct PairDaySequence {
  std::string mu;
  std::string nu;
  std::vector<PairDayEntry> entries;
};

/// Throws if mu == nu or either service is missing from the calendar.
PairDaySequence relevant_days(const ActivityCalendar& cal, std::string_view mu,
                              std::string_view nu);

}  // namespace mlc
