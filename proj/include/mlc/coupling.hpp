#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlc/activity.hpp"
#include "mlc/civil_time.hpp"
#include "mlc/rational.hpp"

namespace mlc {

/// Sliding window over a pair's relevant active days. The stride is fixed
/// at one day.
struct WindowConfig {
  std::uint32_t n = 30;
};

struct SeriesPoint {
  std::uint32_t end_day_index = 0;  // calendar day index of the window's last entry
  CivilDate end_date;
  std::uint32_t co_days = 0;  // days in the window with both services updated
  std::uint32_t mu_days = 0;
  std::uint32_t nu_days = 0;
  Rational coupling;                          // co_days / n
  std::optional<Rational> p_nu_given_mu;      // co_days / mu_days, absent when mu_days = 0
  std::optional<Rational> p_mu_given_nu;      // co_days / nu_days, absent when nu_days = 0

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Per-window coupling value plus both conditional tracks for one pair.
/// Holds max(0, R - n + 1) points for a sequence of R relevant days.
struct PairSeries {
  std::string mu;
  std::string nu;
  std::uint32_t n = 0;
  std::vector<SeriesPoint> points;
  std::size_t undefined_conditionals = 0;  // diagnostics: absent track values

  friend bool operator==(const PairSeries&, const PairSeries&) = default;
};

/// Computes the full series in one pass with running window counters.
/// Window dates come from `cal`; `seq` must have been built from it.
PairSeries coupling_series(const ActivityCalendar& cal, const PairDaySequence& seq,
                           WindowConfig w);

/// Total relevant days on which both services were updated.
std::size_t historical_cochange(const PairDaySequence& seq);

/// The prior-work rule: coupled iff co-changed strictly more than `limit`
/// times over the whole history.
bool baseline_coupled(std::size_t cochange_count, std::size_t limit = 5);

enum class PairState { Decoupled, Coupled };

std::string_view to_string(PairState s);

struct StatePoint {
  std::uint32_t end_day_index = 0;
  CivilDate end_date;
  PairState state = PairState::Decoupled;

  friend bool operator==(const StatePoint&, const StatePoint&) = default;
};

/// Hysteresis over the coupling track: starts Decoupled, couples at any
/// window with coupling >= threshold, and decouples only after `patience`
/// consecutive windows below it. One state per series point.
struct CouplingState {
  double threshold = 0.5;
  std::uint32_t patience = 5;
  std::vector<StatePoint> timeline;
};

CouplingState coupling_state(const PairSeries& series, double threshold, std::uint32_t patience);

/// Same machine on plain values (used when the series was re-read from CSV).
std::vector<PairState> state_timeline(const std::vector<double>& couplings, double threshold,
                                      std::uint32_t patience);

}  // namespace mlc
