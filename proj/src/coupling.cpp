#include "mlc/coupling.hpp"

#include <stdexcept>

namespace mlc {

PairSeries coupling_series(const ActivityCalendar& cal, const PairDaySequence& seq,
                           WindowConfig w) {
  if (w.n < 1) throw std::invalid_argument("coupling_series: window length must be >= 1");

  PairSeries series;
  series.mu = seq.mu;
  series.nu = seq.nu;
  series.n = w.n;

  const auto& entries = seq.entries;
  const std::size_t r = entries.size();
  if (r < w.n) return series;  // no full window, empty series

  series.points.reserve(r - w.n + 1);
  std::uint32_t co = 0, mu_days = 0, nu_days = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& e = entries[i];
    co += e.mu_updated && e.nu_updated;
    mu_days += e.mu_updated;
    nu_days += e.nu_updated;
    if (i + 1 < w.n) continue;
    if (i + 1 > w.n) {
      const auto& old = entries[i - w.n];
      co -= old.mu_updated && old.nu_updated;
      mu_days -= old.mu_updated;
      nu_days -= old.nu_updated;
    }
    SeriesPoint p;
    p.end_day_index = e.day_index;
    p.end_date = cal.days.at(e.day_index - 1);
    p.co_days = co;
    p.mu_days = mu_days;
    p.nu_days = nu_days;
    p.coupling = Rational(co, w.n);
    if (mu_days > 0)
      p.p_nu_given_mu = Rational(co, mu_days);
    else
      ++series.undefined_conditionals;
    if (nu_days > 0)
      p.p_mu_given_nu = Rational(co, nu_days);
    else
      ++series.undefined_conditionals;
    series.points.push_back(std::move(p));
  }
  return series;
}

std::size_t historical_cochange(const PairDaySequence& seq) {
  std::size_t count = 0;
  for (const auto& e : seq.entries) count += e.mu_updated && e.nu_updated;
  return count;
}

bool baseline_coupled(std::size_t cochange_count, std::size_t limit) {
  return cochange_count > limit;
}

std::string_view to_string(PairState s) {
  return s == PairState::Coupled ? "coupled" : "decoupled";
}

std::vector<PairState> state_timeline(const std::vector<double>& couplings, double threshold,
                                      std::uint32_t patience) {
  if (threshold <= 0.0 || threshold > 1.0)
    throw std::invalid_argument("coupling_state: threshold must be in (0,1]");
  if (patience < 1) throw std::invalid_argument("coupling_state: patience must be >= 1");

  std::vector<PairState> states;
  states.reserve(couplings.size());
  PairState state = PairState::Decoupled;
  std::uint32_t below = 0;
  for (double v : couplings) {
    if (v >= threshold) {
      state = PairState::Coupled;
      below = 0;
    } else if (state == PairState::Coupled) {
      if (++below >= patience) {
        state = PairState::Decoupled;
        below = 0;
      }
    }
    states.push_back(state);
  }
  return states;
}

CouplingState coupling_state(const PairSeries& series, double threshold, std::uint32_t patience) {
  std::vector<double> values;
  values.reserve(series.points.size());
  for (const auto& p : series.points) values.push_back(p.coupling.to_double());
  const auto states = state_timeline(values, threshold, patience);

  CouplingState out;
  out.threshold = threshold;
  out.patience = patience;
  out.timeline.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    out.timeline.push_back({series.points[i].end_day_index, series.points[i].end_date, states[i]});
  return out;
}

}  // namespace mlc
