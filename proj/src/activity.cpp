#include "mlc/activity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mlc {

ActivityCalendar build_calendar(std::span<const CommitRecord> commits, const ServiceMap& map) {
  std::set<CivilDate> dates;
  std::map<std::string, std::set<CivilDate>> touched;
  for (const auto& c : commits) {
    const CivilDate day = utc_date(c.timestamp);
    dates.insert(day);
    for (const auto& path : c.files) {
      if (auto svc = map.resolve(path)) touched[*svc].insert(day);
    }
  }

  ActivityCalendar cal;
  cal.days.assign(dates.begin(), dates.end());
  std::map<CivilDate, std::uint32_t> index_of;
  for (std::uint32_t i = 0; i < cal.days.size(); ++i) index_of[cal.days[i]] = i + 1;

  for (const auto& svc : map.services()) cal.updates[svc];  // all services present
  for (const auto& [svc, svc_dates] : touched) {
    auto& idx = cal.updates[svc];
    idx.reserve(svc_dates.size());
    for (const auto& d : svc_dates) idx.push_back(index_of.at(d));
  }
  return cal;
}

PairDaySequence relevant_days(const ActivityCalendar& cal, std::string_view mu,
                              std::string_view nu) {
  if (mu == nu)
    throw std::invalid_argument("relevant_days: self-coupling of '" + std::string(mu) +
                                "' is undefined");
  const auto mu_it = cal.updates.find(std::string(mu));
  const auto nu_it = cal.updates.find(std::string(nu));
  if (mu_it == cal.updates.end())
    throw std::invalid_argument("relevant_days: unknown service '" + std::string(mu) + "'");
  if (nu_it == cal.updates.end())
    throw std::invalid_argument("relevant_days: unknown service '" + std::string(nu) + "'");

  PairDaySequence seq;
  seq.mu = mu;
  seq.nu = nu;
  const auto& a = mu_it->second;
  const auto& b = nu_it->second;
  seq.entries.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      seq.entries.push_back({a[i], true, false});
      ++i;
    } else if (i == a.size() || b[j] < a[i]) {
      seq.entries.push_back({b[j], false, true});
      ++j;
    } else {
      seq.entries.push_back({a[i], true, true});
      ++i;
      ++j;
    }
  }
  return seq;
}

}  // namespace mlc
