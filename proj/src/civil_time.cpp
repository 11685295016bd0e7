#include "mlc/civil_time.hpp"

#include <cctype>
#include <cstdio>

namespace mlc {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

bool valid_date(int y, int m, int d) {
  static const int mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m < 1 || m > 12 || d < 1) return false;
  int last = mdays[m - 1];
  const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) last = 29;
  return d <= last;
}

}  // namespace

std::int64_t days_from_civil(const CivilDate& cd) {
  std::int64_t y = cd.year;
  const unsigned m = static_cast<unsigned>(cd.month);
  const unsigned d = static_cast<unsigned>(cd.day);
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

std::string to_string(const CivilDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::optional<CivilDate> parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  const auto ys = text.substr(0, 4), ms = text.substr(5, 2), ds = text.substr(8, 2);
  if (!is_digits(ys) || !is_digits(ms) || !is_digits(ds)) return std::nullopt;
  CivilDate d{to_int(ys), to_int(ms), to_int(ds)};
  if (!valid_date(d.year, d.month, d.day)) return std::nullopt;
  return d;
}

std::optional<Timestamp> parse_iso8601(std::string_view text) {
  // Date part.
  if (text.size() < 19) return std::nullopt;
  auto date = parse_date(text.substr(0, 10));
  if (!date) return std::nullopt;
  if (text[10] != 'T' && text[10] != ' ') return std::nullopt;

  // Time part.
  const auto hs = text.substr(11, 2), mins = text.substr(14, 2), ss = text.substr(17, 2);
  if (text[13] != ':' || text[16] != ':') return std::nullopt;
  if (!is_digits(hs) || !is_digits(mins) || !is_digits(ss)) return std::nullopt;
  const int hh = to_int(hs), mm = to_int(mins), sec = to_int(ss);
  if (hh > 23 || mm > 59 || sec > 60) return std::nullopt;

  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return std::nullopt;
  }

  // Offset part.
  if (pos >= text.size()) return std::nullopt;
  std::int64_t offset = 0;
  if (text[pos] == 'Z') {
    if (pos + 1 != text.size()) return std::nullopt;
  } else if (text[pos] == '+' || text[pos] == '-') {
    const int sign = text[pos] == '-' ? -1 : 1;
    auto rest = text.substr(pos + 1);
    int oh = 0, om = 0;
    if (rest.size() == 5 && rest[2] == ':' && is_digits(rest.substr(0, 2)) &&
        is_digits(rest.substr(3, 2))) {
      oh = to_int(rest.substr(0, 2));
      om = to_int(rest.substr(3, 2));
    } else if (rest.size() == 4 && is_digits(rest)) {
      oh = to_int(rest.substr(0, 2));
      om = to_int(rest.substr(2, 2));
    } else if (rest.size() == 2 && is_digits(rest)) {
      oh = to_int(rest);
    } else {
      return std::nullopt;
    }
    if (oh > 23 || om > 59) return std::nullopt;
    offset = sign * (oh * 3600LL + om * 60LL);
  } else {
    return std::nullopt;
  }

  const std::int64_t local = days_from_civil(*date) * 86400LL + hh * 3600LL + mm * 60LL + sec;
  return Timestamp{local - offset};
}

std::string to_iso8601_utc(const Timestamp& t) {
  std::int64_t days = t.epoch_seconds / 86400;
  std::int64_t rem = t.epoch_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const CivilDate d = civil_from_days(days);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02lld:%02lld:%02lld+00:00", d.year, d.month,
                d.day, static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

CivilDate utc_date(const Timestamp& t) {
  std::int64_t days = t.epoch_seconds / 86400;
  if (t.epoch_seconds % 86400 < 0) --days;
  return civil_from_days(days);
}

}  // namespace mlc
