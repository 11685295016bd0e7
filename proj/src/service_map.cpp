#include "mlc/service_map.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace mlc {

namespace {

std::vector<std::string_view> split_segments(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto slash = s.find('/', start);
    if (slash == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, slash - start));
    start = slash + 1;
  }
  return out;
}

// Single-segment match with * and ?; iterative with backtracking.
bool segment_match(std::string_view pat, std::string_view text) {
  std::size_t p = 0, t = 0;
  std::size_t star_p = std::string_view::npos, star_t = 0;
  while (t < text.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pat.size() && pat[p] == '*') {
      star_p = p++;
      star_t = t;
    } else if (star_p != std::string_view::npos) {
      p = star_p + 1;
      t = ++star_t;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

bool match_segments(std::span<const std::string_view> pat, std::span<const std::string_view> path) {
  if (pat.empty()) return path.empty();
  if (pat.front() == "**") {
    // ** absorbs zero or more whole segments.
    for (std::size_t skip = 0; skip <= path.size(); ++skip) {
      if (match_segments(pat.subspan(1), path.subspan(skip))) return true;
    }
    return false;
  }
  if (path.empty()) return false;
  if (!segment_match(pat.front(), path.front())) return false;
  return match_segments(pat.subspan(1), path.subspan(1));
}

const std::vector<std::string>& marker_files() {
  static const std::vector<std::string> markers = {
      "Dockerfile", "pom.xml",   "build.gradle",     "package.json",
      "go.mod",     "Cargo.toml", "requirements.txt",
  };
  return markers;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::optional<std::string> check_glob(std::string_view pattern) {
  if (pattern.empty()) return "empty pattern";
  if (pattern.front() == '/' || pattern.back() == '/') return "pattern must be repo-relative";
  for (const auto seg : split_segments(pattern)) {
    if (seg.empty()) return "empty path segment (double slash)";
    if (seg.find("**") != std::string_view::npos && seg != "**")
      return "'**' must stand alone in its segment";
  }
  return std::nullopt;
}

bool glob_match(std::string_view pattern, std::string_view path) {
  const auto pat = split_segments(pattern);
  const auto segs = split_segments(path);
  return match_segments(pat, segs);
}

ServiceMap ServiceMap::from_rules(std::vector<ServiceRule> rules) {
  if (rules.empty()) throw std::invalid_argument("service map: empty rule list");
  std::set<std::string> seen;
  for (const auto& r : rules) {
    if (r.service.empty()) throw std::invalid_argument("service map: empty service id");
    if (auto err = check_glob(r.pattern))
      throw std::invalid_argument("service map: pattern '" + r.pattern + "': " + *err);
    if (!seen.insert(r.service).second)
      throw std::invalid_argument("service map: duplicate service id '" + r.service + "'");
  }
  ServiceMap m;
  m.rules_ = std::move(rules);
  m.services_.assign(seen.begin(), seen.end());
  return m;
}

ServiceMap ServiceMap::load(std::istream& in) {
  std::vector<ServiceRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    const auto arrow = body.find("=>");
    if (arrow == std::string::npos)
      throw std::invalid_argument("mapping line " + std::to_string(line_no) +
                                  ": expected 'pattern => service_id'");
    ServiceRule r;
    r.pattern = trim(std::string_view(body).substr(0, arrow));
    r.service = trim(std::string_view(body).substr(arrow + 2));
    if (r.pattern.empty() || r.service.empty())
      throw std::invalid_argument("mapping line " + std::to_string(line_no) +
                                  ": empty pattern or service id");
    rules.push_back(std::move(r));
  }
  return from_rules(std::move(rules));
}

ServiceMap ServiceMap::autodetect(std::span<const std::string> tree) {
  std::set<std::string> dirs;
  for (const auto& path : tree) {
    const auto segs = split_segments(path);
    if (segs.size() < 2) continue;  // marker at repo root does not make a service
    const auto& name = segs[segs.size() - 1];
    if (std::find(marker_files().begin(), marker_files().end(), name) == marker_files().end())
      continue;
    const std::size_t depth = segs.size() - 1;  // directory depth of the marker
    if (depth > 2) continue;
    std::string dir(segs[0]);
    for (std::size_t i = 1; i < depth; ++i) {
      dir += '/';
      dir += segs[i];
    }
    dirs.insert(dir);
  }
  if (dirs.empty())
    throw std::runtime_error(
        "autodetect: no service marker files found; write a mapping document by hand");
  std::vector<ServiceRule> rules;
  for (const auto& d : dirs) rules.push_back({d + "/**", d});
  return from_rules(std::move(rules));
}

std::optional<std::string> ServiceMap::resolve(std::string_view path) const {
  for (const auto& r : rules_) {
    if (glob_match(r.pattern, path)) return r.service;
  }
  return std::nullopt;
}

void write_mapping(std::ostream& out, const ServiceMap& m) {
  for (const auto& r : m.rules()) out << r.pattern << " => " << r.service << '\n';
}

std::map<std::string, std::size_t> service_sizes(const ServiceMap& m,
                                                 std::span<const std::string> tree) {
  std::map<std::string, std::size_t> sizes;
  for (const auto& s : m.services()) sizes[s] = 0;
  sizes[std::string(kUnmappedBucket)] = 0;
  for (const auto& path : tree) {
    if (auto svc = m.resolve(path))
      ++sizes[*svc];
    else
      ++sizes[std::string(kUnmappedBucket)];
  }
  return sizes;
}

}  // namespace mlc
