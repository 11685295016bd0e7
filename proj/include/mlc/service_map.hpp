#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mlc {

/// Reserved bucket for tree paths no rule matches.
inline constexpr std::string_view kUnmappedBucket = "__unmapped__";

/// Glob over '/'-separated repository paths: `*` and `?` match within one
/// segment, `**` matches any run of whole segments. Patterns are validated
/// by `check_glob` before use.
bool glob_match(std::string_view pattern, std::string_view path);

/// Returns an error description, or nullopt if the pattern is well formed.
std::optional<std::string> check_glob(std::string_view pattern);

struct ServiceRule {
  std::string pattern;
  std::string service;

  friend bool operator==(const ServiceRule&, const ServiceRule&) = default;
};

/// Ordered path-pattern -> service rules; the first matching rule wins.
/// Each service id appears in exactly one rule.
class ServiceMap {
 public:
  /// Validates patterns, rejects duplicate or empty service ids.
  static ServiceMap from_rules(std::vector<ServiceRule> rules);

  /// Mapping document: one `pattern => service_id` per line, `#` comments.
  static ServiceMap load(std::istream& in);

  /// One rule `<dir>/** => <dir>` per directory (depth 1 or 2) containing a
  /// service marker file (Dockerfile, pom.xml, build.gradle, package.json,
  /// go.mod, Cargo.toml, requirements.txt). Rules come out in lexicographic
  /// order; throws if nothing is detected.
  static ServiceMap autodetect(std::span<const std::string> tree);

  /// Service of the first matching rule, nullopt when the path is unmapped.
  [[nodiscard]] std::optional<std::string> resolve(std::string_view path) const;

  [[nodiscard]] const std::vector<ServiceRule>& rules() const { return rules_; }

  /// Service ids sorted lexicographically.
  [[nodiscard]] const std::vector<std::string>& services() const { return services_; }

  friend bool operator==(const ServiceMap&, const ServiceMap&) = default;

 private:
  std::vector<ServiceRule> rules_;
  std::vector<std::string> services_;
};

void write_mapping(std::ostream& out, const ServiceMap& m);

/// File count per service over a tree listing; unmapped paths land in
/// `__unmapped__`. Every declared service is present, possibly with 0.
std::map<std::string, std::size_t> service_sizes(const ServiceMap& m,
                                                 std::span<const std::string> tree);

}  // namespace mlc
