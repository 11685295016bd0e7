#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlc/civil_time.hpp"

namespace mlc {

enum class CommitScope { Refactoring, BugFix, Improvement, NewFeature, Other };

std::string_view to_string(CommitScope s);
std::optional<CommitScope> scope_from_string(std::string_view s);

struct Churn {
  std::int64_t added = 0;
  std::int64_t deleted = 0;

  friend bool operator==(const Churn&, const Churn&) = default;
};

/// One parsed commit. `files` is de-duplicated and never contains empty
/// paths; `churn` is present only when the record carried numstat lines.
struct CommitRecord {
  std::string id;
  Timestamp timestamp;
  std::string author;
  std::string message;
  std::vector<std::string> files;
  std::optional<Churn> churn;
  bool is_merge = false;

  friend bool operator==(const CommitRecord&, const CommitRecord&) = default;
};

/// Classifies by the first matching keyword group on the lowercased message:
/// refactoring, bug fix, new feature, improvement; anything else is Other.
CommitScope classify_commit_scope(std::string_view message);

struct CommitSize {
  std::int64_t files_changed = 0;
  std::int64_t lines_churned = 0;

  friend bool operator==(const CommitSize&, const CommitSize&) = default;
};

CommitSize commit_size(const CommitRecord& c);

/// A commit survives iff it violates no enabled criterion. The default
/// constructed filter is empty and keeps everything.
struct CommitFilter {
  bool exclude_merges = false;
  bool exclude_bots = false;  // author names ending in "[bot]"
  std::optional<std::int64_t> max_files;
  std::optional<std::int64_t> max_churn;
  std::set<CommitScope> excluded_scopes;

  [[nodiscard]] bool keeps(const CommitRecord& c) const;

  friend bool operator==(const CommitFilter&, const CommitFilter&) = default;
};

/// The pipeline default: merges and bot authors dropped.
CommitFilter standard_filter();

std::vector<CommitRecord> filter_commits(std::span<const CommitRecord> commits,
                                         const CommitFilter& f);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseStats {
  std::size_t records_skipped_non_utf8 = 0;
};

/// Commit-log export format, one file per repository:
///   \x01COMMIT
///   id|iso8601-timestamp|author|message
///   M                      (optional merge marker)
///   added\tdeleted\tpath   (one numstat line per file, "-" counts as 0)
/// Pipes, backslashes and newlines inside author/message are escaped as
/// \| \\ \n \r. Records with a non-UTF-8 path are skipped and counted in
/// `stats`; anything else malformed raises ParseError with a line number.
std::vector<CommitRecord> parse_commit_log(std::istream& in, ParseStats* stats = nullptr);

void write_commit_log(std::ostream& out, std::span<const CommitRecord> commits);

bool is_valid_utf8(std::string_view s);

}  // namespace mlc
