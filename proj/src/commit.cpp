#include "mlc/commit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace mlc {

namespace {

constexpr std::string_view kRecordSeparator = "\x01COMMIT";

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct ScopeRule {
  CommitScope scope;
  std::vector<std::string_view> keywords;
};

// Ordered: the first group with any keyword contained in the message wins.
const std::array<ScopeRule, 4>& scope_rules() {
  static const std::array<ScopeRule, 4> rules = {{
      {CommitScope::Refactoring, {"refactor", "restructur", "rename", "cleanup", "clean up"}},
      {CommitScope::BugFix, {"fix", "bug", "hotfix", "patch", "defect"}},
      {CommitScope::NewFeature, {"feat", "add ", "introduc", "implement"}},
      {CommitScope::Improvement, {"improv", "perf", "optimiz", "enhanc", "upgrade", "update"}},
  }};
  return rules;
}

std::string escape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '|': out += "\\|"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out += s[i];
      continue;
    }
    switch (s[++i]) {
      case '\\': out += '\\'; break;
      case '|': out += '|'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default:
        out += '\\';
        out += s[i];
    }
  }
  return out;
}

// Splits a header line on unescaped pipes into id|timestamp|author|message.
bool split_header(std::string_view line, std::array<std::string, 4>& fields) {
  std::size_t field = 0;
  std::string current;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '\\' && i + 1 < line.size()) {
      current += c;
      current += line[++i];
      continue;
    }
    if (c == '|' && field < 3) {
      fields[field++] = std::move(current);
      current.clear();
      continue;
    }
    current += c;
  }
  if (field != 3) return false;
  fields[3] = std::move(current);
  return true;
}

bool parse_count(std::string_view tok, std::int64_t& out) {
  if (tok == "-") {  // binary file, counts unknown
    out = 0;
    return true;
  }
  if (tok.empty()) return false;
  out = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace

std::string_view to_string(CommitScope s) {
  switch (s) {
    case CommitScope::Refactoring: return "refactoring";
    case CommitScope::BugFix: return "bugfix";
    case CommitScope::Improvement: return "improvement";
    case CommitScope::NewFeature: return "newfeature";
    case CommitScope::Other: return "other";
  }
  return "other";
}

std::optional<CommitScope> scope_from_string(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "refactoring" || v == "refactor") return CommitScope::Refactoring;
  if (v == "bugfix" || v == "fix") return CommitScope::BugFix;
  if (v == "improvement") return CommitScope::Improvement;
  if (v == "newfeature" || v == "feature") return CommitScope::NewFeature;
  if (v == "other") return CommitScope::Other;
  return std::nullopt;
}

CommitScope classify_commit_scope(std::string_view message) {
  const std::string lowered = to_lower(message);
  for (const auto& rule : scope_rules()) {
    for (const auto& kw : rule.keywords) {
      if (lowered.find(kw) != std::string::npos) return rule.scope;
    }
  }
  return CommitScope::Other;
}

CommitSize commit_size(const CommitRecord& c) {
  CommitSize s;
  s.files_changed = static_cast<std::int64_t>(c.files.size());
  if (c.churn) s.lines_churned = c.churn->added + c.churn->deleted;
  return s;
}

bool CommitFilter::keeps(const CommitRecord& c) const {
  if (exclude_merges && c.is_merge) return false;
  if (exclude_bots && c.author.ends_with("[bot]")) return false;
  if (max_files && static_cast<std::int64_t>(c.files.size()) > *max_files) return false;
  if (max_churn && c.churn && c.churn->added + c.churn->deleted > *max_churn) return false;
  if (!excluded_scopes.empty() && excluded_scopes.contains(classify_commit_scope(c.message)))
    return false;
  return true;
}

CommitFilter standard_filter() {
  CommitFilter f;
  f.exclude_merges = true;
  f.exclude_bots = true;
  return f;
}

std::vector<CommitRecord> filter_commits(std::span<const CommitRecord> commits,
                                         const CommitFilter& f) {
  std::vector<CommitRecord> out;
  out.reserve(commits.size());
  for (const auto& c : commits)
    if (f.keeps(c)) out.push_back(c);
  return out;
}

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b = static_cast<unsigned char>(s[i]);
    std::size_t len;
    if (b < 0x80) {
      len = 1;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      if (b < 0xC2) return false;  // overlong
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
    } else if ((b & 0xF8) == 0xF0) {
      if (b > 0xF4) return false;  // beyond U+10FFFF
      len = 4;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k)
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    i += len;
  }
  return true;
}

std::vector<CommitRecord> parse_commit_log(std::istream& in, ParseStats* stats) {
  std::vector<CommitRecord> out;
  ParseStats local;

  std::string line;
  std::size_t line_no = 0;
  bool in_record = false;
  bool skip_record = false;
  bool header_seen = false;
  CommitRecord current;
  std::unordered_set<std::string> seen_paths;
  std::int64_t added_total = 0, deleted_total = 0;
  bool have_numstat = false;

  auto flush = [&] {
    if (!in_record || skip_record) return;
    if (have_numstat) current.churn = Churn{added_total, deleted_total};
    out.push_back(std::move(current));
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (line == kRecordSeparator) {
      flush();
      in_record = true;
      skip_record = false;
      header_seen = false;
      current = CommitRecord{};
      seen_paths.clear();
      added_total = deleted_total = 0;
      have_numstat = false;
      continue;
    }
    if (!in_record) throw ParseError(line_no, "data before first record separator");
    if (skip_record) continue;

    if (!header_seen) {
      std::array<std::string, 4> fields;
      if (!split_header(line, fields))
        throw ParseError(line_no, "malformed header, expected id|timestamp|author|message");
      auto ts = parse_iso8601(fields[1]);
      if (!ts) throw ParseError(line_no, "malformed timestamp '" + fields[1] + "'");
      if (fields[0].empty()) throw ParseError(line_no, "empty commit id");
      current.id = std::move(fields[0]);
      current.timestamp = *ts;
      current.author = unescape_field(fields[2]);
      current.message = unescape_field(fields[3]);
      header_seen = true;
      continue;
    }

    if (line == "M") {
      current.is_merge = true;
      continue;
    }

    // Numstat line: added \t deleted \t path (path may itself contain tabs).
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw ParseError(line_no, "malformed numstat line");
    std::int64_t added = 0, deleted = 0;
    if (!parse_count(std::string_view(line).substr(0, t1), added) ||
        !parse_count(std::string_view(line).substr(t1 + 1, t2 - t1 - 1), deleted))
      throw ParseError(line_no, "malformed numstat counts");
    std::string path = line.substr(t2 + 1);
    if (path.empty()) throw ParseError(line_no, "empty path in numstat line");
    if (!is_valid_utf8(path)) {
      skip_record = true;
      ++local.records_skipped_non_utf8;
      continue;
    }
    have_numstat = true;
    added_total += added;
    deleted_total += deleted;
    if (seen_paths.insert(path).second) current.files.push_back(std::move(path));
  }
  flush();

  if (stats) *stats = local;
  return out;
}

void write_commit_log(std::ostream& out, std::span<const CommitRecord> commits) {
  for (const auto& c : commits) {
    out << kRecordSeparator << '\n';
    out << c.id << '|' << to_iso8601_utc(c.timestamp) << '|' << escape_field(c.author) << '|'
        << escape_field(c.message) << '\n';
    if (c.is_merge) out << "M\n";
    // Emit per-file churn so totals survive a round trip: the full added
    // count rides on the first file, the full deleted count on the last.
    const std::size_t n = c.files.size();
    const Churn churn = c.churn.value_or(Churn{});
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t a = i == 0 ? churn.added : 0;
      const std::int64_t d = i + 1 == n ? churn.deleted : 0;
      out << a << '\t' << d << '\t' << c.files[i] << '\n';
    }
  }
}

}  // namespace mlc
