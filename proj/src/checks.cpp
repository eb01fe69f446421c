#include "graygreed/checks.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace graygreed {

namespace {

void require_same_length(std::span<const BinaryWord> list, const char* who) {
  for (const auto& w : list) {
    if (w.length() != list.front().length()) {
      throw std::invalid_argument(std::string(who) +
                                  " requires words of equal length");
    }
  }
}

std::optional<std::size_t> min_violation(std::optional<std::size_t> a,
                                         std::optional<std::size_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

int tail_length(const BinaryWord& w) {
  const Tail t = tail_of(w);
  return t.present ? t.run_length + 1 : 0;
}

CheckReport is_homogeneous_gray(std::span<const BinaryWord> list) {
  CheckReport report;
  report.results["gray"] = true;
  report.results["homogeneous"] = true;
  if (list.empty()) return report;
  require_same_length(list, "is_homogeneous_gray");
  for (const auto& w : list) {
    if (w.weight() != list.front().weight()) {
      throw std::invalid_argument(
          "is_homogeneous_gray requires words of equal weight");
    }
  }

  std::optional<std::size_t> gray_at;
  std::optional<std::size_t> homog_at;
  WordSet seen{list.front()};
  const int n = list.front().length();
  for (std::size_t t = 1; t < list.size(); ++t) {
    if (!gray_at && !seen.insert(list[t]).second) gray_at = t;  // duplicate
    const BinaryWord& a = list[t - 1];
    const BinaryWord& b = list[t];
    int lo = -1, hi = -1, diffs = 0;
    for (int i = 0; i < n; ++i) {
      if (a.bit(i) != b.bit(i)) {
        ++diffs;
        if (lo < 0) lo = i;
        hi = i;
      }
    }
    if (diffs != 2) {
      if (!gray_at) gray_at = t;
      continue;
    }
    if (!homog_at) {
      for (int i = lo + 1; i < hi; ++i) {
        if (a.bit(i)) {
          homog_at = t;
          break;
        }
      }
    }
  }
  report.results["gray"] = !gray_at.has_value();
  report.results["homogeneous"] = !homog_at.has_value();
  report.first_violation = min_violation(gray_at, homog_at);
  return report;
}

CheckReport is_suffix_partitioned(std::span<const BinaryWord> list) {
  CheckReport report;
  report.results["suffix_partitioned"] = true;
  if (list.size() < 2) return report;
  require_same_length(list, "is_suffix_partitioned");

  const int n = list.front().length();
  std::vector<std::string> text;
  text.reserve(list.size());
  for (const auto& w : list) text.push_back(w.to_string());

  std::optional<std::size_t> violation;
  for (int s = 1; s <= n; ++s) {
    std::unordered_set<std::string_view> closed;
    std::string_view prev;
    for (std::size_t t = 0; t < text.size(); ++t) {
      std::string_view suf =
          std::string_view(text[t]).substr(static_cast<std::size_t>(n - s));
      if (t > 0 && suf != prev) {
        if (closed.contains(suf)) {  // block re-opens: not contiguous
          violation = min_violation(violation, t);
          break;
        }
        closed.insert(prev);
      }
      prev = suf;
    }
  }
  report.results["suffix_partitioned"] = !violation.has_value();
  report.first_violation = violation;
  return report;
}

namespace {

// First index at which tail lengths have been seen both to rise and to
// fall, i.e. the prefix stops being monotone in either direction.
std::optional<std::size_t> direction_violation(
    std::span<const BinaryWord> list, TailDirection* out) {
  bool rose = false;
  bool fell = false;
  int prev = list.empty() ? 0 : tail_length(list.front());
  for (std::size_t t = 1; t < list.size(); ++t) {
    const int cur = tail_length(list[t]);
    if (cur > prev) rose = true;
    if (cur < prev) fell = true;
    if (rose && fell) {
      *out = TailDirection::Neither;
      return t;
    }
    prev = cur;
  }
  if (rose) {
    *out = TailDirection::Increasing;
  } else if (fell) {
    *out = TailDirection::Decreasing;
  } else {
    *out = TailDirection::Both;
  }
  return std::nullopt;
}

// list entries carry their index in the outermost list so violations are
// reported against the caller's positions.
std::optional<std::size_t> rt_violation(
    const std::vector<std::pair<BinaryWord, std::size_t>>& list) {
  if (list.empty()) return std::nullopt;
  std::vector<BinaryWord> words;
  words.reserve(list.size());
  for (const auto& [w, idx] : list) words.push_back(w);
  TailDirection dir;
  if (auto at = direction_violation(words, &dir)) return list[*at].second;

  std::optional<std::size_t> violation;
  std::size_t begin = 0;
  while (begin < list.size()) {
    const Tail tail = tail_of(list[begin].first);
    std::size_t end = begin + 1;
    while (end < list.size() &&
           tail_length(list[end].first) == tail_length(list[begin].first)) {
      ++end;
    }
    if (tail.present) {
      std::vector<std::pair<BinaryWord, std::size_t>> stripped;
      stripped.reserve(end - begin);
      const int keep = list[begin].first.length() - (tail.run_length + 1);
      for (std::size_t t = begin; t < end; ++t) {
        stripped.emplace_back(list[t].first.prefix(keep), list[t].second);
      }
      violation = min_violation(violation, rt_violation(stripped));
    }
    begin = end;
  }
  return violation;
}

}  // namespace

TailDirection tail_partition_direction(std::span<const BinaryWord> list) {
  if (list.empty()) return TailDirection::Both;
  require_same_length(list, "tail_partition_direction");
  TailDirection dir;
  if (direction_violation(list, &dir)) return TailDirection::Neither;
  return dir;
}

CheckReport is_rt_partitioned(std::span<const BinaryWord> list) {
  CheckReport report;
  report.results["rt_partitioned"] = true;
  if (list.empty()) return report;
  require_same_length(list, "is_rt_partitioned");
  std::vector<std::pair<BinaryWord, std::size_t>> indexed;
  indexed.reserve(list.size());
  for (std::size_t t = 0; t < list.size(); ++t) indexed.emplace_back(list[t], t);
  const auto violation = rt_violation(indexed);
  report.results["rt_partitioned"] = !violation.has_value();
  report.first_violation = violation;
  return report;
}

bool theorem1_holds(std::span<const BinaryWord> list) {
  if (list.empty()) return true;
  for (const auto& w : list) {
    if (w.length() != list.front().length() ||
        w.weight() != list.front().weight()) {
      return true;  // antecedent needs same length and weight: vacuous
    }
  }
  if (!is_homogeneous_gray(list).all_ok()) return true;
  if (!is_suffix_partitioned(list).all_ok()) return true;
  return is_rt_partitioned(list).all_ok();
}

const char* to_string(TailDirection d) {
  switch (d) {
    case TailDirection::Increasing: return "increasing";
    case TailDirection::Decreasing: return "decreasing";
    case TailDirection::Both: return "both";
    case TailDirection::Neither: return "neither";
  }
  return "?";
}

}  // namespace graygreed
