// List-structure verifiers: homogeneous Gray code, suffix partitioned,
// (increasing/decreasing) tail partitioned, recursive tail partitioned,
// and the implication they combine into.
#ifndef GRAYGREED_CHECKS_HPP
#define GRAYGREED_CHECKS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>

#include "graygreed/word.hpp"

namespace graygreed {

struct CheckReport {
  std::map<std::string, bool> results;
  // Smallest list index at which the earliest failing check is witnessed,
  // i.e. the first index whose prefix of the list already fails.
  std::optional<std::size_t> first_violation;

  bool all_ok() const {
    for (const auto& [name, ok] : results) {
      if (!ok) return false;
    }
    return true;
  }
};

enum class TailDirection { Increasing, Decreasing, Both, Neither };

// Rank used to order tail groups: a tail 01^m has length m+1; words with
// no tail (all ones) rank 0.
int tail_length(const BinaryWord& w);

// results: "gray" (all distinct, consecutive words differ by exactly one
// transposition) and "homogeneous" (each such transposition has no 1
// between the swapped bits). Throws on mixed lengths or weights.
CheckReport is_homogeneous_gray(std::span<const BinaryWord> list);

// results: "suffix_partitioned" — for every suffix length, equal suffixes
// occupy one contiguous block. Throws on mixed lengths.
CheckReport is_suffix_partitioned(std::span<const BinaryWord> list);

// Monotonicity of tail lengths along the list. Both when all tails are
// equal. Throws on mixed lengths.
TailDirection tail_partition_direction(std::span<const BinaryWord> list);

// results: "rt_partitioned" — tail groups appear in monotone length order
// and each group, tail stripped, is recursively tail partitioned. Throws
// on mixed lengths.
CheckReport is_rt_partitioned(std::span<const BinaryWord> list);

// Homogeneous suffix-partitioned Gray code implies r-t partitioned; lists
// whose words differ in length or weight satisfy it vacuously.
bool theorem1_holds(std::span<const BinaryWord> list);

const char* to_string(TailDirection d);

}  // namespace graygreed

#endif  // GRAYGREED_CHECKS_HPP
