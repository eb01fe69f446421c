// Exhaustive backtracking search over ALL homogeneous suffix-partitioned
// Gray code orderings of a language (tiny instances only), counting them
// and any that fail the recursive tail partition property.
#ifndef GRAYGREED_SEARCH_HPP
#define GRAYGREED_SEARCH_HPP

#include <cstdint>

#include "graygreed/language.hpp"

namespace graygreed {

struct GraySearchResult {
  std::uint64_t codes = 0;          // complete orderings found
  std::uint64_t rt_violations = 0;  // of those, how many are not r-t
};

GraySearchResult search_suffix_partitioned_gray_codes(
    const LanguageSpec& spec);

}  // namespace graygreed

#endif  // GRAYGREED_SEARCH_HPP
