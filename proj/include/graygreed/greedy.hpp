// The greedy Gray code algorithm: starting from a word, repeatedly apply
// the first homogeneous transposition (in move order) that lands on an
// unvisited member of the language, until no move extends the list.
#ifndef GRAYGREED_GREEDY_HPP
#define GRAYGREED_GREEDY_HPP

#include <optional>

#include "graygreed/language.hpp"
#include "graygreed/word.hpp"

namespace graygreed {

struct GreedyTrace {
  WordList words;  // first entry is the start word
  bool exhausted_language = false;
  MoveOrder move_order = MoveOrder::OneFirst;
};

// First word reachable from `current` by one homogeneous transposition,
// scanning moves in `order`, that is a language member not in `visited`.
// Absent when the list cannot be extended.
std::optional<BinaryWord> greedy_step(const BinaryWord& current,
                                      const WordSet& visited,
                                      const LanguageSpec& spec,
                                      MoveOrder order);

// The raw word sequence of a greedy run. Throws if start is not a member.
WordList greedy_words(const BinaryWord& start, const LanguageSpec& spec,
                      MoveOrder order = MoveOrder::OneFirst);

// greedy_words plus exhaustion metadata (|words| compared against the
// exact language count).
GreedyTrace greedy_run(const BinaryWord& start, const LanguageSpec& spec,
                       MoveOrder order = MoveOrder::OneFirst);

}  // namespace graygreed

#endif  // GRAYGREED_GREEDY_HPP
