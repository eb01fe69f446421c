#include "graygreed/greedy.hpp"

#include <stdexcept>

namespace graygreed {

std::optional<BinaryWord> greedy_step(const BinaryWord& current,
                                      const WordSet& visited,
                                      const LanguageSpec& spec,
                                      MoveOrder order) {
  for (const auto& [i, j] : homogeneous_moves(current, order)) {
    BinaryWord candidate = current.with_swapped(i, j);
    if (member(spec, candidate) && !visited.contains(candidate)) {
      return candidate;
    }
  }
  return std::nullopt;
}

WordList greedy_words(const BinaryWord& start, const LanguageSpec& spec,
                      MoveOrder order) {
  if (!member(spec, start)) {
    throw std::invalid_argument("greedy start word '" + start.to_string() +
                                "' is not in the language");
  }
  WordList words{start};
  WordSet visited{start};
  while (auto next = greedy_step(words.back(), visited, spec, order)) {
    visited.insert(*next);
    words.push_back(std::move(*next));
  }
  return words;
}

GreedyTrace greedy_run(const BinaryWord& start, const LanguageSpec& spec,
                       MoveOrder order) {
  GreedyTrace trace;
  trace.words = greedy_words(start, spec, order);
  trace.move_order = order;
  trace.exhausted_language =
      BigInt(trace.words.size()) == language_count(spec);
  return trace;
}

}  // namespace graygreed
