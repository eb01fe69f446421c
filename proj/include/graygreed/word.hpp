// Fixed-length binary words with cached weight, tails, and homogeneous
// transpositions. Words are immutable values; every operation returns a
// new word.
#ifndef GRAYGREED_WORD_HPP
#define GRAYGREED_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace graygreed {

// Bits are packed MSB-first into 64-bit blocks so that block-wise
// comparison of same-length words is lexicographic (0 < 1, leftmost
// character is index 0).
class BinaryWord {
 public:
  BinaryWord() = default;

  // Throws std::invalid_argument on any character other than '0'/'1'.
  static BinaryWord parse(std::string_view text);

  int length() const { return length_; }
  int weight() const { return weight_; }
  bool empty() const { return length_ == 0; }

  bool bit(int i) const {
    return (blocks_[static_cast<std::size_t>(i) >> 6] >>
            (63 - (static_cast<std::size_t>(i) & 63))) & 1u;
  }

  // Copy with positions i and j exchanged; weight is unchanged when the
  // exchanged bits differ.
  BinaryWord with_swapped(int i, int j) const;

  // The first `len` characters as a word.
  BinaryWord prefix(int len) const;

  std::string to_string() const;

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) {
    return a.length_ == b.length_ && a.blocks_ == b.blocks_;
  }
  // Shorter words first; same-length words compare lexicographically.
  friend std::strong_ordering operator<=>(const BinaryWord& a,
                                          const BinaryWord& b) {
    if (a.length_ != b.length_) return a.length_ <=> b.length_;
    return a.blocks_ <=> b.blocks_;
  }

  friend struct WordHash;

 private:
  std::vector<std::uint64_t> blocks_;
  int length_ = 0;
  int weight_ = 0;
};

struct WordHash {
  std::size_t operator()(const BinaryWord& w) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t b : w.blocks_) {
      h ^= b;
      h *= 0x100000001b3ull;
    }
    h ^= static_cast<std::uint64_t>(w.length_);
    h *= 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

using WordList = std::vector<BinaryWord>;
using WordSet = std::unordered_set<BinaryWord, WordHash>;

// Maximal suffix of the form 0 1^m. All-ones words (including the empty
// word) have no tail.
struct Tail {
  bool present = false;
  int run_length = 0;  // m: number of 1s after the 0
};

enum class MoveOrder {
  OneFirst,   // sort candidate transpositions by position of the 1, then the 0
  ZeroFirst,  // sort by position of the 0, then the 1
};

// Position pair of a transposition: first holds a 1, second holds a 0.
using Move = std::pair<int, int>;

BinaryWord parse_word(std::string_view text);

Tail tail_of(const BinaryWord& w);

// All pairs (i, j) with w[i]=1, w[j]=0 and no 1 strictly between them,
// sorted according to `order`.
std::vector<Move> homogeneous_moves(const BinaryWord& w, MoveOrder order);

// Throws std::invalid_argument unless w[i]=1 and w[j]=0.
BinaryWord apply_move(const BinaryWord& w, int i, int j);

}  // namespace graygreed

#endif  // GRAYGREED_WORD_HPP
