#include "graygreed/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace graygreed {

namespace {

std::size_t block_count(int length) {
  return (static_cast<std::size_t>(length) + 63) / 64;
}

}  // namespace

BinaryWord BinaryWord::parse(std::string_view text) {
  BinaryWord w;
  w.length_ = static_cast<int>(text.size());
  w.blocks_.assign(block_count(w.length_), 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      w.blocks_[i >> 6] |= 1ull << (63 - (i & 63));
      ++w.weight_;
    } else if (text[i] != '0') {
      throw std::invalid_argument("invalid character at index " +
                                  std::to_string(i) + ": expected '0' or '1'");
    }
  }
  return w;
}

BinaryWord BinaryWord::with_swapped(int i, int j) const {
  BinaryWord out = *this;
  const bool bi = bit(i);
  const bool bj = bit(j);
  if (bi != bj) {
    out.blocks_[static_cast<std::size_t>(i) >> 6] ^=
        1ull << (63 - (static_cast<std::size_t>(i) & 63));
    out.blocks_[static_cast<std::size_t>(j) >> 6] ^=
        1ull << (63 - (static_cast<std::size_t>(j) & 63));
  }
  return out;
}

BinaryWord BinaryWord::prefix(int len) const {
  BinaryWord out;
  out.length_ = len;
  out.blocks_.assign(block_count(len), 0);
  for (int i = 0; i < len; ++i) {
    if (bit(i)) {
      out.blocks_[static_cast<std::size_t>(i) >> 6] |=
          1ull << (63 - (static_cast<std::size_t>(i) & 63));
      ++out.weight_;
    }
  }
  return out;
}

std::string BinaryWord::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

BinaryWord parse_word(std::string_view text) { return BinaryWord::parse(text); }

Tail tail_of(const BinaryWord& w) {
  int ones = 0;
  int i = w.length() - 1;
  while (i >= 0 && w.bit(i)) {
    ++ones;
    --i;
  }
  if (i < 0) return Tail{false, 0};  // 1^n, possibly empty
  return Tail{true, ones};
}

std::vector<Move> homogeneous_moves(const BinaryWord& w, MoveOrder order) {
  std::vector<Move> moves;
  const int n = w.length();
  for (int i = 0; i < n; ++i) {
    if (!w.bit(i)) continue;
    // Zeros reachable without crossing another 1 form the contiguous
    // zero runs immediately left and right of position i.
    for (int j = i - 1; j >= 0 && !w.bit(j); --j) moves.emplace_back(i, j);
    for (int j = i + 1; j < n && !w.bit(j); ++j) moves.emplace_back(i, j);
  }
  if (order == MoveOrder::OneFirst) {
    std::sort(moves.begin(), moves.end());
  } else {
    std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
      return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
  }
  return moves;
}

BinaryWord apply_move(const BinaryWord& w, int i, int j) {
  if (i < 0 || i >= w.length() || j < 0 || j >= w.length() || !w.bit(i) ||
      w.bit(j)) {
    throw std::invalid_argument("apply_move requires w[i]=1 and w[j]=0");
  }
  return w.with_swapped(i, j);
}

}  // namespace graygreed
