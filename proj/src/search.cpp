#include "graygreed/search.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "graygreed/checks.hpp"
#include "graygreed/word.hpp"

namespace graygreed {

namespace {

struct Searcher {
  const WordList& members;
  std::vector<std::string> text;
  std::vector<std::vector<std::size_t>> adjacent;
  int n = 0;

  std::vector<std::size_t> path;
  std::vector<bool> used;
  // Suffixes whose contiguous block has ended; a word re-introducing one
  // of them cannot keep the list suffix partitioned. Suffix length is
  // implicit in the key (distinct lengths give distinct strings).
  std::unordered_set<std::string> closed;

  GraySearchResult result;

  void run() {
    used.assign(members.size(), false);
    for (std::size_t s = 0; s < members.size(); ++s) {
      used[s] = true;
      path.push_back(s);
      extend();
      path.pop_back();
      used[s] = false;
    }
  }

  void extend() {
    if (path.size() == members.size()) {
      ++result.codes;
      WordList list;
      list.reserve(path.size());
      for (std::size_t idx : path) list.push_back(members[idx]);
      if (!is_rt_partitioned(list).all_ok()) ++result.rt_violations;
      return;
    }
    const std::size_t prev = path.back();
    for (std::size_t cand : adjacent[prev]) {
      if (used[cand]) continue;
      // Longest common suffix of prev and cand; all longer suffixes of
      // prev close, all longer suffixes of cand must be fresh.
      int common = 0;
      while (common < n &&
             text[prev][static_cast<std::size_t>(n - 1 - common)] ==
                 text[cand][static_cast<std::size_t>(n - 1 - common)]) {
        ++common;
      }
      bool ok = true;
      for (int s = common + 1; s <= n && ok; ++s) {
        if (closed.contains(
                text[cand].substr(static_cast<std::size_t>(n - s)))) {
          ok = false;
        }
      }
      if (!ok) continue;
      std::vector<std::string> newly_closed;
      for (int s = common + 1; s <= n; ++s) {
        newly_closed.push_back(
            text[prev].substr(static_cast<std::size_t>(n - s)));
      }
      for (auto& suffix : newly_closed) closed.insert(suffix);
      used[cand] = true;
      path.push_back(cand);
      extend();
      path.pop_back();
      used[cand] = false;
      for (auto& suffix : newly_closed) closed.erase(suffix);
    }
  }
};

}  // namespace

GraySearchResult search_suffix_partitioned_gray_codes(
    const LanguageSpec& spec) {
  Searcher searcher{enumerate_lex(spec)};
  const WordList& members = searcher.members;
  searcher.n = spec.n();
  searcher.text.reserve(members.size());
  for (const auto& w : members) searcher.text.push_back(w.to_string());

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < members.size(); ++i) {
    index.emplace(searcher.text[i], i);
  }
  searcher.adjacent.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& [a, b] : homogeneous_moves(members[i],
                                                MoveOrder::OneFirst)) {
      const auto it = index.find(members[i].with_swapped(a, b).to_string());
      if (it != index.end()) searcher.adjacent[i].push_back(it->second);
    }
  }
  searcher.run();
  return searcher.result;
}

}  // namespace graygreed
