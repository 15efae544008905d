#pragma once

#include <cstdint>
#include <vector>

namespace demkit::internal {

// Minimum-cover search over word-packed element sets: iterative deepening by
// size, lexicographic combination order within a size, suffix-union pruning.
// Returns the lexicographically first cover of minimum size at or above the
// floor, or an empty result when no cover exists.
struct CoverSearch {
  int words = 0;
  int candidates = 0;
  std::vector<std::uint64_t> set_words;  // candidates * words
  std::vector<std::uint64_t> universe;   // words

  struct Result {
    bool found = false;
    std::vector<int> chosen;  // candidate indices, ascending
  };

  Result run(int floor) {
    std::vector<std::uint64_t> suffix((candidates + 1) * words, 0);
    for (int i = candidates - 1; i >= 0; --i)
      for (int w = 0; w < words; ++w)
        suffix[i * words + w] =
            suffix[(i + 1) * words + w] | set_words[i * words + w];

    for (int w = 0; w < words; ++w)
      if (suffix[w] != universe[w]) return {};  // no cover exists at all

    std::vector<std::uint64_t> acc((candidates + 2) * words, 0);
    Result res;
    for (int s = floor; s <= candidates; ++s) {
      res.chosen.clear();
      if (search(0, s, acc, 0, suffix, res.chosen)) {
        res.found = true;
        return res;
      }
    }
    return res;
  }

 private:
  bool covered(const std::uint64_t* acc, const std::uint64_t* extra) const {
    for (int w = 0; w < words; ++w)
      if ((acc[w] | (extra ? extra[w] : 0)) != universe[w]) return false;
    return true;
  }

  bool search(int start, int need, std::vector<std::uint64_t>& acc, int depth,
              const std::vector<std::uint64_t>& suffix,
              std::vector<int>& chosen) {
    const std::uint64_t* cur = acc.data() + depth * words;
    if (need == 0) return covered(cur, nullptr);
    if (start + need > candidates) return false;
    if (!covered(cur, suffix.data() + start * words)) return false;
    for (int i = start; i + need <= candidates; ++i) {
      std::uint64_t* next = acc.data() + (depth + 1) * words;
      const std::uint64_t* sw = set_words.data() + i * words;
      for (int w = 0; w < words; ++w) next[w] = cur[w] | sw[w];
      chosen.push_back(i);
      if (search(i + 1, need - 1, acc, depth + 1, suffix, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace demkit::internal
