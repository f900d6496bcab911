#include "shiftcode/permtree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "shiftcode/errors.hpp"

namespace shiftcode {

void validate_word(const SimplexWord& k) {
  std::vector<bool> seen(k.size(), false);
  for (int v : k) {
    if (v < 0 || v >= static_cast<int>(k.size()) || seen[v])
      throw error(errc::invalid_word, "word is not a permutation of 0..n-1");
    seen[v] = true;
  }
}

SimplexWord simplex_word(const RealPrefix& x) {
  const std::size_t n = x.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] < x[b]; });
  SimplexWord k(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && x[idx[r]] == x[idx[r - 1]])
      throw error(errc::distinct_violation, "values are not pairwise distinct");
    k[idx[r]] = static_cast<int>(r);
  }
  return k;
}

SimplexWord translation(const SimplexWord& k) {
  validate_word(k);
  if (k.size() < 2)
    throw error(errc::cannot_shrink, "translation needs a word of length >= 2");
  SimplexWord r(k.size() - 1);
  for (std::size_t i = 1; i < k.size(); ++i)
    r[i - 1] = k[i] < k[0] ? k[i] : k[i] - 1;
  return r;
}

TreeVertex tree_parent(const TreeVertex& v) {
  validate_word(v.word);
  if (v.level != static_cast<int>(v.word.size()))
    throw error(errc::invalid_word, "vertex level does not match word length");
  if (v.level < 2)
    throw error(errc::cannot_shrink, "the root and level-1 vertex have no tree parent here");
  const int last = v.word.back();
  TreeVertex parent;
  parent.level = v.level - 1;
  parent.word.reserve(v.word.size() - 1);
  for (std::size_t i = 0; i + 1 < v.word.size(); ++i)
    parent.word.push_back(v.word[i] > last ? v.word[i] - 1 : v.word[i]);
  return parent;
}

std::vector<TreeVertex> enumerate_level(int n) {
  if (n < 1)
    throw error(errc::invalid_word, "level must be >= 1");
  if (n > 9)
    throw error(errc::resource_guard,
                "refusing to enumerate " + std::to_string(n) + "! words");
  SimplexWord w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<TreeVertex> out;
  do {
    out.push_back(TreeVertex{n, w});
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace shiftcode
