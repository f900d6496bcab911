#ifndef SHIFTCODE_PERMTREE_HPP
#define SHIFTCODE_PERMTREE_HPP

#include "shiftcode/types.hpp"

namespace shiftcode {

/// A vertex of the factorial tree: level n holds the n! permutation words.
struct TreeVertex {
  int level = 0;
  SimplexWord word;

  bool operator==(const TreeVertex&) const = default;
};

/// Throws error(errc::invalid_word) unless the word is a permutation of
/// 0..n-1.
void validate_word(const SimplexWord& k);

/// The permutation word of a real prefix: k_i = #{s <= n : x_s < x_i}.
/// Throws on duplicate values.
SimplexWord simplex_word(const RealPrefix& x);

/// The word of the shifted prefix: r_i = k_{i+1} if k_{i+1} < k_1, else
/// k_{i+1} - 1. Length shrinks by one; requires length >= 2.
SimplexWord translation(const SimplexWord& k);

/// Tree edge of the factorial tree: drop the last entry and re-close the
/// ranks (decrement every entry above the dropped one). Requires level >= 2.
TreeVertex tree_parent(const TreeVertex& v);

/// All n! words of level n. Guarded at n <= 9.
std::vector<TreeVertex> enumerate_level(int n);

}  // namespace shiftcode

#endif  // SHIFTCODE_PERMTREE_HPP
