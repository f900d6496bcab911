#ifndef SHIFTCODE_TYPES_HPP
#define SHIFTCODE_TYPES_HPP

#include <cstdint>
#include <vector>

namespace shiftcode {

/// Finite prefix (x_1,...,x_n) of a real sequence, pairwise distinct.
using RealPrefix = std::vector<double>;

/// Rank code (t_1,...,t_n) with 1 <= t_i <= i; t_i is the 1-based rank of
/// x_i among x_1..x_i.
using RankCode = std::vector<int>;

/// Permutation word (k_1,...,k_n): k_i = #{s <= n : x_s < x_i}, so the
/// entries are a permutation of 0..n-1.
using SimplexWord = std::vector<int>;

/// Special positions of a rank code and their running counts d_1..d_n.
/// Position 1 is always special; position i+1 is special iff t_{i+1} <= d_i.
struct SpecialProfile {
  std::vector<bool> special;
  std::vector<std::int64_t> d;
};

}  // namespace shiftcode

#endif  // SHIFTCODE_TYPES_HPP
