#ifndef SHIFTCODE_RANKCODE_HPP
#define SHIFTCODE_RANKCODE_HPP

#include <cstddef>

#include "shiftcode/types.hpp"

namespace shiftcode {

/// Throws error(errc::invalid_code) unless 1 <= t_i <= i for all i.
void validate_code(const RankCode& t);

/// Encode a real prefix as its rank code: t_i = 1 + #{k < i : x_k < x_i}.
/// O(n log n). Throws on duplicate values.
RankCode encode(const RealPrefix& x);

/// The permutation word of any real prefix whose code is t: the unique
/// (k_1,...,k_n) with k_i = #{s <= n : x_s < x_i}. Inverse of encode up to
/// order type.
SimplexWord order_permutation(const RankCode& t);

/// Special positions and running counts of a rank code.
SpecialProfile special_profile(const RankCode& t);

/// One application of the transfer (the shift conjugated through encode):
/// t'_n = t_{n+1} if position n+1 is special, else t_{n+1} - 1.
/// Output is one shorter than the input.
RankCode transfer(const RankCode& t);

/// Estimate of the first coordinate x_1 from a code of length n: d_n / n.
/// Converges a.s. to x_1 as n grows.
double reconstruct_first(const RankCode& t);

/// Estimates of x_1..x_m: the j-th is reconstruct_first of the code after
/// j-1 transfer applications. Requires 1 <= m <= length(t).
std::vector<double> reconstruct_prefix(const RankCode& t, std::size_t m);

}  // namespace shiftcode

#endif  // SHIFTCODE_RANKCODE_HPP
