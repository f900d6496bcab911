#ifndef SHIFTCODE_SAMPLING_HPP
#define SHIFTCODE_SAMPLING_HPP

#include <cstdint>
#include <string>

#include "shiftcode/types.hpp"

namespace shiftcode {

enum class Law { uniform, gaussian };

Law parse_law(const std::string& name);
const char* law_name(Law law) noexcept;

/// n iid draws from the chosen continuous law, deterministic given the
/// seed. The whole prefix is redrawn if a floating-point collision occurs,
/// so the result is always pairwise distinct.
RealPrefix sample_prefix(Law law, std::size_t n, std::uint64_t seed);

/// Independent per-trial seed derived from a master seed by counter
/// (splitmix64 of master ^ mixed index). Trial-level parallelism never
/// changes results.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept;

}  // namespace shiftcode

#endif  // SHIFTCODE_SAMPLING_HPP
