#include "shiftcode/sampling.hpp"

#include <algorithm>
#include <random>

#include "shiftcode/errors.hpp"

namespace shiftcode {

Law parse_law(const std::string& name) {
  if (name == "uniform") return Law::uniform;
  if (name == "gaussian") return Law::gaussian;
  throw error(errc::parse_error, "unknown law: " + name);
}

const char* law_name(Law law) noexcept {
  return law == Law::uniform ? "uniform" : "gaussian";
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool pairwise_distinct(const RealPrefix& x) {
  RealPrefix s = x;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept {
  return splitmix64(master ^ splitmix64(trial));
}

RealPrefix sample_prefix(Law law, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealPrefix x(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i)
      x[i] = law == Law::uniform ? unif(rng) : gauss(rng);
    // floating-point collisions are resolved by redrawing, not tie-breaking
    if (pairwise_distinct(x)) return x;
  }
}

}  // namespace shiftcode
