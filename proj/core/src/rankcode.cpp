#include "shiftcode/rankcode.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "shiftcode/errors.hpp"

namespace shiftcode {

namespace {

// Fenwick tree over 1..n for prefix counts.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t i) {
    for (++i; i < tree_.size(); i += i & (0 - i)) ++tree_[i];
  }

  // count of inserted positions <= i (0-based i)
  int prefix(std::size_t i) const {
    int s = 0;
    for (++i; i > 0; i -= i & (0 - i)) s += tree_[i];
    return s;
  }

 private:
  std::vector<int> tree_;
};

// 0-based overall ranks of x; throws on duplicates.
std::vector<int> overall_ranks(const RealPrefix& x) {
  const std::size_t n = x.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return x[a] < x[b]; });
  std::vector<int> rank(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && x[idx[r]] == x[idx[r - 1]])
      throw error(errc::distinct_violation,
                  "values are not pairwise distinct");
    rank[idx[r]] = static_cast<int>(r);
  }
  return rank;
}

}  // namespace

void validate_code(const RankCode& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 1 || t[i] > static_cast<int>(i) + 1)
      throw error(errc::invalid_code,
                  "rank code violates 1 <= t_i <= i at position " +
                      std::to_string(i + 1));
}

RankCode encode(const RealPrefix& x) {
  const std::size_t n = x.size();
  const std::vector<int> rank = overall_ranks(x);
  Fenwick seen(n);
  RankCode t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = 1 + (rank[i] > 0 ? seen.prefix(rank[i] - 1) : 0);
    seen.add(rank[i]);
  }
  return t;
}

SimplexWord order_permutation(const RankCode& t) {
  validate_code(t);
  const std::size_t n = t.size();
  // Rebuild the relative order: item i enters with t_i - 1 earlier items
  // below it.
  std::vector<int> by_value;  // indices, ascending by value
  by_value.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    by_value.insert(by_value.begin() + (t[i] - 1), static_cast<int>(i));
  SimplexWord k(n);
  for (std::size_t pos = 0; pos < n; ++pos) k[by_value[pos]] = static_cast<int>(pos);
  return k;
}

SpecialProfile special_profile(const RankCode& t) {
  validate_code(t);
  const std::size_t n = t.size();
  SpecialProfile p;
  p.special.resize(n);
  p.d.resize(n);
  std::int64_t d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool sp = (i == 0) || (t[i] <= d);
    p.special[i] = sp;
    if (sp) ++d;
    p.d[i] = d;
  }
  return p;
}

RankCode transfer(const RankCode& t) {
  validate_code(t);
  if (t.size() < 2)
    throw error(errc::cannot_shrink, "transfer needs a code of length >= 2");
  const SpecialProfile p = special_profile(t);
  RankCode out(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i)
    out[i - 1] = p.special[i] ? t[i] : t[i] - 1;
  return out;
}

double reconstruct_first(const RankCode& t) {
  const SpecialProfile p = special_profile(t);
  return static_cast<double>(p.d.back()) / static_cast<double>(t.size());
}

std::vector<double> reconstruct_prefix(const RankCode& t, std::size_t m) {
  validate_code(t);
  if (m < 1 || m > t.size())
    throw error(errc::insufficient_data,
                "cannot reconstruct " + std::to_string(m) +
                    " coordinates from a code of length " +
                    std::to_string(t.size()));
  std::vector<double> est;
  est.reserve(m);
  RankCode cur = t;
  for (std::size_t j = 0; j < m; ++j) {
    est.push_back(reconstruct_first(cur));
    if (j + 1 < m) cur = transfer(cur);
  }
  return est;
}

}  // namespace shiftcode
