#include "shiftcode/tableaux.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "shiftcode/errors.hpp"
#include "shiftcode/sampling.hpp"
#include "shiftcode/stats.hpp"

namespace shiftcode {

namespace {

// Bump v into rows; returns the cell (row, col) created at the end of the
// bumping chain.
template <class T>
std::pair<int, int> row_insert(std::vector<std::vector<T>>& rows, T v) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), v);
    if (it == row.end()) {
      row.push_back(v);
      return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, v);
  }
}

template <class T>
YoungDiagram shape_of(const std::vector<std::vector<T>>& rows) {
  YoungDiagram d;
  d.reserve(rows.size());
  for (const auto& row : rows) d.push_back(static_cast<int>(row.size()));
  return d;
}

template <class T>
bool rows_standard_shape(const std::vector<std::vector<T>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

std::string tableau_key(const StandardTableau& t) {
  std::string key;
  for (const auto& row : t.rows) {
    for (int v : row) {
      key += std::to_string(v);
      key += ',';
    }
    key += ';';
  }
  return key;
}

void distinct_guard(const std::vector<int>& word) {
  std::vector<int> s = word;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw error(errc::distinct_violation, "word entries are not distinct");
}

// 1-based rank word of a real prefix (the order type).
std::vector<int> rank_word(const RealPrefix& x) {
  const std::size_t n = x.size();
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] < x[b]; });
  std::vector<int> g(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && x[idx[r]] == x[idx[r - 1]])
      throw error(errc::distinct_violation, "values are not pairwise distinct");
    g[idx[r]] = static_cast<int>(r) + 1;
  }
  return g;
}

void standard_tableaux_rec(StandardTableau& t, int next, int n,
                           std::vector<StandardTableau>& out) {
  if (next > n) {
    out.push_back(t);
    return;
  }
  // entry `next` may be appended at any outer corner
  for (std::size_t r = 0; r <= t.rows.size(); ++r) {
    const std::size_t len = r < t.rows.size() ? t.rows[r].size() : 0;
    if (r > 0 && len >= t.rows[r - 1].size()) continue;
    if (r == t.rows.size()) {
      t.rows.emplace_back();
      t.rows.back().push_back(next);
      standard_tableaux_rec(t, next + 1, n, out);
      t.rows.pop_back();
    } else {
      t.rows[r].push_back(next);
      standard_tableaux_rec(t, next + 1, n, out);
      t.rows[r].pop_back();
    }
    if (r == t.rows.size()) break;
  }
}

}  // namespace

YoungDiagram shape(const StandardTableau& t) { return shape_of(t.rows); }
YoungDiagram shape(const RealTableau& t) { return shape_of(t.rows); }

bool is_standard(const StandardTableau& t) {
  if (!rows_standard_shape(t.rows)) return false;
  int n = 0;
  for (const auto& row : t.rows) n += static_cast<int>(row.size());
  std::vector<bool> seen(n + 1, false);
  for (const auto& row : t.rows)
    for (int v : row) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
    }
  return true;
}

void validate_diagram(const YoungDiagram& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1 || (i > 0 && d[i] > d[i - 1]))
      throw error(errc::invalid_tableau, "row lengths must be weakly decreasing and positive");
  }
}

RskPair rsk(const std::vector<int>& word) {
  distinct_guard(word);
  RskPair out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto [r, c] = row_insert(out.p.rows, word[i]);
    if (r == static_cast<int>(out.q.rows.size())) out.q.rows.emplace_back();
    out.q.rows[r].push_back(static_cast<int>(i) + 1);
    (void)c;
  }
  return out;
}

RealRskPair rsk(const RealPrefix& x) {
  {
    RealPrefix s = x;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw error(errc::distinct_violation, "values are not pairwise distinct");
  }
  RealRskPair out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [r, c] = row_insert(out.p.rows, x[i]);
    if (r == static_cast<int>(out.q.rows.size())) out.q.rows.emplace_back();
    out.q.rows[r].push_back(static_cast<int>(i) + 1);
    (void)c;
  }
  return out;
}

std::vector<int> rsk_inverse(const RskPair& pair) {
  if (!is_standard(pair.p) || !is_standard(pair.q))
    throw error(errc::invalid_tableau, "rsk_inverse needs standard tableaux");
  if (shape(pair.p) != shape(pair.q))
    throw error(errc::shape_mismatch, "P and Q have different shapes");
  auto p = pair.p.rows;
  auto q = pair.q.rows;
  int n = 0;
  for (const auto& row : p) n += static_cast<int>(row.size());
  std::vector<int> word(n);
  for (int entry = n; entry >= 1; --entry) {
    // entry is the current maximum of Q, so it sits at an outer corner
    int r = -1;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (!q[i].empty() && q[i].back() == entry) {
        r = static_cast<int>(i);
        break;
      }
    if (r < 0)
      throw error(errc::invalid_tableau, "recording tableau is not standard");
    q[r].pop_back();
    int v = p[r].back();
    p[r].pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
      // rightmost entry < v bumps back up
      auto it = std::lower_bound(p[rr].begin(), p[rr].end(), v);
      if (it == p[rr].begin())
        throw error(errc::invalid_tableau, "insertion tableau is not standard");
      std::swap(*std::prev(it), v);
    }
    word[entry - 1] = v;
  }
  // trim empty rows bookkeeping not needed; word is complete
  return word;
}

StandardTableau theta_label(const RealPrefix& x) { return rsk(x).q; }

ThetaPerpLabel theta_perp_label(const RealPrefix& x) {
  const std::vector<int> g = rank_word(x);
  ThetaPerpLabel out;
  out.p = rsk(g).p;
  out.representative.reserve(g.size());
  const double n = static_cast<double>(g.size());
  for (int v : g) out.representative.push_back(static_cast<double>(v) / n);
  return out;
}

std::vector<std::vector<std::vector<int>>> knuth_classes(int n, KnuthKind kind) {
  if (n < 1 || n > 8)
    throw error(errc::resource_guard, "knuth_classes is guarded at n <= 8");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::map<std::string, std::vector<std::vector<int>>> groups;
  do {
    const RskPair pq = rsk(w);
    const StandardTableau& key = kind == KnuthKind::direct ? pq.p : pq.q;
    groups[tableau_key(key)].push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::vector<std::vector<std::vector<int>>> out;
  out.reserve(groups.size());
  for (auto& [key, cls] : groups) out.push_back(std::move(cls));
  return out;
}

std::uint64_t tableaux_count(const YoungDiagram& d) {
  validate_diagram(d);
  int n = 0;
  for (int row : d) n += row;
  if (n > 20)
    throw error(errc::resource_guard, "hook length formula overflows past n = 20");
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  // conj[j] = column height at column j
  std::vector<int> conj(d.empty() ? 0 : d[0], 0);
  for (int row : d)
    for (int j = 0; j < row; ++j) ++conj[j];
  std::uint64_t hooks = 1;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int j = 0; j < d[i]; ++j)
      hooks *= static_cast<std::uint64_t>(d[i] - j + conj[j] - static_cast<int>(i) - 1);
  return fact / hooks;
}

std::vector<YoungDiagram> partitions_of(int n) {
  std::vector<YoungDiagram> out;
  YoungDiagram cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<StandardTableau> all_standard_tableaux(int n) {
  if (n < 0 || n > 10)
    throw error(errc::resource_guard, "all_standard_tableaux is guarded at n <= 10");
  std::vector<StandardTableau> out;
  StandardTableau t;
  standard_tableaux_rec(t, 1, n, out);
  return out;
}

YoungDiagram plancherel_sample(int n, std::uint64_t seed) {
  return shape(rsk(sample_prefix(Law::uniform, static_cast<std::size_t>(n), seed)).q);
}

std::vector<DistinguishRow> distinguishability_experiment(
    const std::vector<int>& n_values, std::int64_t trials,
    std::int64_t min_accepted, std::uint64_t seed) {
  std::vector<DistinguishRow> report;
  report.reserve(n_values.size());
  for (int n : n_values) {
    const std::uint64_t ref_seed = trial_seed(seed, 0x5eedULL + n);
    const RealPrefix ref = sample_prefix(Law::uniform, n, ref_seed);
    const StandardTableau q_ref = theta_label(ref);
    const std::uint64_t stream = trial_seed(seed, static_cast<std::uint64_t>(n));
    std::vector<double> accepted_x1;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
      const RealPrefix y =
          sample_prefix(Law::uniform, n, trial_seed(stream, trial));
      if (theta_label(y) == q_ref) accepted_x1.push_back(y[0]);
    }
    DistinguishRow row;
    row.n = n;
    row.trials = trials;
    row.accepted = static_cast<std::int64_t>(accepted_x1.size());
    row.acceptance_rate =
        trials > 0 ? static_cast<double>(row.accepted) / static_cast<double>(trials) : 0.0;
    row.has_data = row.accepted >= std::max<std::int64_t>(min_accepted, 1);
    row.iqr_x1 = row.has_data ? iqr(accepted_x1)
                              : std::numeric_limits<double>::quiet_NaN();
    report.push_back(row);
  }
  return report;
}

}  // namespace shiftcode
