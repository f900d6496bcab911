#include "shiftcode/graphtransfer.hpp"

#include <bit>
#include <string>

namespace shiftcode {

int YoungGraph::level_of(const vertex_type& v) const {
  int n = 0;
  for (int row : v) n += row;
  return n;
}

std::vector<YoungGraph::vertex_type> YoungGraph::vertices_at(int level) const {
  return partitions_of(level);
}

std::vector<YoungGraph::vertex_type> YoungGraph::covers(const vertex_type& v) const {
  std::vector<vertex_type> up;
  for (std::size_t r = 0; r <= v.size(); ++r) {
    const int len = r < v.size() ? v[r] : 0;
    if (r > 0 && len >= v[r - 1]) continue;  // cell not addable here
    vertex_type w = v;
    if (r == v.size())
      w.push_back(1);
    else
      ++w[r];
    up.push_back(std::move(w));
    if (r == v.size()) break;
  }
  return up;
}

std::vector<YoungGraph::vertex_type> YoungGraph::covered_by(const vertex_type& v) const {
  std::vector<vertex_type> down;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const int below = r + 1 < v.size() ? v[r + 1] : 0;
    if (v[r] - 1 < below) continue;  // cell not removable here
    vertex_type w = v;
    --w[r];
    if (w[r] == 0) w.pop_back();
    down.push_back(std::move(w));
  }
  return down;
}

IdealGraph::IdealGraph(int n_elements,
                       const std::vector<std::pair<int, int>>& less_pairs)
    : n_(n_elements), below_(n_elements, 0) {
  if (n_elements < 0 || n_elements > 64)
    throw error(errc::resource_guard, "IdealGraph supports at most 64 elements");
  for (auto [a, b] : less_pairs) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
      throw error(errc::parse_error, "bad poset pair");
    below_[b] |= 1ULL << a;
  }
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n_; ++x) {
      std::uint64_t acc = below_[x];
      std::uint64_t rest = below_[x];
      while (rest) {
        const int y = std::countr_zero(rest);
        rest &= rest - 1;
        acc |= below_[y];
      }
      if (acc != below_[x]) {
        below_[x] = acc;
        changed = true;
      }
    }
  }
  for (int x = 0; x < n_; ++x)
    if (below_[x] & (1ULL << x))
      throw error(errc::parse_error, "poset relation has a cycle");
}

bool IdealGraph::is_ideal(vertex_type v) const {
  std::uint64_t rest = v;
  while (rest) {
    const int x = std::countr_zero(rest);
    rest &= rest - 1;
    if ((below_[x] & v) != below_[x]) return false;
  }
  return true;
}

int IdealGraph::level_of(const vertex_type& v) const { return std::popcount(v); }

std::vector<IdealGraph::vertex_type> IdealGraph::vertices_at(int level) const {
  // BFS level by level from the empty ideal
  std::vector<vertex_type> cur{0};
  for (int l = 0; l < level; ++l) {
    std::vector<vertex_type> next;
    for (vertex_type v : cur)
      for (vertex_type w : covers(v))
        if (std::find(next.begin(), next.end(), w) == next.end())
          next.push_back(w);
    cur = std::move(next);
  }
  return cur;
}

std::vector<IdealGraph::vertex_type> IdealGraph::covers(const vertex_type& v) const {
  if (!is_ideal(v))
    throw error(errc::interval_error, "vertex is not an order ideal");
  std::vector<vertex_type> up;
  for (int x = 0; x < n_; ++x) {
    if (v & (1ULL << x)) continue;
    if ((below_[x] & v) == below_[x]) up.push_back(v | (1ULL << x));
  }
  return up;
}

std::vector<IdealGraph::vertex_type> IdealGraph::covered_by(const vertex_type& v) const {
  if (!is_ideal(v))
    throw error(errc::interval_error, "vertex is not an order ideal");
  std::vector<vertex_type> down;
  std::uint64_t rest = v;
  while (rest) {
    const int x = std::countr_zero(rest);
    rest &= rest - 1;
    const vertex_type w = v & ~(1ULL << x);
    if (is_ideal(w)) down.push_back(w);
  }
  return down;
}

std::vector<FactorialTree::vertex_type> FactorialTree::vertices_at(int level) const {
  if (level == 0) return {SimplexWord{}};
  std::vector<SimplexWord> out;
  for (auto& v : enumerate_level(level)) out.push_back(std::move(v.word));
  return out;
}

std::vector<FactorialTree::vertex_type> FactorialTree::covers(const vertex_type& v) const {
  // children: append the new top rank n, or insert a value and re-open ranks
  const int n = static_cast<int>(v.size());
  std::vector<vertex_type> up;
  for (int newk = 0; newk <= n; ++newk) {
    vertex_type w;
    w.reserve(v.size() + 1);
    for (int x : v) w.push_back(x >= newk ? x + 1 : x);
    w.push_back(newk);
    up.push_back(std::move(w));
  }
  return up;
}

std::vector<FactorialTree::vertex_type> FactorialTree::covered_by(const vertex_type& v) const {
  if (v.empty()) return {};
  if (v.size() == 1) return {SimplexWord{}};
  return {tree_parent(TreeVertex{static_cast<int>(v.size()), v}).word};
}

std::vector<int> StationaryChain::transfer(const std::vector<int>& edge_path) const {
  if (edge_path.size() < 2)
    throw error(errc::cannot_shrink, "transfer needs at least two edges");
  std::vector<int> out;
  out.reserve(edge_path.size() - 1);
  for (std::size_t i = 1; i < edge_path.size(); ++i) {
    const int label = edge_path[i];
    if (label < 0 || label >= labels)
      throw error(errc::parse_error, "edge label out of range");
    // the level isomorphism identifies same-labeled edges
    out.push_back(label);
  }
  return out;
}

std::vector<SimplexWord> transfer_path(const FactorialTree& g,
                                       const std::vector<SimplexWord>& path) {
  if (path.size() < 2)
    throw error(errc::cannot_shrink, "transfer_path: need at least two vertices");
  std::vector<SimplexWord> out;
  out.reserve(path.size() - 1);
  out.push_back(g.root());
  for (std::size_t i = 2; i < path.size(); ++i)
    out.push_back(translation(path[i]));
  return out;
}

StandardTableau jdt_promotion(const StandardTableau& t) {
  if (!is_standard(t))
    throw error(errc::invalid_tableau, "jdt_promotion needs a standard tableau");
  int n = 0;
  for (const auto& row : t.rows) n += static_cast<int>(row.size());
  if (n < 2)
    throw error(errc::cannot_shrink, "jdt_promotion needs at least two cells");
  auto rows = t.rows;
  // hole starts where entry 1 sits: cell (0,0)
  std::size_t r = 0, c = 0;
  for (;;) {
    const bool has_right = c + 1 < rows[r].size();
    const bool has_below = r + 1 < rows.size() && c < rows[r + 1].size();
    if (!has_right && !has_below) break;
    if (!has_below || (has_right && rows[r][c + 1] < rows[r + 1][c])) {
      rows[r][c] = rows[r][c + 1];
      ++c;
    } else {
      rows[r][c] = rows[r + 1][c];
      ++r;
    }
  }
  rows[r].pop_back();
  if (rows[r].empty()) rows.erase(rows.begin() + r);
  for (auto& row : rows)
    for (int& v : row) --v;
  return StandardTableau{rows};
}

StandardTableau paths_as_tableau(const std::vector<YoungDiagram>& path) {
  if (path.empty() || !path.front().empty())
    throw error(errc::parse_error, "Young path must start at the empty diagram");
  StandardTableau t;
  for (std::size_t i = 1; i < path.size(); ++i) {
    validate_diagram(path[i]);
    const YoungDiagram& prev = path[i - 1];
    const YoungDiagram& next = path[i];
    // locate the added cell
    int row = -1;
    if (next.size() == prev.size() + 1 && next.back() == 1) {
      bool same = true;
      for (std::size_t r2 = 0; r2 < prev.size(); ++r2)
        if (prev[r2] != next[r2]) same = false;
      if (same) row = static_cast<int>(prev.size());
    }
    if (row < 0 && next.size() == prev.size()) {
      int diffs = 0;
      for (std::size_t r2 = 0; r2 < prev.size(); ++r2)
        if (prev[r2] != next[r2]) {
          ++diffs;
          if (next[r2] == prev[r2] + 1) row = static_cast<int>(r2);
        }
      if (diffs != 1) row = -1;
    }
    if (row < 0)
      throw error(errc::parse_error, "consecutive diagrams do not differ by one cell");
    if (row == static_cast<int>(t.rows.size())) t.rows.emplace_back();
    t.rows[row].push_back(static_cast<int>(i));
  }
  return t;
}

std::vector<YoungDiagram> tableau_as_path(const StandardTableau& t) {
  if (!is_standard(t))
    throw error(errc::invalid_tableau, "not a standard tableau");
  int n = 0;
  for (const auto& row : t.rows) n += static_cast<int>(row.size());
  std::vector<YoungDiagram> path(n + 1);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (int v : t.rows[r])
      for (int step = v; step <= n; ++step) {
        auto& d = path[step];
        if (d.size() <= r) d.resize(r + 1, 0);
        ++d[r];
      }
  return path;
}

}  // namespace shiftcode
