#ifndef SHIFTCODE_GRAPHTRANSFER_HPP
#define SHIFTCODE_GRAPHTRANSFER_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <vector>

#include "shiftcode/errors.hpp"
#include "shiftcode/permtree.hpp"
#include "shiftcode/tableaux.hpp"

namespace shiftcode {

/// Behavior contract of an N-graded locally finite graph with a single
/// root at level 0. Edges connect consecutive levels only; covers(v) lists
/// the upper neighbours, covered_by(v) the lower ones. All queries pure.
template <class G>
concept GradedGraph = requires(const G& g, const typename G::vertex_type& v,
                               int level) {
  { g.root() } -> std::convertible_to<typename G::vertex_type>;
  { g.level_of(v) } -> std::convertible_to<int>;
  { g.vertices_at(level) } -> std::convertible_to<std::vector<typename G::vertex_type>>;
  { g.covers(v) } -> std::convertible_to<std::vector<typename G::vertex_type>>;
  { g.covered_by(v) } -> std::convertible_to<std::vector<typename G::vertex_type>>;
};

/// The Young lattice: vertices at level n are the partitions of n, edges
/// add one cell.
struct YoungGraph {
  using vertex_type = YoungDiagram;

  vertex_type root() const { return {}; }
  int level_of(const vertex_type& v) const;
  std::vector<vertex_type> vertices_at(int level) const;
  std::vector<vertex_type> covers(const vertex_type& v) const;
  std::vector<vertex_type> covered_by(const vertex_type& v) const;
};

/// Hasse diagram of the order ideals of a finite poset, graded by ideal
/// size. Vertices are bitmasks over the poset elements. Any distributive
/// lattice of this kind has 2-intervals with one or two intermediates.
class IdealGraph {
 public:
  using vertex_type = std::uint64_t;

  /// Build from strict covering or order pairs (a < b); the relation is
  /// closed transitively. At most 64 elements.
  IdealGraph(int n_elements, const std::vector<std::pair<int, int>>& less_pairs);

  vertex_type root() const { return 0; }
  int level_of(const vertex_type& v) const;
  std::vector<vertex_type> vertices_at(int level) const;
  std::vector<vertex_type> covers(const vertex_type& v) const;
  std::vector<vertex_type> covered_by(const vertex_type& v) const;

  bool is_ideal(vertex_type v) const;
  int size() const { return n_; }

 private:
  int n_;
  std::vector<std::uint64_t> below_;  // below_[x] = strict down-set of x
};

/// The factorial tree as a graded graph; the root is the empty word.
struct FactorialTree {
  using vertex_type = SimplexWord;

  vertex_type root() const { return {}; }
  int level_of(const vertex_type& v) const { return static_cast<int>(v.size()); }
  std::vector<vertex_type> vertices_at(int level) const;
  std::vector<vertex_type> covers(const vertex_type& v) const;
  std::vector<vertex_type> covered_by(const vertex_type& v) const;
};

/// Stationary test graph: one vertex per level and `labels` parallel edges
/// between consecutive levels, identified across levels by fixed
/// isomorphisms. Paths are edge-label sequences; the distinguished
/// transfer degenerates to the ordinary shift.
struct StationaryChain {
  int labels = 1;

  /// Maps each edge through the level-(n+1) -> level-n identification.
  std::vector<int> transfer(const std::vector<int>& edge_path) const;
};

/// The vertices strictly between a and c, where level(c) = level(a) + 2.
/// Throws error(errc::interval_error) when a and c are not comparable or
/// the level gap is wrong.
template <GradedGraph G>
std::vector<typename G::vertex_type> two_interval(
    const G& g, const typename G::vertex_type& a,
    const typename G::vertex_type& c) {
  if (g.level_of(c) != g.level_of(a) + 2)
    throw error(errc::interval_error, "two_interval: level gap is not 2");
  std::vector<typename G::vertex_type> mids;
  for (const auto& b : g.covers(a)) {
    auto up = g.covers(b);
    if (std::find(up.begin(), up.end(), c) != up.end()) mids.push_back(b);
  }
  if (mids.empty())
    throw error(errc::interval_error, "two_interval: vertices not comparable");
  return mids;
}

/// One step of the distinguished Markov transfer: the new vertex is the
/// intermediate of [prev_new, old_top] different from old_mid when one
/// exists, otherwise old_mid itself.
template <GradedGraph G>
typename G::vertex_type markov_transfer_step(
    const G& g, const typename G::vertex_type& prev_new,
    const typename G::vertex_type& old_mid,
    const typename G::vertex_type& old_top) {
  std::vector<typename G::vertex_type> mids;
  try {
    mids = two_interval(g, prev_new, old_top);
  } catch (const error&) {
    throw error(errc::transfer_state,
                "markov_transfer_step: [prev_new, old_top] is not a 2-interval");
  }
  for (const auto& b : mids)
    if (!(b == old_mid)) return b;
  if (std::find(mids.begin(), mids.end(), old_mid) == mids.end())
    throw error(errc::transfer_state,
                "markov_transfer_step: old_mid not inside the 2-interval");
  return old_mid;
}

/// Transfer of a root-anchored path: fold markov_transfer_step from the
/// root. Output is one vertex shorter. On the Young graph this is
/// jeu-de-taquin promotion read through paths.
template <GradedGraph G>
std::vector<typename G::vertex_type> transfer_path(
    const G& g, const std::vector<typename G::vertex_type>& path) {
  if (path.size() < 2)
    throw error(errc::cannot_shrink, "transfer_path: need at least two vertices");
  std::vector<typename G::vertex_type> out;
  out.reserve(path.size() - 1);
  out.push_back(g.root());
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    out.push_back(markov_transfer_step(g, out.back(), path[i], path[i + 1]));
  return out;
}

/// On the factorial tree the distinguished transfer is the translation map
/// applied along the shifted path, not the Markov fold.
std::vector<SimplexWord> transfer_path(const FactorialTree& g,
                                       const std::vector<SimplexWord>& path);

/// Classical promotion: delete entry 1, slide the hole to an outer corner
/// (always moving the smaller of the right/below neighbours), remove the
/// corner and decrement every entry.
StandardTableau jdt_promotion(const StandardTableau& t);

/// Young-graph path -> standard tableau: entry i sits in the cell added at
/// step i.
StandardTableau paths_as_tableau(const std::vector<YoungDiagram>& path);

/// Inverse of paths_as_tableau.
std::vector<YoungDiagram> tableau_as_path(const StandardTableau& t);

}  // namespace shiftcode

#endif  // SHIFTCODE_GRAPHTRANSFER_HPP
