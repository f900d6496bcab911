#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "shiftcode/errors.hpp"
#include "shiftcode/graphtransfer.hpp"
#include "shiftcode/permtree.hpp"
#include "shiftcode/rankcode.hpp"

using namespace shiftcode;

namespace {

RealPrefix word_to_prefix(const SimplexWord& w) {
  RealPrefix x(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    x[i] = (static_cast<double>(w[i]) + 1.0) / (static_cast<double>(w.size()) + 1.0);
  return x;
}

std::vector<SimplexWord> word_path(const SimplexWord& w) {
  std::vector<SimplexWord> path{{}};
  const RealPrefix x = word_to_prefix(w);
  for (std::size_t len = 1; len <= w.size(); ++len)
    path.push_back(simplex_word(RealPrefix(x.begin(), x.begin() + len)));
  return path;
}

// Young lattice restricted to at most two columns <-> order ideals of the
// two-column grid poset {0..h-1} x {0,1} ordered componentwise.
IdealGraph two_column_grid(int h) {
  std::vector<std::pair<int, int>> less;
  // element (i, j) -> index 2 * i + j
  for (int i = 0; i < h; ++i) {
    less.emplace_back(2 * i, 2 * i + 1);  // (i,0) < (i,1)
    if (i + 1 < h) {
      less.emplace_back(2 * i, 2 * (i + 1));
      less.emplace_back(2 * i + 1, 2 * (i + 1) + 1);
    }
  }
  return IdealGraph(2 * h, less);
}

// Diagram with <= 2 columns -> ideal of the two-column grid.
std::uint64_t diagram_to_ideal(const YoungDiagram& d) {
  std::uint64_t v = 0;
  for (std::size_t r = 0; r < d.size(); ++r)
    for (int j = 0; j < d[r]; ++j) v |= 1ULL << (2 * r + j);
  return v;
}

}  // namespace

TEST_CASE("Young graph covers and covered_by") {
  const YoungGraph yg;
  CHECK(yg.covers({}) == std::vector<YoungDiagram>{{1}});
  const auto up = yg.covers({2, 1});
  CHECK(up == std::vector<YoungDiagram>{{3, 1}, {2, 2}, {2, 1, 1}});
  const auto down = yg.covered_by({2, 2});
  CHECK(down == std::vector<YoungDiagram>{{2, 1}});
  CHECK(yg.vertices_at(4).size() == 5);
  CHECK(yg.level_of({3, 2, 1}) == 6);
}

TEST_CASE("two_interval examples") {
  const YoungGraph yg;
  CHECK(two_interval(yg, {}, {2}) == std::vector<YoungDiagram>{{1}});
  const auto diamond = two_interval(yg, YoungDiagram{1}, YoungDiagram{2, 1});
  CHECK(diamond.size() == 2);
  CHECK(std::find(diamond.begin(), diamond.end(), YoungDiagram{2}) != diamond.end());
  CHECK(std::find(diamond.begin(), diamond.end(), YoungDiagram{1, 1}) != diamond.end());
  CHECK_THROWS_AS(two_interval(yg, YoungDiagram{2}, YoungDiagram{1, 1, 1}), error);
  CHECK_THROWS_AS(two_interval(yg, YoungDiagram{1}, YoungDiagram{2}), error);
}

TEST_CASE("two_interval on the factorial tree is always a chain") {
  const FactorialTree ft;
  for (const auto& c : ft.vertices_at(3)) {
    const SimplexWord b = ft.covered_by(c)[0];
    const SimplexWord a = ft.covered_by(b)[0];
    CHECK(two_interval(ft, a, c) == std::vector<SimplexWord>{b});
  }
}

TEST_CASE("Young graph 2-intervals never exceed two intermediates, levels <= 8") {
  const YoungGraph yg;
  for (int level = 0; level <= 6; ++level)
    for (const auto& a : yg.vertices_at(level))
      for (const auto& b : yg.covers(a))
        for (const auto& c : yg.covers(b)) {
          const auto mids = two_interval(yg, a, c);
          CHECK(mids.size() >= 1);
          CHECK(mids.size() <= 2);
        }
}

TEST_CASE("markov_transfer_step examples") {
  const YoungGraph yg;
  CHECK(markov_transfer_step(yg, {}, {1}, {2}) == YoungDiagram{1});
  CHECK(markov_transfer_step(yg, YoungDiagram{1}, YoungDiagram{2}, YoungDiagram{2, 1}) ==
        YoungDiagram{1, 1});
  CHECK(markov_transfer_step(yg, YoungDiagram{1}, YoungDiagram{1, 1}, YoungDiagram{2, 1}) ==
        YoungDiagram{2});
  CHECK_THROWS_AS(
      markov_transfer_step(yg, YoungDiagram{1, 1}, YoungDiagram{2}, YoungDiagram{3}),
      error);
}

TEST_CASE("transfer_path examples on the Young graph") {
  const YoungGraph yg;
  const std::vector<YoungDiagram> path{{}, {1}, {2}, {2, 1}};
  CHECK(transfer_path(yg, path) == std::vector<YoungDiagram>{{}, {1}, {1, 1}});
  const std::vector<YoungDiagram> row{{}, {1}, {2}, {3}, {4}};
  CHECK(transfer_path(yg, row) == std::vector<YoungDiagram>{{}, {1}, {2}, {3}});
  CHECK_THROWS_AS(transfer_path(yg, {{}}), error);
}

TEST_CASE("jdt_promotion examples") {
  CHECK(jdt_promotion({{{1, 2, 3}}}).rows == std::vector<std::vector<int>>{{1, 2}});
  CHECK(jdt_promotion({{{1, 2}, {3}}}).rows == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(jdt_promotion({{{1, 3}, {2}}}).rows == std::vector<std::vector<int>>{{1, 2}});
  CHECK_THROWS_AS(jdt_promotion({{{1}}}), error);
  CHECK_THROWS_AS(jdt_promotion({{{2, 1}}}), error);
}

TEST_CASE("paths_as_tableau and roundtrip") {
  const std::vector<YoungDiagram> path{{}, {1}, {2}, {2, 1}};
  CHECK(paths_as_tableau(path).rows == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(tableau_as_path({{{1, 2}, {3}}}) == path);
  for (int n = 0; n <= 8; ++n)
    for (const auto& t : all_standard_tableaux(n))
      CHECK(paths_as_tableau(tableau_as_path(t)) == t);
  CHECK_THROWS_AS(paths_as_tableau({{}, {2}}), error);
}

TEST_CASE("Markov transfer equals jeu-de-taquin promotion, <= 7 cells") {
  const YoungGraph yg;
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : all_standard_tableaux(n)) {
      const auto promoted = transfer_path(yg, tableau_as_path(t));
      CHECK(paths_as_tableau(promoted) == jdt_promotion(t));
    }
}

TEST_CASE("locality: each step depends only on its own three vertices") {
  const YoungGraph yg;
  for (const auto& t : all_standard_tableaux(7)) {
    const auto path = tableau_as_path(t);
    const auto full = transfer_path(yg, path);
    for (std::size_t cut = 2; cut < path.size(); ++cut) {
      const std::vector<YoungDiagram> prefix(path.begin(), path.begin() + cut + 1);
      const auto partial = transfer_path(yg, prefix);
      for (std::size_t i = 0; i < partial.size(); ++i) CHECK(partial[i] == full[i]);
    }
  }
}

TEST_CASE("factorial tree transfer agrees with translation and rank transfer") {
  const FactorialTree ft;
  for (int n = 2; n <= 6; ++n)
    for (const auto& v : enumerate_level(n)) {
      const auto path = word_path(v.word);
      const auto shifted_path = transfer_path(ft, path);
      // the transferred path is the path of the shifted sequence
      const RealPrefix x = word_to_prefix(v.word);
      const RealPrefix sx(x.begin() + 1, x.end());
      CHECK(shifted_path == word_path(simplex_word(sx)));
      // and matches the rank-code transfer through order_permutation
      CHECK(shifted_path.back() == order_permutation(transfer(encode(x))));
    }
}

TEST_CASE("factorial tree covers/covered_by are consistent") {
  const FactorialTree ft;
  for (const auto& v : ft.vertices_at(3)) {
    const auto children = ft.covers(v);
    CHECK(children.size() == 4);
    for (const auto& ch : children) CHECK(ft.covered_by(ch)[0] == v);
  }
}

TEST_CASE("ideal graph of the two-column grid matches the 2-column Young lattice") {
  const int h = 5;
  const IdealGraph ig = two_column_grid(h);
  const YoungGraph yg;
  for (int level = 0; level <= 8; ++level) {
    // collect <= 2-column diagrams fitting in h rows
    std::set<std::uint64_t> from_young;
    for (const auto& d : yg.vertices_at(level)) {
      if (!d.empty() && d[0] > 2) continue;
      if (static_cast<int>(d.size()) > h) continue;
      from_young.insert(diagram_to_ideal(d));
      // covering relations agree
      for (const auto& u : yg.covers(d)) {
        if (u[0] > 2 || static_cast<int>(u.size()) > h) continue;
        const auto ups = ig.covers(diagram_to_ideal(d));
        CHECK(std::find(ups.begin(), ups.end(), diagram_to_ideal(u)) != ups.end());
      }
    }
    const auto ideals = ig.vertices_at(level);
    CHECK(std::set<std::uint64_t>(ideals.begin(), ideals.end()) == from_young);
  }
}

TEST_CASE("ideal graph transfer matches the Young graph on 2-column paths") {
  const IdealGraph ig = two_column_grid(6);
  const YoungGraph yg;
  // all 2-column Young paths of length 6, transferred in both models
  std::vector<std::vector<YoungDiagram>> paths;
  auto extend = [&](auto&& self, std::vector<YoungDiagram>& path) -> void {
    if (path.size() == 7) {
      paths.push_back(path);
      return;
    }
    for (const auto& u : yg.covers(path.back())) {
      if (u[0] > 2) continue;
      path.push_back(u);
      self(self, path);
      path.pop_back();
    }
  };
  std::vector<YoungDiagram> seed{{}};
  extend(extend, seed);
  CHECK(!paths.empty());
  for (const auto& path : paths) {
    std::vector<std::uint64_t> ideal_path;
    for (const auto& d : path) ideal_path.push_back(diagram_to_ideal(d));
    const auto young_out = transfer_path(yg, path);
    const auto ideal_out = transfer_path(ig, ideal_path);
    REQUIRE(young_out.size() == ideal_out.size());
    for (std::size_t i = 0; i < young_out.size(); ++i)
      CHECK(diagram_to_ideal(young_out[i]) == ideal_out[i]);
  }
}

TEST_CASE("ideal graph 2-intervals obey the distributive lattice bound") {
  const IdealGraph ig = two_column_grid(4);
  for (int level = 0; level <= 6; ++level)
    for (const auto a : ig.vertices_at(level))
      for (const auto b : ig.covers(a))
        for (const auto c : ig.covers(b)) {
          const auto mids = two_interval(ig, a, c);
          CHECK(mids.size() >= 1);
          CHECK(mids.size() <= 2);
        }
}

TEST_CASE("stationary chain transfer is the left shift of edge labels") {
  const StationaryChain chain{3};
  const std::vector<int> path{0, 2, 1, 1, 0, 2};
  CHECK(chain.transfer(path) == std::vector<int>{2, 1, 1, 0, 2});
  CHECK_THROWS_AS(chain.transfer({1}), error);
  CHECK_THROWS_AS(chain.transfer({0, 7}), error);
}

TEST_CASE("ideal graph rejects cyclic relations") {
  CHECK_THROWS_AS(IdealGraph(2, {{0, 1}, {1, 0}}), error);
}
