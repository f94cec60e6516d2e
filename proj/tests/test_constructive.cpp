#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "flexcolor/constructive.hpp"
#include "flexcolor/exact.hpp"
#include "flexcolor/graph.hpp"
#include "flexcolor/rng.hpp"
#include "oracle.hpp"

using namespace flexcolor;

namespace {

ListAssignment lists_of(const std::vector<std::vector<int>>& lists) {
  std::vector<ColorSet> cs;
  for (const auto& l : lists) cs.push_back(ColorSet::from_vector(l));
  return ListAssignment(cs);
}

Request request_of(int n, const std::vector<std::pair<int, int>>& entries) {
  Request r(n);
  for (auto& [v, c] : entries) r.add(v, c);
  return r;
}

void check_outcome(const MultipartiteGraph& g, const ListAssignment& L,
                   const Request& r, const FlexColorOutcome& out) {
  CHECK(is_proper(g, out.coloring));
  CHECK(respects_lists(g, L, out.coloring));
  CHECK(satisfied_count(r, out.coloring) == out.satisfied);
  CHECK(out.satisfied >= out.guarantee);
}

ListAssignment random_k_assignment(const MultipartiteGraph& g, int k, int pot,
                                   Rng& rng) {
  std::vector<ColorSet> lists(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    lists[v] = ColorSet::from_vector(rng.sample(pot, k));
  return ListAssignment(lists);
}

Request random_request(const MultipartiteGraph& g, const ListAssignment& L,
                       int d, Rng& rng) {
  Request r(g.num_vertices());
  for (int v : rng.sample(g.num_vertices(), d)) {
    auto cols = L.list(v).to_vector();
    r.add(v, cols[rng.below_int(static_cast<int>(cols.size()))]);
  }
  return r;
}

}  // namespace

// ---- multipartite candidate coloring ---------------------------------------

TEST_CASE("edge with identical lists and a shared requested color") {
  MultipartiteGraph g({1, 1});
  ListAssignment L = lists_of({{1, 2}, {1, 2}});
  Request r = request_of(2, {{0, 1}, {1, 1}});
  auto out = multipartite_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.guarantee == 1);
  CHECK(out.satisfied >= 1);
  // The exact maximum here is 1: both endpoints cannot share the color.
  CHECK(oracle::naive_max_satisfied(g, L, r) == 1);
}

TEST_CASE("last-part requests outside the first-parts pot are all granted") {
  // P covers colors 0,1; the last part requests colors 5,6 only.
  MultipartiteGraph g({1, 2});
  ListAssignment L = lists_of({{0, 1}, {0, 5}, {1, 6}});
  Request r = request_of(3, {{1, 5}, {2, 6}});
  auto out = multipartite_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.satisfied == 2);  // everything in W is granted
}

TEST_CASE("list size validation for the candidate colorer") {
  MultipartiteGraph g({1, 2});
  ListAssignment L = lists_of({{0, 1, 2}, {0, 1}, {1, 2}});
  Request r = request_of(3, {{0, 0}});
  CHECK_THROWS_AS(multipartite_flex_color(g, L, r), InputError);
}

TEST_CASE("unsorted part orders are normalized internally") {
  // Parts (3,1): s = 1, lists of size 2.
  MultipartiteGraph g({3, 1});
  ListAssignment L = lists_of({{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  Request r = request_of(4, {{0, 0}, {3, 0}});
  auto out = multipartite_flex_color(g, L, r);
  check_outcome(g, L, r, out);
}

TEST_CASE("K_{2,2} with 3-lists over seeded trials meets the half floor") {
  MultipartiteGraph g({2, 2});
  for (int t = 0; t < 1000; ++t) {
    Rng rng(Rng::mix(4242, t));
    ListAssignment L = random_k_assignment(g, 3, 3 + rng.below_int(4), rng);
    Request r = random_request(g, L, 4, rng);
    auto out = multipartite_flex_color(g, L, r);
    check_outcome(g, L, r, out);
    CHECK(out.guarantee == 2);
    CHECK(out.satisfied <= oracle::naive_max_satisfied(g, L, r));
  }
}

TEST_CASE("candidate colorings across shapes, never above the exact optimum") {
  std::vector<std::vector<int>> shapes = {
      {1, 2}, {2, 2}, {1, 1, 2}, {2, 2, 2}, {1, 1, 1, 2}};
  for (const auto& shape : shapes) {
    MultipartiteGraph g(shape);
    int s = 0;
    auto sorted = g.sorted_sizes();
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) s += sorted[i];
    int nv = g.num_vertices();
    for (int t = 0; t < 600; ++t) {
      Rng rng(Rng::mix(0xD00D + shape.size(), t));
      ListAssignment L =
          random_k_assignment(g, s + 1, s + 1 + rng.below_int(4), rng);
      Request r = random_request(g, L, 1 + (t % nv), rng);
      auto out = multipartite_flex_color(g, L, r);
      check_outcome(g, L, r, out);
      CHECK(out.guarantee ==
            (r.domain_size() + g.num_parts() - 1) / g.num_parts());
      if (nv <= 8) {
        auto exact = max_satisfied(g, L, r);
        REQUIRE(exact.status == SatStatus::Solved);
        CHECK(out.satisfied <= exact.best);
      }
    }
  }
}

// ---- star completion ---------------------------------------------------------

TEST_CASE("star obstruction triples") {
  MultipartiteGraph g({1, 2});
  auto obstructed =
      star_obstruction_check(g, lists_of({{1, 2}, {1}, {2}}));
  CHECK(std::holds_alternative<StarObstruction>(obstructed));

  auto center_spare =
      star_obstruction_check(g, lists_of({{1, 2, 3}, {1}, {2}}));
  REQUIRE(std::holds_alternative<Coloring>(center_spare));
  CHECK(std::get<Coloring>(center_spare).color(0) == 3);

  MultipartiteGraph g3({1, 3});
  auto repeated =
      star_obstruction_check(g3, lists_of({{1, 2, 3}, {1}, {1}, {2}}));
  REQUIRE(std::holds_alternative<Coloring>(repeated));
  Coloring f = std::get<Coloring>(repeated);
  CHECK(is_proper(g3, f));
}

TEST_CASE("star check agrees with brute force on every canonical instance") {
  // n <= 4, pot <= 5: center lists are {0..c-1} by first appearance; leaf
  // lists nondecreasing with consecutive new colors.
  for (int n = 1; n <= 4; ++n) {
    MultipartiteGraph g({1, n});
    for (int center_size = n; center_size <= 5; ++center_size) {
      std::vector<ColorSet> lists(1 + n);
      lists[0] = ColorSet::first_n(center_size);
      long long checked = 0;
      std::function<void(int, int)> rec = [&](int leaf, int max_used) {
        if (leaf == n) {
          ListAssignment L(lists);
          auto res = star_obstruction_check(g, L);
          bool colorable = oracle::naive_is_colorable(g, L);
          if (std::holds_alternative<Coloring>(res)) {
            CHECK(colorable);
            Coloring f = std::get<Coloring>(res);
            CHECK(is_proper(g, f));
            CHECK(respects_lists(g, L, f));
          } else {
            CHECK(!colorable);
          }
          ++checked;
          return;
        }
        int hi = std::min(std::min(max_used + 1 + 4, 4), max_used + 1 + 4);
        // enumerate nonempty subsets of {0..min(4, max_used+1+size)} with
        // consecutive new colors
        for (std::uint32_t mask = 1; mask < 32; ++mask) {
          ColorSet s;
          int top = -1;
          bool ok = true;
          for (int c = 0; c < 5; ++c)
            if ((mask >> c) & 1) {
              if (c > max_used && c > top + 1 && c != max_used + 1) ok = false;
              if (c > max_used && top >= max_used && c != top + 1 &&
                  top > max_used)
                ok = false;
              s.set(c);
              top = c;
            }
          // recompute the consecutive-new-colors condition cleanly
          ok = true;
          int seen = max_used;
          for (int c = 0; c < 5; ++c)
            if ((mask >> c) & 1) {
              if (c > seen + 1) {
                ok = false;
                break;
              }
              if (c == seen + 1) ++seen;
            }
          if (!ok) continue;
          (void)hi;
          lists[1 + leaf] = s;
          rec(leaf + 1, seen);
        }
      };
      rec(0, center_size - 1);
      CHECK(checked > 0);
    }
  }
}

// ---- degree completion ---------------------------------------------------------

TEST_CASE("degree-sized bipartite instances always color") {
  MultipartiteGraph k22({2, 2});
  Coloring f = degree_color_bipartite(k22, lists_of({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  CHECK(is_proper(k22, f));

  MultipartiteGraph k23({2, 3});
  Coloring f23 = degree_color_bipartite(
      k23, lists_of({{0, 1, 2}, {3, 4, 5}, {0, 3}, {1, 4}, {2, 5}}));
  CHECK(is_proper(k23, f23));

  MultipartiteGraph k33({3, 3});
  Rng rng(777);
  for (int t = 0; t < 2000; ++t) {
    ListAssignment L = random_k_assignment(k33, 3, 3 + rng.below_int(4), rng);
    Coloring g = degree_color_bipartite(k33, L);  // aborts on failure
    CHECK(is_proper(k33, g));
    CHECK(respects_lists(k33, L, g));
  }
}

TEST_CASE("degree coloring rejects undersized instances") {
  MultipartiteGraph g({2, 2});
  CHECK_THROWS_AS(
      degree_color_bipartite(g, lists_of({{1}, {1, 2}, {1, 2}, {1, 2}})),
      InputError);
  CHECK_THROWS_AS(
      degree_color_bipartite(MultipartiteGraph({1, 2}),
                             lists_of({{1, 2}, {1}, {2}})),
      InputError);
}

// ---- K_{n,n} flexible colorer ---------------------------------------------------

TEST_CASE("two disjoint requests on one side of K_{4,4}") {
  MultipartiteGraph g({4, 4});
  std::vector<std::vector<int>> lists;
  for (int v = 0; v < 8; ++v) lists.push_back({0, 1, 2, 3});
  lists[0] = {0, 4, 5, 6};
  lists[1] = {1, 4, 5, 6};
  ListAssignment L = lists_of(lists);
  Request r = request_of(8, {{0, 0}, {1, 1}});
  auto out = knn_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.guarantee == 1);
}

TEST_CASE("full-domain single-color requests on K_{4,4} satisfy a whole part") {
  MultipartiteGraph g({4, 4});
  std::vector<std::vector<int>> raw;
  for (int v = 0; v < 8; ++v) raw.push_back({0, 1, 2, 3});
  ListAssignment L = lists_of(raw);
  Request r(8);
  for (int v = 0; v < 8; ++v) r.add(v, 0);
  auto out = knn_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.satisfied >= 4);
  auto exact = max_satisfied(g, L, r);
  CHECK(exact.best == 4);
}

TEST_CASE("the large-domain shared-head reconstruction") {
  // Structured so the star completion is obstructed and some leaf requests a
  // head color: c = (0,1,2,4), d = (4,5,6), r(y_0) = 9.
  MultipartiteGraph g({4, 4});
  ListAssignment L = lists_of({{0, 10, 11, 12},
                               {1, 10, 11, 12},
                               {2, 10, 11, 12},
                               {4, 5, 6, 9},
                               {0, 1, 2, 9},
                               {0, 1, 2, 4},
                               {0, 1, 2, 5},
                               {0, 1, 2, 6}});
  Request r = request_of(
      8, {{0, 0}, {1, 1}, {2, 2}, {3, 4}, {4, 9}, {5, 0}, {6, 5}, {7, 6}});
  auto out = knn_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.strategy_used == "knn:recolor-shared");
  CHECK(out.satisfied >= 4);
}

TEST_CASE("the large-domain fresh-color reconstruction dodges c_n") {
  // Same skeleton, but every requested leaf wants its own d_i and the first
  // leaf's d equals c_n, forcing the dodge.
  MultipartiteGraph g({4, 4});
  ListAssignment L = lists_of({{0, 10, 11, 12},
                               {1, 10, 11, 12},
                               {2, 10, 11, 12},
                               {4, 5, 6, 9},
                               {0, 1, 2, 9},
                               {0, 1, 2, 4},
                               {0, 1, 2, 5},
                               {0, 1, 2, 6}});
  Request r = request_of(
      8, {{0, 0}, {1, 1}, {2, 2}, {3, 4}, {4, 9}, {5, 4}, {6, 5}, {7, 6}});
  auto out = knn_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.strategy_used == "knn:recolor-fresh");
  CHECK(out.satisfied >= 4);
}

TEST_CASE("the large-domain case with r(y_0) among the requested colors") {
  MultipartiteGraph g({4, 4});
  ListAssignment L = lists_of({{0, 10, 11, 12},
                               {1, 10, 11, 12},
                               {2, 10, 11, 12},
                               {4, 5, 6, 7},
                               {4, 0, 1, 8},
                               {0, 1, 2, 5},
                               {0, 1, 2, 6},
                               {0, 1, 2, 7}});
  Request r = request_of(
      8, {{0, 0}, {1, 1}, {2, 2}, {3, 4}, {4, 4}, {5, 5}, {6, 6}, {7, 7}});
  auto out = knn_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.satisfied >= 4);
}

TEST_CASE("the mid-domain degree reconstruction") {
  // c = (0,1,2); obstructed star over all four leaves with d = (4,5,6,7).
  MultipartiteGraph g({4, 4});
  ListAssignment L = lists_of({{0, 20, 21, 22},
                               {1, 20, 21, 22},
                               {2, 20, 21, 22},
                               {4, 5, 6, 7},
                               {0, 1, 2, 4},
                               {0, 1, 2, 5},
                               {0, 1, 2, 6},
                               {0, 1, 2, 7}});
  Request r = request_of(8, {{0, 0}, {1, 1}, {2, 2}, {4, 4}, {5, 5}});
  auto out = knn_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.strategy_used == "knn:mid-degree");
  CHECK(out.satisfied >= 3);
}

TEST_CASE("mirrored instances exercise the part swap") {
  // The mid-domain structure placed on the y side.
  MultipartiteGraph g({4, 4});
  ListAssignment L = lists_of({{0, 1, 2, 4},
                               {0, 1, 2, 5},
                               {0, 1, 2, 6},
                               {0, 1, 2, 7},
                               {0, 20, 21, 22},
                               {1, 20, 21, 22},
                               {2, 20, 21, 22},
                               {4, 5, 6, 7}});
  Request r = request_of(8, {{4, 0}, {5, 1}, {6, 2}, {0, 4}, {1, 5}});
  auto out = knn_flex_color(g, L, r);
  check_outcome(g, L, r, out);
  CHECK(out.satisfied >= 3);
}

TEST_CASE("K_{4,4} seeded trials: proper, list-respecting, half floor") {
  MultipartiteGraph g({4, 4});
  for (int t = 0; t < 5000; ++t) {
    Rng rng(Rng::mix(0xAB44, t));
    int pot = 4 + (rng.below(4) == 0 ? 0 : rng.below_int(8));
    ListAssignment L = random_k_assignment(g, 4, pot, rng);
    int d = 1 + (t % 8);
    Request r = random_request(g, L, d, rng);
    auto out = knn_flex_color(g, L, r);
    check_outcome(g, L, r, out);
    CHECK(out.guarantee == (d + 1) / 2);
    if (t % 10 == 0) {
      auto exact = max_satisfied(g, L, r);
      REQUIRE(exact.status == SatStatus::Solved);
      CHECK(out.satisfied <= exact.best);
    }
  }
}

TEST_CASE("near-full domains with the unrequested vertex on either side") {
  MultipartiteGraph g({4, 4});
  for (int t = 0; t < 3000; ++t) {
    Rng rng(Rng::mix(0xF00D, t));
    ListAssignment L = random_k_assignment(g, 4, 4 + rng.below_int(5), rng);
    int skip = (t % 2 == 0) ? 0 : 7;
    Request r(8);
    for (int v = 0; v < 8; ++v) {
      if (v == skip) continue;
      auto cols = L.list(v).to_vector();
      r.add(v, cols[rng.below_int(4)]);
    }
    auto out = knn_flex_color(g, L, r);
    check_outcome(g, L, r, out);
    CHECK(out.guarantee == 4);  // ceil(7/2)
  }
}

TEST_CASE("knn rejects small n and wrong shapes") {
  CHECK_THROWS_AS(knn_flex_color(MultipartiteGraph({3, 3}),
                                 lists_of({{0, 1, 2}, {0, 1, 2}, {0, 1, 2},
                                           {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}),
                                 request_of(6, {{0, 0}})),
                  InputError);
  CHECK_THROWS_AS(knn_flex_color(MultipartiteGraph({4, 5}),
                                 lists_of({{0, 1, 2, 3},
                                           {0, 1, 2, 3},
                                           {0, 1, 2, 3},
                                           {0, 1, 2, 3},
                                           {0, 1, 2, 3},
                                           {0, 1, 2, 3},
                                           {0, 1, 2, 3},
                                           {0, 1, 2, 3},
                                           {0, 1, 2, 3}}),
                                 request_of(9, {{0, 0}})),
                  InputError);
}

// ---- transversal-family colorer and counterexamples -----------------------------

TEST_CASE("precolor_choose uses the missing transversal") {
  // X-lists {1,2,3},{4,5,6}; eight of the nine transversal pairs as Y-lists.
  MultipartiteGraph g({2, 8});
  ListAssignment L = lists_of({{1, 2, 3},
                               {4, 5, 6},
                               {1, 4},
                               {1, 5},
                               {1, 6},
                               {2, 4},
                               {2, 5},
                               {2, 6},
                               {3, 4},
                               {3, 5}});  // {3,6} is missing
  Coloring f = precolor_choose(g, L);
  CHECK(is_proper(g, f));
  CHECK(respects_lists(g, L, f));
  CHECK(f.color(0) == 3);
  CHECK(f.color(1) == 6);
}

TEST_CASE("precolor_choose with intersecting first-part lists") {
  MultipartiteGraph g({2, 3});
  ListAssignment L = lists_of({{0, 1}, {1, 2}, {0, 1}, {1, 2}, {0, 2}});
  Coloring f = precolor_choose(g, L);
  CHECK(is_proper(g, f));
  CHECK(f.color(0) == f.color(1));
}

TEST_CASE("precolor_choose on a star with a spare color") {
  MultipartiteGraph g({1, 2});
  ListAssignment L = lists_of({{0, 1, 2}, {0}, {1}});
  Coloring f = precolor_choose(g, L);
  CHECK(is_proper(g, f));
}

TEST_CASE("precolor_choose validates b < t^n") {
  // 2^2 = 4 transversals, b = 4.
  MultipartiteGraph g({2, 4});
  ListAssignment L = lists_of(
      {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_THROWS_AS(precolor_choose(g, L), InputError);
}

TEST_CASE("precolor counterexamples are never colorable") {
  struct Case {
    int t, n;
    long long b;
  };
  for (const Case& c : {Case{3, 2, 9}, Case{2, 1, 2}, Case{2, 2, 4},
                        Case{2, 3, 8}, Case{3, 1, 3}, Case{2, 2, 6}}) {
    ListAssignment bad = precolor_counterexample(c.t, c.n, c.b);
    MultipartiteGraph g({c.n, static_cast<int>(c.b)});
    CHECK(!is_colorable(g, bad).colorable);
    if (g.num_vertices() <= 8) CHECK(!oracle::naive_is_colorable(g, bad));
  }
  CHECK_THROWS_AS(precolor_counterexample(3, 2, 8), InputError);
}

TEST_CASE("random valid transversal-shape instances always color") {
  Rng rng(0xBEEF);
  for (int trial = 0; trial < 1500; ++trial) {
    int t = 2 + rng.below_int(2);
    int n = 1 + rng.below_int(2);
    long long tn = 1;
    for (int i = 0; i < n; ++i) tn *= t;
    int b = 1 + rng.below_int(static_cast<int>(tn) - 1 > 0
                                  ? static_cast<int>(tn) - 1
                                  : 1);
    MultipartiteGraph g({n, b});
    int pot = n * t + rng.below_int(3);
    std::vector<ColorSet> lists;
    for (int i = 0; i < n; ++i)
      lists.push_back(ColorSet::from_vector(rng.sample(pot, t)));
    for (int i = 0; i < b; ++i)
      lists.push_back(ColorSet::from_vector(rng.sample(pot, n)));
    ListAssignment L(lists);
    Coloring f = precolor_choose(g, L);
    CHECK(is_proper(g, f));
    CHECK(respects_lists(g, L, f));
  }
}
