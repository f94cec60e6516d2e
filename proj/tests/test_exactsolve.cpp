#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flexcolor/exact.hpp"
#include "flexcolor/graph.hpp"
#include "flexcolor/json_io.hpp"
#include "flexcolor/rng.hpp"
#include "oracle.hpp"

using namespace flexcolor;

namespace {

ListAssignment lists_of(const std::vector<std::vector<int>>& lists) {
  std::vector<ColorSet> cs;
  for (const auto& l : lists) cs.push_back(ColorSet::from_vector(l));
  return ListAssignment(cs);
}

// The three explicit non-colorable assignments, 0-based colors.
ListAssignment k37_32() {
  return lists_of({{0, 1, 2}, {0, 2, 3}, {1, 3, 4},              // x
                   {0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}});
}
ListAssignment k45_32() {
  return lists_of({{0, 1, 4}, {0, 1, 5}, {2, 3, 4}, {2, 3, 5},   // x
                   {0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 5}});
}
ListAssignment k46_23() {
  return lists_of({{0, 1}, {0, 2}, {3, 4}, {5, 6},               // x
                   {0, 3, 5}, {0, 3, 6}, {0, 4, 5}, {0, 4, 6}, {1, 2, 3},
                   {1, 2, 4}});
}
// K_{3,7} 3-assignment whose request r(x_i)=i is nearly unsatisfiable.
ListAssignment k37_flex() {
  return lists_of({{0, 3, 4}, {1, 5, 6}, {2, 7, 8},              // x
                   {0, 1, 2}, {0, 1, 7}, {0, 1, 8}, {0, 2, 5}, {0, 2, 6},
                   {1, 2, 3}, {1, 2, 4}});
}

ListAssignment random_assignment(const MultipartiteGraph& g, int pot,
                                 int max_size, Rng& rng, long long max_product) {
  for (;;) {
    std::vector<ColorSet> lists(g.num_vertices());
    long long product = 1;
    for (int v = 0; v < g.num_vertices(); ++v) {
      int size = 1 + rng.below_int(std::min(max_size, pot));
      lists[v] = ColorSet::from_vector(rng.sample(pot, size));
      product *= size;
    }
    if (product <= max_product) return ListAssignment(lists);
  }
}

Request random_request(const MultipartiteGraph& g, const ListAssignment& L,
                       Rng& rng) {
  Request r(g.num_vertices());
  int d = 1 + rng.below_int(g.num_vertices());
  for (int v : rng.sample(g.num_vertices(), d)) {
    std::vector<int> cols = L.list(v).to_vector();
    r.add(v, cols[rng.below_int(static_cast<int>(cols.size()))]);
  }
  return r;
}

}  // namespace

TEST_CASE("the explicit (3,2)/(2,3) assignments are not colorable") {
  CHECK(!is_colorable(MultipartiteGraph({3, 7}), k37_32()).colorable);
  CHECK(!is_colorable(MultipartiteGraph({4, 5}), k45_32()).colorable);
  CHECK(!is_colorable(MultipartiteGraph({4, 6}), k46_23()).colorable);
  // And the naive route agrees.
  CHECK(!oracle::naive_is_colorable(MultipartiteGraph({3, 7}), k37_32()));
  CHECK(!oracle::naive_is_colorable(MultipartiteGraph({4, 5}), k45_32()));
}

TEST_CASE("single-part instances are always colorable") {
  MultipartiteGraph g({4});
  ListAssignment L = lists_of({{0}, {0}, {0}, {0}});
  auto res = is_colorable(g, L);
  CHECK(res.colorable);
  CHECK(respects_lists(g, L, *res.witness));
}

TEST_CASE("is_colorable witnesses are proper and list-respecting") {
  Rng rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    int parts = 2 + rng.below_int(2);
    std::vector<int> sizes;
    for (int p = 0; p < parts; ++p) sizes.push_back(1 + rng.below_int(3));
    MultipartiteGraph g(sizes);
    ListAssignment L = random_assignment(g, 5, 3, rng, 1 << 20);
    auto res = is_colorable(g, L);
    CHECK(res.colorable == oracle::naive_is_colorable(g, L));
    if (res.colorable) {
      CHECK(is_proper(g, *res.witness));
      CHECK(respects_lists(g, L, *res.witness));
    }
  }
}

TEST_CASE("max_satisfied on the K_{2,n} two-list witnesses") {
  // L(x_1)={1,2}, L(x_2)={3,4}, L(y_1)={1,3}, L(y_2)={1,4}, L(y_3)={1,2},
  // r(x_1)=1: colorable but the request is never grantable.
  MultipartiteGraph g({2, 3});
  ListAssignment L = lists_of({{0, 1}, {2, 3}, {0, 2}, {0, 3}, {0, 1}});
  Request r(5);
  r.add(0, 0);
  auto res = max_satisfied(g, L, r);
  REQUIRE(res.status == SatStatus::Solved);
  CHECK(res.best == 0);
  CHECK(oracle::naive_max_satisfied(g, L, r) == 0);
}

TEST_CASE("max_satisfied on the K_{3,7} flexibility witness") {
  MultipartiteGraph g({3, 7});
  ListAssignment L = k37_flex();
  Request r(10);
  r.add(0, 0);
  r.add(1, 1);
  r.add(2, 2);
  int naive = oracle::naive_max_satisfied(g, L, r);
  CHECK(naive == 1);  // derived by full enumeration, then frozen
  auto res = max_satisfied(g, L, r);
  REQUIRE(res.status == SatStatus::Solved);
  CHECK(res.best == 1);
  CHECK(satisfied_count(r, *res.witness) == 1);
  CHECK(is_proper(g, *res.witness));
  CHECK(respects_lists(g, L, *res.witness));

  // A hand-built proper completion from x = (1,6,8) in printed labels
  // satisfies exactly one request.
  Coloring f = Coloring::uncolored(10);
  f.set_color(0, 0);
  f.set_color(1, 5);
  f.set_color(2, 7);
  for (int y = 0; y < 7; ++y) {
    int flat = 3 + y;
    ColorSet used = ColorSet::single(0) | ColorSet::single(5) |
                    ColorSet::single(7);
    f.set_color(flat, L.list(flat).minus(used).lowest());
  }
  CHECK(is_proper(g, f));
  CHECK(satisfied_count(r, f) == 1);
}

TEST_CASE("a lone request on a color absent elsewhere is granted") {
  MultipartiteGraph g({2, 2});
  ListAssignment L = lists_of({{5, 1}, {1, 2}, {2, 3}, {3, 4}});
  Request r(4);
  r.add(0, 5);
  auto res = max_satisfied(g, L, r);
  REQUIRE(res.status == SatStatus::Solved);
  CHECK(res.best == 1);
}

TEST_CASE("max_satisfied reports NotColorable") {
  MultipartiteGraph g({1, 1});
  ListAssignment L = lists_of({{0}, {0}});
  Request r(2);
  r.add(0, 0);
  CHECK(max_satisfied(g, L, r).status == SatStatus::NotColorable);
}

TEST_CASE("max_satisfied agrees with naive enumeration") {
  Rng rng(123);
  for (int trial = 0; trial < 2500; ++trial) {
    int parts = 2 + rng.below_int(2);
    std::vector<int> sizes;
    int total = 0;
    for (int p = 0; p < parts; ++p) {
      int s = 1 + rng.below_int(3);
      sizes.push_back(s);
      total += s;
    }
    if (total > 8) continue;
    MultipartiteGraph g(sizes);
    ListAssignment L = random_assignment(g, 6, 4, rng, 200000);
    Request r = random_request(g, L, rng);
    int naive = oracle::naive_max_satisfied(g, L, r);
    auto res = max_satisfied(g, L, r);
    if (naive < 0) {
      CHECK(res.status == SatStatus::NotColorable);
    } else {
      REQUIRE(res.status == SatStatus::Solved);
      CHECK(res.best == naive);
      CHECK(satisfied_count(r, *res.witness) == res.best);
      CHECK(is_proper(g, *res.witness));
      CHECK(respects_lists(g, L, *res.witness));
    }
  }
}

TEST_CASE("epsilon_satisfiable thresholds") {
  MultipartiteGraph g({3, 7});
  ListAssignment L = k37_flex();
  Request r(10);
  r.add(0, 0);
  r.add(1, 1);
  r.add(2, 2);
  CHECK(!epsilon_satisfiable(g, L, r, Rational(2, 3)));
  CHECK(epsilon_satisfiable(g, L, r, Rational(1, 3)));
  CHECK(epsilon_satisfiable(g, L, r, Rational(0)));
}

TEST_CASE("f-choosability of K_{3,3} with one size-3 list") {
  MultipartiteGraph g({3, 3});
  for (int special = 0; special < 6; ++special) {
    std::vector<int> sizes(6, 2);
    sizes[special] = 3;
    auto verdict = is_f_choosable(g, sizes);
    CHECK(verdict.decision == Decision::Choosable);
    CHECK(verdict.stats.pot == 5);
  }
}

TEST_CASE("K_{1,1} with singleton lists is not choosable") {
  MultipartiteGraph g({1, 1});
  auto verdict = is_f_choosable(g, {1, 1});
  REQUIRE(verdict.decision == Decision::NotChoosable);
  REQUIRE(verdict.counterexample.has_value());
  CHECK(verdict.counterexample->list(0) == ColorSet::single(0));
  CHECK(verdict.counterexample->list(1) == ColorSet::single(0));
  CHECK(!is_colorable(g, *verdict.counterexample).colorable);
}

TEST_CASE("K_{2,2} with 2-lists is choosable") {
  MultipartiteGraph g({2, 2});
  CHECK(is_f_choosable(g, {2, 2, 2, 2}).decision == Decision::Choosable);
}

TEST_CASE("ab-choosability boundary rows") {
  CHECK(is_ab_choosable(3, 7, 3, 2).decision == Decision::NotChoosable);
  CHECK(is_ab_choosable(2, 8, 3, 2).decision == Decision::Choosable);
  auto v29 = is_ab_choosable(2, 9, 3, 2);
  REQUIRE(v29.decision == Decision::NotChoosable);
  CHECK(!is_colorable(MultipartiteGraph({2, 9}), *v29.counterexample)
             .colorable);
  for (int n = 1; n <= 4; ++n) {
    auto v = is_ab_choosable(1, n, 1, 1);
    CHECK(v.decision == Decision::NotChoosable);
    CHECK(!is_colorable(MultipartiteGraph({1, n}), *v.counterexample)
               .colorable);
  }
}

TEST_CASE("shortcut mode answers transversal-family shapes and rejects others") {
  SearchOptions shortcut;
  shortcut.mode = SearchMode::Shortcut;
  CHECK(is_ab_choosable(2, 9, 3, 2, shortcut).decision ==
        Decision::NotChoosable);
  CHECK(is_ab_choosable(2, 8, 3, 2, shortcut).decision == Decision::Choosable);
  CHECK_THROWS_AS(is_ab_choosable(4, 5, 3, 2, shortcut), InputError);
}

TEST_CASE("exhaustive and shortcut modes agree on the family boundary") {
  SearchOptions exhaustive;
  exhaustive.mode = SearchMode::Exhaustive;
  CHECK(is_ab_choosable(2, 8, 3, 2, exhaustive).decision ==
        Decision::Choosable);
  CHECK(is_ab_choosable(2, 9, 3, 2, exhaustive).decision ==
        Decision::NotChoosable);
  CHECK(is_ab_choosable(3, 8, 2, 3, exhaustive).decision ==
        Decision::NotChoosable);
  CHECK(is_ab_choosable(3, 7, 2, 3, exhaustive).decision ==
        Decision::Choosable);
}

TEST_CASE("ab-choosability is monotone on the full grid m,n <= 5, a,b <= 3") {
  bool table[6][6][4][4];
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          auto v = is_ab_choosable(m, n, a, b);
          REQUIRE(v.decision != Decision::Timeout);
          table[m][n][a][b] = v.decision == Decision::Choosable;
          CHECK(v.counterexample.has_value() ==
                (v.decision == Decision::NotChoosable));
        }
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          if (!table[m][n][a][b]) continue;
          for (int m2 = 1; m2 <= m; ++m2)
            for (int n2 = 1; n2 <= n; ++n2)
              for (int a2 = a; a2 <= 3; ++a2)
                for (int b2 = b; b2 <= 3; ++b2)
                  CHECK(table[m2][n2][a2][b2]);
        }
}

TEST_CASE("blocking-set route agrees with backtracking and the naive oracle") {
  Rng rng(5150);
  int naive_checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int m = 1 + rng.below_int(4);
    int n = 1 + rng.below_int(5);
    MultipartiteGraph g({m, n});
    ListAssignment L = random_assignment(g, 6, 4, rng, 1 << 20);
    bool via_blocking = blocking_is_colorable(g, L);
    bool via_backtracking = is_colorable(g, L).colorable;
    CHECK(via_blocking == via_backtracking);
    if (m + n <= 7 && naive_checked < 1500) {
      ++naive_checked;
      CHECK(via_blocking == oracle::naive_is_colorable(g, L));
    }
  }
}

TEST_CASE("canonical and raw enumeration reach identical verdicts (pot <= 4)") {
  SearchOptions raw;
  raw.canonical = false;
  raw.pot_bound = 4;
  SearchOptions canonical;
  canonical.pot_bound = 4;
  struct Case {
    std::vector<int> shape;
    std::vector<int> sizes;
  };
  std::vector<Case> cases = {
      {{1, 1}, {1, 1}},     {{1, 2}, {1, 1, 1}},    {{2, 2}, {2, 2, 2, 2}},
      {{1, 3}, {2, 1, 1, 1}}, {{2, 2}, {1, 2, 2, 2}}, {{1, 1, 1}, {2, 2, 2}},
      {{2, 3}, {2, 2, 2, 2, 2}}, {{1, 1, 2}, {2, 2, 2, 2}}};
  for (const auto& c : cases) {
    MultipartiteGraph g(c.shape);
    auto a = is_f_choosable(g, c.sizes, canonical);
    auto b = is_f_choosable(g, c.sizes, raw);
    CHECK(a.decision == b.decision);
  }
}

TEST_CASE("list chromatic numbers of small complete bipartite graphs") {
  for (int n = 1; n <= 5; ++n)
    CHECK(list_chromatic_number_small(MultipartiteGraph({1, n})) == 2);
  CHECK(list_chromatic_number_small(MultipartiteGraph({2, 3})) == 2);
  CHECK(list_chromatic_number_small(MultipartiteGraph({2, 4})) == 3);
  CHECK(list_chromatic_number_small(MultipartiteGraph({3, 3})) == 3);
  CHECK(list_chromatic_number_small(MultipartiteGraph({1, 1, 1})) == 3);
}

TEST_CASE("verdicts and stats are identical across worker counts") {
  SearchOptions w1;
  w1.workers = 1;
  SearchOptions w4;
  w4.workers = 4;
  auto a = is_ab_choosable(4, 6, 2, 3, w1);
  auto b = is_ab_choosable(4, 6, 2, 3, w4);
  REQUIRE(a.decision == Decision::NotChoosable);
  REQUIRE(b.decision == Decision::NotChoosable);
  CHECK(a.stats.classes == b.stats.classes);
  CHECK(a.stats.nodes == b.stats.nodes);
  MultipartiteGraph g({4, 6});
  CHECK(instance_dump(g, *a.counterexample) ==
        instance_dump(g, *b.counterexample));

  auto c = is_ab_choosable(4, 4, 3, 2, w1);
  auto d = is_ab_choosable(4, 4, 3, 2, w4);
  CHECK(c.decision == Decision::Choosable);
  CHECK(d.decision == Decision::Choosable);
  CHECK(c.stats.classes == d.stats.classes);
  CHECK(c.stats.nodes == d.stats.nodes);
}

TEST_CASE("budget exhaustion yields an explicit timeout verdict") {
  SearchOptions opts;
  opts.budget_seconds = 1e-9;
  opts.mode = SearchMode::Exhaustive;
  auto v = is_ab_choosable(5, 5, 3, 3, opts);
  CHECK(v.decision == Decision::Timeout);
}

TEST_CASE("pot bound is demanded when sizes reach |V|") {
  MultipartiteGraph g({1, 1});
  CHECK_THROWS_AS(is_f_choosable(g, {1, 2}), InputError);
  SearchOptions opts;
  opts.pot_bound = 3;
  CHECK(is_f_choosable(g, {1, 2}, opts).decision == Decision::Choosable);
}

TEST_CASE("normalize_assignment is idempotent and preserves colorability") {
  Rng rng(31337);
  for (int trial = 0; trial < 2000; ++trial) {
    int parts = 2 + rng.below_int(2);
    std::vector<int> sizes;
    for (int p = 0; p < parts; ++p) sizes.push_back(1 + rng.below_int(3));
    MultipartiteGraph g(sizes);
    ListAssignment L = random_assignment(g, 6, 3, rng, 1 << 20);
    ListAssignment n1 = normalize_assignment(g, L);
    ListAssignment n2 = normalize_assignment(g, n1);
    CHECK(n1.lists() == n2.lists());
    CHECK(is_colorable(g, L).colorable == is_colorable(g, n1).colorable);
  }
}

TEST_CASE("transversal unions enumerate distinct choice-function images") {
  std::vector<ColorSet> lists = {ColorSet::from_vector({0, 1}),
                                 ColorSet::from_vector({0, 2})};
  auto unions = transversal_unions(lists);
  REQUIRE(unions.size() == 4);  // {0}, {0,1}, {0,2}, {1,2}
  CHECK(unions[0] == ColorSet::from_vector({0}));
  CHECK(unions[1] == ColorSet::from_vector({0, 1}));
  CHECK(unions[2] == ColorSet::from_vector({0, 2}));
  CHECK(unions[3] == ColorSet::from_vector({1, 2}));
}
