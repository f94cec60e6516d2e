#include "flexcolor/flex.hpp"

#include <algorithm>
#include <numeric>

#include "flexcolor/constructive.hpp"
#include "flexcolor/json_io.hpp"
#include "flexcolor/rng.hpp"
#include "flexcolor/witnesses.hpp"

namespace flexcolor {

namespace {

long long checked_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base > 0 && r > static_cast<long long>(4e18) / base) return -1;
    r *= base;
  }
  return r;
}

// 3-choosability characterization of K_{m,n} (m <= n assumed).
bool three_choosable(int m, int n) {
  if (m <= 2) return true;
  if (m == 3) return n <= 26;
  if (m == 4) return n <= 20;
  if (m == 5) return n <= 12;
  if (m == 6) return n <= 10;
  return false;
}

bool two_choosable(int m, int n) { return m == 1 || (m == 2 && n <= 3); }

// (3,2)-choosability of K_{m,n}, m <= n, 3-lists on the m-part.
bool t32_choosable(int m, int n) {
  if (m == 1) return true;
  if (m == 2) return n <= 8;
  if (m == 3) return n <= 6;
  if (m == 4) return n == 4;
  return false;
}

// (2,3)-choosability of K_{m,n}, m <= n, 2-lists on the m-part.
bool t23_choosable(int m, int n) {
  if (m <= 2) return true;
  if (m == 3) return n <= 7;
  if (m == 4) return n <= 5;
  return false;
}

}  // namespace

std::optional<bool> ab_choosable_known(int m, int n, int a, int b) {
  if (m < 1 || n < 1 || a < 1 || b < 1)
    throw InputError("m, n, a, b must be positive");
  if (m > n) return ab_choosable_known(n, m, b, a);

  if (a >= n + 1 || b >= m + 1) return true;  // greedy off the short side
  if (a == 1) return false;                   // b <= m singletons collide
  if (b == 1) return false;
  if (b == m) {
    long long tn = checked_pow(a, m);
    return tn < 0 || n < tn;
  }
  if (a == n) {
    long long tn = checked_pow(b, n);
    return tn < 0 || m < tn;
  }
  if (a >= 2 && b >= 2 && two_choosable(m, n)) return true;
  if (a <= 2 && b <= 2 && !two_choosable(m, n)) return false;
  if (a >= 3 && b >= 3 && three_choosable(m, n)) return true;
  if (a <= 3 && b <= 3 && !three_choosable(m, n)) return false;
  if (a >= 3 && b >= 2 && t32_choosable(m, n)) return true;
  if (a <= 3 && b <= 2 && !t32_choosable(m, n)) return false;
  if (a >= 2 && b >= 3 && t23_choosable(m, n)) return true;
  if (a <= 2 && b <= 3 && !t23_choosable(m, n)) return false;
  return std::nullopt;
}

namespace {

// Extends a bad assignment on K_{m0,n0} to K_{m,n} by duplicating the first
// list of each part; restrictions of proper colorings stay proper, so
// non-colorability is preserved.
ListAssignment pad_bipartite(const ListAssignment& base, int m0, int n0, int m,
                             int n) {
  std::vector<ColorSet> lists;
  for (int i = 0; i < m0; ++i) lists.push_back(base.list(i));
  for (int i = m0; i < m; ++i) lists.push_back(base.list(0));
  for (int i = 0; i < n0; ++i) lists.push_back(base.list(m0 + i));
  for (int i = n0; i < n; ++i) lists.push_back(base.list(m0));
  return ListAssignment(std::move(lists));
}

ListAssignment swap_parts(const ListAssignment& L, int m, int n) {
  std::vector<ColorSet> lists(m + n);
  for (int i = 0; i < n; ++i) lists[i] = L.list(m + i);
  for (int i = 0; i < m; ++i) lists[n + i] = L.list(i);
  return ListAssignment(std::move(lists));
}

std::optional<ListAssignment> not_choosable_witness_impl(int m, int n, int a,
                                                         int b, int depth) {
  // Exact transversal-family shapes.
  if (b == m) {
    long long tn = checked_pow(a, m);
    if (tn > 0 && n >= tn) return transversal_family_assignment(a, m, n);
  }
  if (a == n) {
    long long tn = checked_pow(b, n);
    if (tn > 0 && m >= tn)
      return swap_parts(transversal_family_assignment(b, n, m), n, m);
  }
  if (a == 1 && b <= m) {
    // Distinct singletons spanning {0..b-1}; every opposite list is that set.
    std::vector<ColorSet> lists;
    for (int i = 0; i < m; ++i)
      lists.push_back(ColorSet::single(std::min(i, b - 1)));
    for (int i = 0; i < n; ++i) lists.push_back(ColorSet::first_n(b));
    return ListAssignment(std::move(lists));
  }
  if (a == 3 && b == 2) {
    if (m >= 4 && n >= 5) {
      const WitnessEntry* base = find_witness("k45_32");
      return pad_bipartite(base->assignment, 4, 5, m, n);
    }
    if (m == 3 && n >= 7) {
      const WitnessEntry* base = find_witness("k37_32");
      return pad_bipartite(base->assignment, 3, 7, m, n);
    }
  }
  if (a == 2 && b == 3 && m >= 4 && n >= 6) {
    const WitnessEntry* base = find_witness("k46_23");
    return pad_bipartite(base->assignment, 4, 6, m, n);
  }
  if (a == 2 && b == 2 && m >= 2 && n >= 4)
    return pad_bipartite(transversal_family_assignment(2, 2, 4), 2, 4, m, n);
  if (a == 2 && b == 2 && m >= 3 && n >= 3) {
    // Triangle lists on both sides: no side can stay within one color, yet
    // any two-color use on the x side swallows an opposite list.
    std::vector<ColorSet> base = {
        ColorSet::from_vector({0, 1}), ColorSet::from_vector({0, 2}),
        ColorSet::from_vector({1, 2}), ColorSet::from_vector({0, 1}),
        ColorSet::from_vector({0, 2}), ColorSet::from_vector({1, 2})};
    return pad_bipartite(ListAssignment(base), 3, 3, m, n);
  }
  if (depth == 0) {
    if (auto w = not_choosable_witness_impl(n, m, b, a, 1))
      return swap_parts(*w, n, m);
  }
  return std::nullopt;
}

}  // namespace

std::optional<ListAssignment> not_choosable_witness(int m, int n, int a,
                                                    int b) {
  auto w = not_choosable_witness_impl(m, n, a, b, 0);
  if (w) {
    MultipartiteGraph g({m, n});
    if (!w->is_ab_assignment(g, a, b))
      internal_failure("stock witness has the wrong shape");
    if (is_colorable(g, *w).colorable)
      internal_failure("stock witness is colorable", instance_dump(g, *w));
  }
  return w;
}

ChiEllInfo chi_ell_known(int m, int n) {
  if (m > n) std::swap(m, n);
  ChiEllInfo info;
  if (two_choosable(m, n)) {
    info.exact = 2;
    info.lower = 2;
    return info;
  }
  info.lower = 3;
  if (three_choosable(m, n)) {
    info.exact = 3;
    return info;
  }
  info.lower = 4;
  if (m == 3) info.exact = 4;  // col(K_{3,n}) = 4 closes the gap
  return info;
}

// ---- connect-lemma classifier ------------------------------------------------

namespace {

// Decides one reduced query, preferring published facts, falling back to the
// exhaustive decider.  Returns (choosable, witness when not).
std::pair<bool, std::optional<ListAssignment>> decide_ab(int m, int n, int a,
                                                         int b) {
  if (auto known = ab_choosable_known(m, n, a, b)) {
    if (*known) return {true, std::nullopt};
    if (auto w = not_choosable_witness(m, n, a, b)) return {false, w};
    // Known false but no stock witness: search for one.
  }
  SearchOptions opts;
  opts.budget_seconds = 120;
  ChoosabilityVerdict v = is_ab_choosable(m, n, a, b, opts);
  if (v.decision == Decision::Timeout)
    throw InputError("reduced choosability query undecided within budget");
  if (v.decision == Decision::Choosable) return {true, std::nullopt};
  return {false, v.counterexample};
}

}  // namespace

ConnectResult lemma_connect_classify(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 2) throw InputError("need m, n >= 1 and k >= 2");
  auto kchoosable = ab_choosable_known(m, n, k, k);
  if (!kchoosable || !*kchoosable)
    throw InputError("requires K_{m,n} to be k-choosable");

  MultipartiteGraph g({m, n});
  ConnectResult result;

  // Side 1: K_{m-1,n} with (k, k-1)-lists; a failure pins epsilon = 0 via a
  // request on a fresh color adjoined to the x-side.
  if (m >= 2) {
    auto [ok, bad] = decide_ab(m - 1, n, k, k - 1);
    if (!ok) {
      const ListAssignment& Lp = *bad;
      int fresh = Lp.pot().highest() + 1;
      std::vector<ColorSet> lists(m + n);
      lists[0] = Lp.list(m - 1);  // first reduced y-list
      lists[0].set(fresh);
      for (int i = 1; i < m; ++i) lists[i] = Lp.list(i - 1);
      for (int j = 0; j < n; ++j) {
        lists[m + j] = Lp.list(m - 1 + j);
        lists[m + j].set(fresh);
      }
      ListAssignment L(std::move(lists));
      Request r(m + n);
      r.add(0, fresh);
      MaxSatResult ms = max_satisfied(g, L, r);
      if (ms.status != SatStatus::Solved || ms.best != 0)
        internal_failure("connect-lemma zero witness failed verification",
                         instance_dump(g, L, &r));
      result.zero = true;
      result.detail = "K_{" + std::to_string(m - 1) + "," + std::to_string(n) +
                      "} is not (" + std::to_string(k) + "," +
                      std::to_string(k - 1) + ")-choosable";
      result.witness_assignment = std::move(L);
      result.witness_request = std::move(r);
      return result;
    }
  }

  // Side 2: K_{m,n-1} with (k-1, k)-lists; symmetric construction with the
  // request on the y-side.
  if (n >= 2) {
    auto [ok, bad] = decide_ab(m, n - 1, k - 1, k);
    if (!ok) {
      const ListAssignment& Lp = *bad;
      int fresh = Lp.pot().highest() + 1;
      std::vector<ColorSet> lists(m + n);
      for (int i = 0; i < m; ++i) {
        lists[i] = Lp.list(i);
        lists[i].set(fresh);
      }
      lists[m] = Lp.list(0);  // first reduced x-list
      lists[m].set(fresh);
      for (int j = 1; j < n; ++j) lists[m + j] = Lp.list(m + (j - 1));
      ListAssignment L(std::move(lists));
      Request r(m + n);
      r.add(m, fresh);
      MaxSatResult ms = max_satisfied(g, L, r);
      if (ms.status != SatStatus::Solved || ms.best != 0)
        internal_failure("connect-lemma zero witness failed verification",
                         instance_dump(g, L, &r));
      result.zero = true;
      result.detail = "K_{" + std::to_string(m) + "," + std::to_string(n - 1) +
                      "} is not (" + std::to_string(k - 1) + "," +
                      std::to_string(k) + ")-choosable";
      result.witness_assignment = std::move(L);
      result.witness_request = std::move(r);
      return result;
    }
  }

  result.zero = false;
  result.detail = "both reduced graphs are choosable";
  return result;
}

// ---- epsilon bounds -----------------------------------------------------------

EpsilonBound epsilon_bounds_bipartite(int m, int n, int t) {
  if (m < 1 || n < 1 || t < 1) throw InputError("m, n, t must be positive");
  if (m > n) std::swap(m, n);

  ChiEllInfo chi = chi_ell_known(m, n);
  bool certified = (chi.exact && t >= *chi.exact) || t >= m + 1;
  if (t < chi.lower)
    throw InputError("t = " + std::to_string(t) +
                     " is below the list chromatic number of the graph");
  if (!certified)
    throw InputError(
        "cannot certify t >= chi_ell for this shape; the published "
        "characterizations leave it open");

  EpsilonBound bound;
  bound.upper = Rational(1, 2);
  bound.upper_cert = {"hall-ratio", "rho = 2 for bipartite graphs"};
  bound.lower = Rational(0);
  bound.lower_cert = {"choosability", "t-choosable, so epsilon >= 0"};

  auto raise = [&](const Rational& v, Certificate c) {
    if (v > bound.lower) {
      bound.lower = v;
      bound.lower_cert = std::move(c);
    }
  };
  auto drop = [&](const Rational& v, Certificate c) {
    if (v < bound.upper) {
      bound.upper = v;
      bound.upper_cert = std::move(c);
    }
  };

  // Uppers from cataloged witnesses.
  if (m == 2 && t == 2 && (n == 2 || n == 3))
    drop(Rational(0), {"witness", "k2n_t2_" + std::to_string(n)});
  if (m == 3 && t == 3 && (n == 7 || n == 8))
    drop(Rational(1, 3), {"witness", "k3n_t3_flex_" + std::to_string(n)});

  // Connect-lemma sides, resolved from the published facts only (exact
  // search fallbacks stay out of the bounds path).
  std::optional<bool> side1 =
      m >= 2 ? ab_choosable_known(m - 1, n, t, t - 1) : std::optional<bool>(true);
  std::optional<bool> side2 =
      n >= 2 ? ab_choosable_known(m, n - 1, t - 1, t) : std::optional<bool>(true);
  if ((side1 && !*side1) || (side2 && !*side2)) {
    std::string which =
        (side1 && !*side1)
            ? "K_{" + std::to_string(m - 1) + "," + std::to_string(n) +
                  "} not (" + std::to_string(t) + "," + std::to_string(t - 1) +
                  ")-choosable"
            : "K_{" + std::to_string(m) + "," + std::to_string(n - 1) +
                  "} not (" + std::to_string(t - 1) + "," + std::to_string(t) +
                  ")-choosable";
    drop(Rational(0), {"lemma-connect", which});
  }

  // Lowers.
  if (t >= m + 1)
    raise(Rational(1, 2),
          {"constructive-thm1", "t >= col = m+1: candidate colorings"});
  if (m == n && n >= 4 && t >= n)
    raise(Rational(1, 2), {"constructive-knn", "K_{n,n} colorer, t >= n"});
  if (m == 3 && n == 3 && t == 3)
    raise(Rational(1, 2),
          {"literature", "epsilon(K_{3,3},3) = 1/2; sampled check only"});
  if (m == 3 && t == 3 && n >= 4 && n <= 8)
    raise(Rational(1, 3), {"literature", "CH25 Prop 9 with KM23 Prop 14"});
  if (side1 && *side1 && side2 && *side2)
    raise(Rational(1, m + n),
          {"lemma-connect", "both reduced graphs choosable"});

  if (bound.lower > bound.upper)
    internal_failure("epsilon bounds crossed for K_{" + std::to_string(m) +
                     "," + std::to_string(n) + "}, t=" + std::to_string(t));
  return bound;
}

// ---- sampling and search -------------------------------------------------------

namespace {

struct Candidate {
  ListAssignment L;
  Request r;
};

// Deterministic adversarial pool: cataloged witnesses matching the shape,
// then all-equal-list instances with same-color requests on ratio-tight
// domains.
std::vector<Candidate> adversarial_pool(const MultipartiteGraph& g, int k) {
  std::vector<Candidate> pool;
  for (const WitnessEntry& e : catalog()) {
    if (!(e.shape == g) || !e.request) continue;
    if (!e.assignment.is_k_assignment(k)) continue;
    pool.push_back(Candidate{e.assignment, *e.request});
  }
  ListAssignment equal(
      std::vector<ColorSet>(g.num_vertices(), ColorSet::first_n(k)));
  {
    // One vertex per part, all requesting color 0.
    Request r(g.num_vertices());
    for (int p = 0; p < g.num_parts(); ++p)
      r.add(g.flat_index(Vertex{p, 0}), 0);
    pool.push_back(Candidate{equal, r});
  }
  {
    Request r(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) r.add(v, 0);
    pool.push_back(Candidate{equal, r});
  }
  return pool;
}

Candidate random_candidate(const MultipartiteGraph& g, int k, int pot,
                           Rng& rng) {
  std::vector<ColorSet> lists(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    lists[v] = ColorSet::from_vector(rng.sample(pot, k));
  ListAssignment L =
      normalize_assignment(g, ListAssignment(std::move(lists)));
  int d = 1 + rng.below_int(g.num_vertices());
  std::vector<int> domain = rng.sample(g.num_vertices(), d);
  Request r(g.num_vertices());
  for (int v : domain) {
    std::vector<int> cols = L.list(v).to_vector();
    r.add(v, cols[rng.below_int(static_cast<int>(cols.size()))]);
  }
  return Candidate{std::move(L), std::move(r)};
}

// A candidate fails iff it is not eps-satisfiable (non-colorable counts).
bool is_counterexample(const MultipartiteGraph& g, const Candidate& c,
                       const Rational& eps) {
  MaxSatResult res = max_satisfied(g, c.L, c.r);
  if (res.status == SatStatus::NotColorable) return true;
  long long need = ceil_of(eps * Rational(c.r.domain_size(), 1));
  return res.best < need;
}

}  // namespace

FlexSearchReport check_flexible_sampled(const MultipartiteGraph& g, int k,
                                        const Rational& eps, long long trials,
                                        std::uint64_t seed,
                                        std::optional<int> pot_bound) {
  if (k < 1) throw InputError("k must be positive");
  if (eps < Rational(0) || eps > Rational(1))
    throw InputError("epsilon must lie in [0,1]");
  int pot = pot_bound.value_or(
      std::min(k * g.num_vertices(), ColorSet::kMaxColors));
  pot = std::max(pot, k);

  FlexSearchReport report;
  report.pot_bound = pot;
  report.seed = seed;

  std::vector<Candidate> pool = adversarial_pool(g, k);
  for (const Candidate& c : pool) {
    ++report.examined;
    if (is_counterexample(g, c, eps)) {
      report.mode = FlexSearchReport::Mode::CounterexampleFound;
      report.counterexample = std::make_pair(c.L, c.r);
      return report;
    }
  }
  for (long long i = 0; i < trials; ++i) {
    Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(i)));
    Candidate c = random_candidate(g, k, pot, rng);
    ++report.examined;
    if (is_counterexample(g, c, eps)) {
      report.mode = FlexSearchReport::Mode::CounterexampleFound;
      report.counterexample = std::make_pair(std::move(c.L), std::move(c.r));
      return report;
    }
  }
  report.mode = FlexSearchReport::Mode::SampledNoCounterexample;
  return report;
}

FlexSearchReport search_flexibility_counterexample(const MultipartiteGraph& g,
                                                   int k, const Rational& eps,
                                                   long long budget,
                                                   std::optional<int> pot_bound,
                                                   std::uint64_t seed) {
  if (k < 1) throw InputError("k must be positive");
  int pot = pot_bound.value_or(
      std::min(k * g.num_vertices(), ColorSet::kMaxColors));
  pot = std::max(pot, k);
  int nv = g.num_vertices();

  FlexSearchReport report;
  report.pot_bound = pot;
  report.seed = seed;

  // Requests per assignment: every vertex is absent or holds one of its k
  // list colors, minus the empty domain.
  long long requests_per = checked_pow(k + 1, nv);
  if (requests_per > 0) requests_per -= 1;

  std::vector<int> sizes(nv, k);
  bool exhaustive = false;
  std::vector<ListAssignment> all;
  if (requests_per > 0 && requests_per <= budget) {
    long long cap = budget / requests_per;
    all = enumerate_canonical_assignments(g, sizes, pot, cap);
    if (static_cast<long long>(all.size()) <= cap) exhaustive = true;
  }

  if (exhaustive) {
    for (const ListAssignment& L : all) {
      // Odometer over requests: per vertex, -1 (absent) or a list position.
      std::vector<std::vector<int>> cols(nv);
      for (int v = 0; v < nv; ++v) cols[v] = L.list(v).to_vector();
      std::vector<int> cur(nv, -1);
      for (;;) {
        bool nonempty = false;
        for (int v = 0; v < nv; ++v)
          if (cur[v] >= 0) nonempty = true;
        if (nonempty) {
          Request r(nv);
          for (int v = 0; v < nv; ++v)
            if (cur[v] >= 0) r.add(v, cols[v][cur[v]]);
          ++report.examined;
          Candidate c{L, r};
          if (is_counterexample(g, c, eps)) {
            report.mode = FlexSearchReport::Mode::CounterexampleFound;
            report.counterexample = std::make_pair(L, r);
            return report;
          }
        }
        int v = nv - 1;
        while (v >= 0 && cur[v] + 1 == static_cast<int>(cols[v].size()))
          cur[v--] = -1;
        if (v < 0) break;
        ++cur[v];
      }
    }
    report.mode = FlexSearchReport::Mode::BoundedPotExhausted;
    report.complete = true;
    return report;
  }

  // Seeded local search: mutate one list slot or one request entry per step,
  // walking down the measured satisfaction slack; restart from the pool.
  std::vector<Candidate> pool = adversarial_pool(g, k);
  Rng rng(seed);
  auto score = [&](const Candidate& c) -> long long {
    MaxSatResult res = max_satisfied(g, c.L, c.r);
    ++report.examined;
    if (res.status == SatStatus::NotColorable) return -1000;
    return res.best - ceil_of(eps * Rational(c.r.domain_size(), 1));
  };
  std::size_t next_start = 0;
  while (report.examined < budget) {
    Candidate cur = next_start < pool.size()
                        ? pool[next_start]
                        : random_candidate(g, k, pot, rng);
    ++next_start;
    long long cur_score = score(cur);
    if (cur_score < 0) {
      if (is_counterexample(g, cur, eps)) {  // re-verify before reporting
        report.mode = FlexSearchReport::Mode::CounterexampleFound;
        report.counterexample = std::make_pair(cur.L, cur.r);
        return report;
      }
      continue;
    }
    for (int step = 0; step < 200 && report.examined < budget; ++step) {
      Candidate mutated = cur;
      if (rng.below(2) == 0) {
        // Swap one color out of one list.
        int v = rng.below_int(nv);
        std::vector<int> in = mutated.L.list(v).to_vector();
        ColorSet outside = ColorSet::first_n(pot).minus(mutated.L.list(v));
        if (!outside.empty()) {
          std::vector<int> out = outside.to_vector();
          int removed = in[rng.below_int(static_cast<int>(in.size()))];
          int added = out[rng.below_int(static_cast<int>(out.size()))];
          std::vector<ColorSet> lists = mutated.L.lists();
          lists[v].reset(removed);
          lists[v].set(added);
          // Keep the request valid on that vertex.
          Request fixed(nv);
          for (int u = 0; u < nv; ++u)
            if (mutated.r.has(u)) {
              int c = mutated.r.color(u);
              if (u == v && !lists[v].test(c)) c = lists[v].lowest();
              fixed.add(u, c);
            }
          mutated.L = ListAssignment(std::move(lists));
          mutated.r = std::move(fixed);
        }
      } else {
        int v = rng.below_int(nv);
        Request fixed(nv);
        bool toggled_off = mutated.r.has(v) && mutated.r.domain_size() > 1 &&
                           rng.below(2) == 0;
        for (int u = 0; u < nv; ++u) {
          if (u == v) {
            if (toggled_off) continue;
            std::vector<int> cols = mutated.L.list(v).to_vector();
            fixed.add(v, cols[rng.below_int(static_cast<int>(cols.size()))]);
          } else if (mutated.r.has(u)) {
            fixed.add(u, mutated.r.color(u));
          }
        }
        if (fixed.domain_size() == 0) continue;
        mutated.r = std::move(fixed);
      }
      long long s = score(mutated);
      if (s <= cur_score) {
        cur = std::move(mutated);
        cur_score = s;
      }
      if (cur_score < 0) {
        if (is_counterexample(g, cur, eps)) {
          report.mode = FlexSearchReport::Mode::CounterexampleFound;
          report.counterexample = std::make_pair(cur.L, cur.r);
          return report;
        }
        break;
      }
    }
  }
  report.mode = FlexSearchReport::Mode::SampledNoCounterexample;
  report.complete = false;
  return report;
}

// ---- flexibility number and the chain -------------------------------------------

FlexUpper flex_number_upper(const std::vector<int>& partite_sizes) {
  if (partite_sizes.size() < 2)
    throw InputError("needs at least two parts");
  MultipartiteGraph g(partite_sizes);
  FlexUpper result;
  result.value = coloring_number(g);
  result.certificate = "coloring-number (candidate colorings)";
  if (g.num_parts() == 2 && g.part_size(0) == g.part_size(1) &&
      g.part_size(0) >= 3) {
    int n = g.part_size(0);
    if (n < result.value) {
      result.value = n;
      result.certificate = n >= 4 ? "knn-colorer"
                                  : "knn via the balanced ternary case";
    }
  }
  return result;
}

ChainNumbers chain_check(const MultipartiteGraph& g,
                         const SearchOptions& opts) {
  if (g.num_vertices() > 10)
    throw InputError("chain_check limited to |V| <= 10");
  ChainNumbers c;
  c.chi = g.num_parts();
  c.chi_list = list_chromatic_number_small(g, opts);
  c.flex_upper = g.num_parts() >= 2
                     ? flex_number_upper(g.partite_sizes()).value
                     : 1;
  c.delta_plus_one = g.max_degree() + 1;
  if (!(c.chi <= c.chi_list && c.chi_list <= c.flex_upper &&
        c.flex_upper <= c.delta_plus_one))
    internal_failure("chi <= chi_ell <= flex-upper <= Delta+1 failed");
  return c;
}

}  // namespace flexcolor
