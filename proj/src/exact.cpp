#include "flexcolor/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "flexcolor/json_io.hpp"
#include "flexcolor/parallel.hpp"

namespace flexcolor {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct PartStateKey {
  int part;
  ColorSet forbidden;
  bool operator==(const PartStateKey& o) const {
    return part == o.part && forbidden == o.forbidden;
  }
};

struct PartStateKeyHash {
  std::size_t operator()(const PartStateKey& k) const {
    return k.forbidden.hash() * 31 + static_cast<std::size_t>(k.part);
  }
};

// ---- L-colorability -------------------------------------------------------

// Transversal route for bipartite graphs: enumerate distinct used-color sets
// of part 0 (deduplicated per level), then color part 1 greedily.
ColorableResult colorable_bipartite(const MultipartiteGraph& g,
                                    const ListAssignment& L) {
  ColorableResult res;
  int m = g.part_size(0);
  std::vector<int> choice(m, -1);
  std::vector<std::unordered_set<ColorSet, ColorSetHash>> seen(m + 1);
  long long nodes = 0;
  std::vector<ColorSet> partial(m + 1);

  std::function<bool(int)> dfs = [&](int i) -> bool {
    ++nodes;
    if (!seen[i].insert(partial[i]).second) return false;
    if (i == m) {
      const ColorSet& s = partial[m];
      for (int y = 0; y < g.part_size(1); ++y)
        if (L.list(g.flat_index(Vertex{1, y})).is_subset_of(s)) return false;
      return true;
    }
    const ColorSet& lst = L.list(i);  // part 0 occupies flat ids 0..m-1
    for (int c = lst.lowest(); c != -1; c = lst.next_after(c)) {
      choice[i] = c;
      partial[i + 1] = partial[i];
      partial[i + 1].set(c);
      if (dfs(i + 1)) return true;
    }
    return false;
  };

  res.colorable = dfs(0);
  res.nodes = nodes;
  if (res.colorable) {
    Coloring f = Coloring::uncolored(g.num_vertices());
    for (int i = 0; i < m; ++i) f.set_color(i, choice[i]);
    const ColorSet& s = partial[m];
    for (int y = 0; y < g.part_size(1); ++y) {
      int flat = g.flat_index(Vertex{1, y});
      f.set_color(flat, L.list(flat).minus(s).lowest());
    }
    res.witness = std::move(f);
  }
  return res;
}

// Part-by-part backtracking for three or more parts, with a failure memo on
// (part, forbidden-color-set) states.  Reusing a color already taken by the
// current part adds no constraint, so those choices collapse to one branch.
struct MultipartSolver {
  const MultipartiteGraph& g;
  const ListAssignment& L;
  std::unordered_set<PartStateKey, PartStateKeyHash> failed;
  std::vector<int> colors;
  long long nodes = 0;

  MultipartSolver(const MultipartiteGraph& g_, const ListAssignment& L_)
      : g(g_), L(L_), colors(g_.num_vertices(), -1) {}

  bool solve_part(int part, ColorSet forbidden) {
    ++nodes;
    if (part == g.num_parts()) return true;
    PartStateKey key{part, forbidden};
    if (failed.count(key)) return false;
    for (int i = 0; i < g.part_size(part); ++i) {
      int flat = g.flat_index(Vertex{part, i});
      if (L.list(flat).minus(forbidden).empty()) {
        failed.insert(key);
        return false;
      }
    }
    if (vertex(part, 0, forbidden, ColorSet())) return true;
    failed.insert(key);
    return false;
  }

  bool vertex(int part, int i, const ColorSet& forbidden, ColorSet used) {
    if (i == g.part_size(part)) return solve_part(part + 1, forbidden | used);
    ++nodes;
    int flat = g.flat_index(Vertex{part, i});
    ColorSet allowed = L.list(flat).minus(forbidden);
    ColorSet reuse = allowed & used;
    if (!reuse.empty()) {
      colors[flat] = reuse.lowest();
      if (vertex(part, i + 1, forbidden, used)) return true;
    }
    ColorSet fresh = allowed.minus(used);
    for (int c = fresh.lowest(); c != -1; c = fresh.next_after(c)) {
      colors[flat] = c;
      ColorSet used2 = used;
      used2.set(c);
      if (vertex(part, i + 1, forbidden, used2)) return true;
    }
    return false;
  }
};

}  // namespace

ColorableResult is_colorable(const MultipartiteGraph& g,
                             const ListAssignment& L) {
  if (L.size() != g.num_vertices())
    throw InputError("assignment does not cover the vertex set");
  if (g.num_parts() == 1) {
    Coloring f = Coloring::uncolored(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
      f.set_color(v, L.list(v).lowest());
    return ColorableResult{true, std::move(f), 1};
  }
  if (g.num_parts() == 2) return colorable_bipartite(g, L);
  MultipartSolver solver(g, L);
  ColorableResult res;
  res.colorable = solver.solve_part(0, ColorSet());
  res.nodes = solver.nodes;
  if (res.colorable) res.witness = Coloring(solver.colors);
  return res;
}

std::vector<ColorSet> transversal_unions(const std::vector<ColorSet>& lists) {
  long long product = 1;
  for (const ColorSet& l : lists) {
    product *= l.count();
    if (product > (1 << 22))
      throw InputError("transversal family too large to enumerate");
  }
  std::unordered_set<ColorSet, ColorSetHash> seen;
  std::vector<std::vector<int>> colors(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i)
    colors[i] = lists[i].to_vector();
  std::vector<int> cursor(lists.size(), 0);
  std::vector<ColorSet> partial(lists.size() + 1);
  int depth = 0;
  for (;;) {
    for (; depth < static_cast<int>(lists.size()); ++depth) {
      partial[depth + 1] = partial[depth];
      partial[depth + 1].set(colors[depth][cursor[depth]]);
    }
    seen.insert(partial[lists.size()]);
    int i = static_cast<int>(lists.size()) - 1;
    while (i >= 0 && cursor[i] + 1 == static_cast<int>(colors[i].size()))
      cursor[i--] = 0;
    if (i < 0) break;
    ++cursor[i];
    depth = i;
  }
  std::vector<ColorSet> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end(),
            [](const ColorSet& a, const ColorSet& b) {
              return ColorSet::cmp_lex(a, b) < 0;
            });
  return result;
}

bool blocking_is_colorable(const MultipartiteGraph& g,
                           const ListAssignment& L) {
  if (g.num_parts() != 2)
    throw InputError("blocking route applies to bipartite graphs only");
  std::vector<ColorSet> xs;
  for (int i = 0; i < g.part_size(0); ++i) xs.push_back(L.list(i));
  for (const ColorSet& s : transversal_unions(xs)) {
    bool blocked = false;
    for (int y = 0; y < g.part_size(1) && !blocked; ++y)
      if (L.list(g.flat_index(Vertex{1, y})).is_subset_of(s)) blocked = true;
    if (!blocked) return true;
  }
  return false;
}

// ---- max_satisfied ----------------------------------------------------------

namespace {

struct MaxSatSolver {
  const MultipartiteGraph& g;
  const ListAssignment& L;
  const Request& r;
  int k;
  std::vector<ColorSet> used;  // per part, current part under construction
  std::vector<bool> done;
  ColorSet finished_union;  // union over finished parts
  std::vector<int> colors;
  int satisfied = 0;
  int best = -1;
  std::vector<int> best_colors;
  long long nodes = 0;
  int total_requests;

  MaxSatSolver(const MultipartiteGraph& g_, const ListAssignment& L_,
               const Request& r_)
      : g(g_),
        L(L_),
        r(r_),
        k(g_.num_parts()),
        used(k),
        done(k, false),
        colors(g_.num_vertices(), -1),
        total_requests(r_.domain_size()) {}

  // Requests that could still be granted: uncolored requested vertices whose
  // color is not already owned by a different part.
  int alive_requests() const {
    int alive = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (!r.has(v) || colors[v] >= 0) continue;
      int part = g.vertex_at(v).part;
      if (!finished_union.minus(used[part]).test(r.color(v))) ++alive;
    }
    return alive;
  }

  int pick_part() const {
    int best_part = -1;
    long long best_score = 0;
    for (int p = 0; p < k; ++p) {
      if (done[p]) continue;
      long long score = 0;
      for (int i = 0; i < g.part_size(p); ++i)
        score +=
            L.list(g.flat_index(Vertex{p, i})).minus(finished_union).count();
      if (best_part == -1 || score < best_score) {
        best_part = p;
        best_score = score;
      }
    }
    return best_part;
  }

  int parts_left() const {
    int c = 0;
    for (int p = 0; p < k; ++p)
      if (!done[p]) ++c;
    return c;
  }

  void record() {
    if (satisfied > best) {
      best = satisfied;
      best_colors = colors;
    }
  }

  void search() {
    ++nodes;
    if (best == total_requests) return;
    int part = pick_part();
    if (part == -1) {
      record();
      return;
    }
    ColorSet forbidden = finished_union;
    for (int i = 0; i < g.part_size(part); ++i)
      if (L.list(g.flat_index(Vertex{part, i})).minus(forbidden).empty())
        return;  // this part cannot be colored at all
    if (parts_left() == 1) {
      // Final part: same-part colors never conflict, so every still-alive
      // request is granted and the rest take their lowest available color.
      int grants = 0;
      for (int i = 0; i < g.part_size(part); ++i) {
        int flat = g.flat_index(Vertex{part, i});
        ColorSet allowed = L.list(flat).minus(forbidden);
        if (r.has(flat) && allowed.test(r.color(flat))) {
          colors[flat] = r.color(flat);
          ++grants;
        } else {
          colors[flat] = allowed.lowest();
        }
      }
      satisfied += grants;
      record();
      satisfied -= grants;
      for (int i = 0; i < g.part_size(part); ++i)
        colors[g.flat_index(Vertex{part, i})] = -1;
      return;
    }
    vertex(part, 0, forbidden);
  }

  void vertex(int part, int i, const ColorSet& forbidden) {
    if (best == total_requests) return;
    if (i == g.part_size(part)) {
      done[part] = true;
      ColorSet saved = finished_union;
      finished_union |= used[part];
      search();
      finished_union = saved;
      done[part] = false;
      return;
    }
    ++nodes;
    if (satisfied + alive_requests() <= best) return;  // bound
    int flat = g.flat_index(Vertex{part, i});
    ColorSet allowed = L.list(flat).minus(forbidden);
    int want = r.has(flat) ? r.color(flat) : -1;

    auto try_color = [&](int c, bool grant) {
      colors[flat] = c;
      bool fresh = !used[part].test(c);
      if (fresh) used[part].set(c);
      if (grant) ++satisfied;
      vertex(part, i + 1, forbidden);
      if (grant) --satisfied;
      if (fresh) used[part].reset(c);
      colors[flat] = -1;
    };

    if (want >= 0 && allowed.test(want)) try_color(want, true);
    // Non-granting choices: all reused colors are interchangeable (they do
    // not change the part's used set), so only the lowest is branched on.
    ColorSet rest = allowed;
    if (want >= 0) rest.reset(want);
    ColorSet reuse = rest & used[part];
    if (!reuse.empty()) try_color(reuse.lowest(), false);
    ColorSet fresh = rest.minus(used[part]);
    for (int c = fresh.lowest(); c != -1; c = fresh.next_after(c))
      try_color(c, false);
  }
};

}  // namespace

MaxSatResult max_satisfied(const MultipartiteGraph& g, const ListAssignment& L,
                           const Request& r) {
  validate_request(g, L, r);
  MaxSatSolver solver(g, L, r);
  solver.search();
  MaxSatResult res;
  res.nodes = solver.nodes;
  if (solver.best < 0) {
    res.status = SatStatus::NotColorable;
    return res;
  }
  res.status = SatStatus::Solved;
  res.best = solver.best;
  res.witness = Coloring(solver.best_colors);
  return res;
}

bool epsilon_satisfiable(const MultipartiteGraph& g, const ListAssignment& L,
                         const Request& r, const Rational& eps) {
  if (eps < Rational(0) || eps > Rational(1))
    throw InputError("epsilon must lie in [0,1]");
  MaxSatResult res = max_satisfied(g, L, r);
  if (res.status == SatStatus::NotColorable) return false;
  long long need = ceil_of(eps * Rational(r.domain_size(), 1));
  return res.best >= need;
}

// ---- canonical enumeration --------------------------------------------------

namespace {

struct SlotSpec {
  int flat;   // vertex this slot colors
  int size;   // list size
  bool tied;  // same part and size as the previous slot
};

// Lazily enumerates assignments (one ColorSet per slot) in lexicographic
// order.  Canonical mode: colors appear in first-appearance order and lists
// of tied slots are lexicographically nondecreasing.
class SlotEnumerator {
 public:
  SlotEnumerator(std::vector<SlotSpec> slots, int pot, bool canonical)
      : slots_(std::move(slots)), pot_(pot), canonical_(canonical) {}

  bool next(std::vector<ColorSet>& out) {
    int n = static_cast<int>(slots_.size());
    if (!started_) {
      started_ = true;
      pos_.assign(n, 0);
      cand_.assign(n, nullptr);
      cur_.assign(n, ColorSet());
      max_used_.assign(n + 1, -1);
      if (!fill_from(0)) {
        done_ = true;
        return false;
      }
    } else if (done_) {
      return false;
    } else {
      int i = n - 1;
      for (;;) {
        if (i < 0) {
          done_ = true;
          return false;
        }
        if (advance_slot(i)) {
          if (fill_from(i + 1)) break;
        } else {
          --i;
        }
      }
    }
    out = cur_;
    return true;
  }

 private:
  using CandList = std::vector<ColorSet>;

  const CandList* candidates(int max_used, int size) {
    std::uint32_t key = static_cast<std::uint32_t>(max_used + 1) * 64u +
                        static_cast<std::uint32_t>(size);
    auto it = cache_.find(key);
    if (it != cache_.end()) return &it->second;
    CandList lists;
    if (!canonical_) {
      gen_subsets(pot_ - 1, size, ColorSet(), lists);
    } else {
      int max_new = std::min(size, pot_ - 1 - max_used);
      for (int j = 0; j <= max_new; ++j) {
        if (size - j > max_used + 1) continue;  // not enough old colors
        ColorSet base;
        for (int c = max_used + 1; c <= max_used + j; ++c) base.set(c);
        gen_subsets(max_used, size - j, base, lists);
      }
    }
    std::sort(lists.begin(), lists.end(),
              [](const ColorSet& a, const ColorSet& b) {
                return ColorSet::cmp_lex(a, b) < 0;
              });
    return &cache_.emplace(key, std::move(lists)).first->second;
  }

  // All `count`-subsets of {0..hi}, unioned with base.
  static void gen_subsets(int hi, int count, ColorSet base, CandList& out) {
    if (count == 0) {
      out.push_back(base);
      return;
    }
    if (hi + 1 < count) return;
    std::vector<int> pick(count);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      ColorSet s = base;
      for (int c : pick) s.set(c);
      out.push_back(s);
      int i = count - 1;
      while (i >= 0 && pick[i] == hi - (count - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < count; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  bool init_slot(int i) {
    cand_[i] = candidates(max_used_[i], slots_[i].size);
    std::size_t start = 0;
    if (canonical_ && slots_[i].tied) {
      const CandList& c = *cand_[i];
      start = static_cast<std::size_t>(
          std::lower_bound(c.begin(), c.end(), cur_[i - 1],
                           [](const ColorSet& a, const ColorSet& b) {
                             return ColorSet::cmp_lex(a, b) < 0;
                           }) -
          c.begin());
    }
    if (start >= cand_[i]->size()) return false;
    pos_[i] = static_cast<int>(start);
    apply_slot(i);
    return true;
  }

  bool advance_slot(int i) {
    if (pos_[i] + 1 >= static_cast<int>(cand_[i]->size())) return false;
    ++pos_[i];
    apply_slot(i);
    return true;
  }

  void apply_slot(int i) {
    cur_[i] = (*cand_[i])[pos_[i]];
    max_used_[i + 1] = std::max(max_used_[i], cur_[i].highest());
  }

  bool fill_from(int i) {
    for (; i < static_cast<int>(slots_.size()); ++i)
      if (!init_slot(i)) return false;
    return true;
  }

  std::vector<SlotSpec> slots_;
  int pot_;
  bool canonical_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> pos_;
  std::vector<const CandList*> cand_;
  std::vector<ColorSet> cur_;
  std::vector<int> max_used_;
  std::map<std::uint32_t, CandList> cache_;
};

std::vector<SlotSpec> slots_for_part(const MultipartiteGraph& g,
                                     const std::vector<int>& sizes, int part) {
  std::vector<int> order;
  for (int i = 0; i < g.part_size(part); ++i)
    order.push_back(g.flat_index(Vertex{part, i}));
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sizes[a] < sizes[b]; });
  std::vector<SlotSpec> slots;
  for (std::size_t i = 0; i < order.size(); ++i) {
    bool tied = i > 0 && sizes[order[i]] == sizes[order[i - 1]];
    slots.push_back(SlotSpec{order[i], sizes[order[i]], tied});
  }
  return slots;
}

std::vector<SlotSpec> slots_for_graph(const MultipartiteGraph& g,
                                      const std::vector<int>& sizes) {
  std::vector<SlotSpec> slots;
  for (int p = 0; p < g.num_parts(); ++p) {
    auto part_slots = slots_for_part(g, sizes, p);
    part_slots.front().tied = false;  // never tie across part boundaries
    slots.insert(slots.end(), part_slots.begin(), part_slots.end());
  }
  return slots;
}

// ---- blocking-set cover -----------------------------------------------------

struct CoverMask {
  std::vector<std::uint64_t> w;
  explicit CoverMask(int n) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  void and_not(const CoverMask& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
};

struct BlockerCandidate {
  ColorSet colors;
  int size;
  CoverMask covers;
};

// Decides whether the transversal family T can be fully covered by blockers
// drawn from the per-size budgets (a blocker is a size-s subset of some
// S in T; it covers every member of T containing it).  Deterministic branch
// and bound, branching on the uncovered set with the fewest usable blockers.
struct CoverSolver {
  const std::vector<ColorSet>& T;
  std::vector<BlockerCandidate> cands;
  std::vector<std::vector<int>> cands_for;
  std::map<int, int> budget;
  long long nodes = 0;
  int max_cover = 1;
  std::vector<int> chosen;

  CoverSolver(const std::vector<ColorSet>& T_,
              const std::map<int, int>& budget_)
      : T(T_), budget(budget_) {
    std::map<int, std::unordered_set<ColorSet, ColorSetHash>> seen;
    for (const ColorSet& s : T) {
      for (const auto& [size, cnt] : budget) {
        if (cnt <= 0 || s.count() < size) continue;
        enumerate_subsets(s, size, [&](const ColorSet& b) {
          if (!seen[size].insert(b).second) return;
          BlockerCandidate cand{b, size,
                                CoverMask(static_cast<int>(T.size()))};
          for (std::size_t i = 0; i < T.size(); ++i)
            if (b.is_subset_of(T[i])) cand.covers.set(static_cast<int>(i));
          cands.push_back(std::move(cand));
        });
      }
    }
    std::sort(cands.begin(), cands.end(),
              [](const BlockerCandidate& a, const BlockerCandidate& b) {
                if (a.size != b.size) return a.size < b.size;
                return ColorSet::cmp_lex(a.colors, b.colors) < 0;
              });
    cands_for.resize(T.size());
    for (std::size_t c = 0; c < cands.size(); ++c) {
      max_cover = std::max(max_cover, cands[c].covers.count());
      for (std::size_t i = 0; i < T.size(); ++i)
        if (cands[c].covers.test(static_cast<int>(i)))
          cands_for[i].push_back(static_cast<int>(c));
    }
  }

  template <typename Fn>
  static void enumerate_subsets(const ColorSet& s, int size, Fn&& fn) {
    std::vector<int> elems = s.to_vector();
    int n = static_cast<int>(elems.size());
    if (n < size) return;
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      ColorSet b;
      for (int i : pick) b.set(elems[i]);
      fn(b);
      int i = size - 1;
      while (i >= 0 && pick[i] == n - (size - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  bool solve(CoverMask uncovered) {
    ++nodes;
    if (uncovered.none()) return true;
    int remaining = 0;
    for (const auto& [size, cnt] : budget) remaining += cnt;
    if (remaining == 0) return false;
    if (uncovered.count() > remaining * max_cover) return false;
    int pick = -1, pick_count = -1;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (!uncovered.test(static_cast<int>(i))) continue;
      int usable = 0;
      for (int c : cands_for[i])
        if (budget[cands[c].size] > 0) ++usable;
      if (usable == 0) return false;
      if (pick == -1 || usable < pick_count) {
        pick = static_cast<int>(i);
        pick_count = usable;
      }
    }
    for (int c : cands_for[pick]) {
      if (budget[cands[c].size] == 0) continue;
      --budget[cands[c].size];
      chosen.push_back(c);
      CoverMask next = uncovered;
      next.and_not(cands[c].covers);
      if (solve(next)) return true;
      chosen.pop_back();
      ++budget[cands[c].size];
    }
    return false;
  }
};

// Distributes the chosen blockers over the second-side slots (grouped by
// list size); unused slots of a size repeat the last blocker of that size or
// fall back to the least valid list.
std::vector<ColorSet> assemble_blocker_lists(
    const std::vector<SlotSpec>& y_slots, const CoverSolver& solver) {
  std::map<int, std::vector<ColorSet>> by_size;
  for (int c : solver.chosen)
    by_size[solver.cands[c].size].push_back(solver.cands[c].colors);
  for (auto& [size, lists] : by_size)
    std::sort(lists.begin(), lists.end(),
              [](const ColorSet& a, const ColorSet& b) {
                return ColorSet::cmp_lex(a, b) < 0;
              });
  std::map<int, std::size_t> cursor;
  std::vector<ColorSet> out(y_slots.size());
  for (std::size_t i = 0; i < y_slots.size(); ++i) {
    int size = y_slots[i].size;
    auto it = by_size.find(size);
    if (it != by_size.end() && !it->second.empty()) {
      std::size_t& cur = cursor[size];
      out[i] = it->second[std::min(cur, it->second.size() - 1)];
      ++cur;
    } else {
      out[i] = ColorSet::first_n(size);
    }
  }
  return out;
}

struct BudgetGuard {
  Clock::time_point start = Clock::now();
  double limit_seconds;
  explicit BudgetGuard(double limit) : limit_seconds(limit) {}
  bool exceeded() const {
    return limit_seconds > 0 && ms_since(start) > limit_seconds * 1000.0;
  }
};

// Pulls assignments from a SlotEnumerator on demand so RoundRunner can
// parallelize over a deterministic item sequence.
class BatchSource {
 public:
  BatchSource(SlotEnumerator& en, std::size_t slot_count)
      : en_(en), width_(slot_count) {}

  bool has(std::int64_t i) {
    std::lock_guard<std::mutex> lock(mu_);
    while (!ended_ && i >= static_cast<std::int64_t>(items_.size())) {
      std::vector<ColorSet> out(width_);
      if (!en_.next(out))
        ended_ = true;
      else
        items_.push_back(std::move(out));
    }
    return i < static_cast<std::int64_t>(items_.size());
  }

  std::vector<ColorSet> item(std::int64_t i) {
    std::lock_guard<std::mutex> lock(mu_);
    return items_[static_cast<std::size_t>(i)];
  }

 private:
  SlotEnumerator& en_;
  std::size_t width_;
  std::mutex mu_;
  std::vector<std::vector<ColorSet>> items_;
  bool ended_ = false;
};

struct PotPlan {
  int pot = 0;
  bool bounded_only = false;
};

PotPlan pot_plan(const MultipartiteGraph& g, const std::vector<int>& sizes,
                 const SearchOptions& opts, int natural_cap) {
  int v = g.num_vertices();
  bool all_small = true;
  for (int s : sizes)
    if (s >= v) all_small = false;
  PotPlan plan;
  if (all_small) {
    plan.pot = std::min(v - 1, natural_cap);
    if (opts.pot_bound && *opts.pot_bound < plan.pot) {
      plan.pot = *opts.pot_bound;
      plan.bounded_only = true;
    }
  } else {
    if (!opts.pot_bound)
      throw InputError(
          "some list size is >= |V|, so the small-pot reduction does not "
          "apply; supply a pot_bound (the verdict then only covers that pot)");
    plan.pot = std::min(*opts.pot_bound, natural_cap);
    plan.bounded_only = true;
  }
  plan.pot = std::max(plan.pot, *std::max_element(sizes.begin(), sizes.end()));
  plan.pot = std::min(plan.pot, ColorSet::kMaxColors);
  return plan;
}

ListAssignment build_assignment(const MultipartiteGraph& g,
                                const std::vector<SlotSpec>& slots,
                                const std::vector<ColorSet>& slot_lists,
                                const std::vector<SlotSpec>& other_slots = {},
                                const std::vector<ColorSet>& other_lists = {}) {
  std::vector<ColorSet> lists(g.num_vertices());
  for (std::size_t i = 0; i < slots.size(); ++i)
    lists[slots[i].flat] = slot_lists[i];
  for (std::size_t i = 0; i < other_slots.size(); ++i)
    lists[other_slots[i].flat] = other_lists[i];
  return ListAssignment(std::move(lists));
}

// Exhaustive bipartite search through the blocking-set reformulation:
// enumerate canonical first-side tuples; a bad assignment completing a tuple
// exists iff the transversal family can be covered by second-side blockers.
ChoosabilityVerdict bipartite_blocking_search(const MultipartiteGraph& g,
                                              const std::vector<int>& sizes,
                                              const SearchOptions& opts) {
  auto start = Clock::now();
  ChoosabilityVerdict verdict;

  double prod[2] = {1, 1};
  for (int p = 0; p < 2; ++p)
    for (int i = 0; i < g.part_size(p); ++i)
      prod[p] *= sizes[g.flat_index(Vertex{p, i})];
  int x_part = prod[0] <= prod[1] ? 0 : 1;
  int y_part = 1 - x_part;

  std::vector<SlotSpec> x_slots = slots_for_part(g, sizes, x_part);
  std::vector<SlotSpec> y_slots = slots_for_part(g, sizes, y_part);

  int sum_x = 0;
  for (const auto& s : x_slots) sum_x += s.size;
  PotPlan plan = pot_plan(g, sizes, opts, sum_x);
  verdict.stats.pot = plan.pot;
  verdict.bounded_pot_only = plan.bounded_only;

  std::map<int, int> budgets;
  int min_y_size = g.num_vertices();
  for (const auto& s : y_slots) {
    ++budgets[s.size];
    min_y_size = std::min(min_y_size, s.size);
  }

  SlotEnumerator en(x_slots, plan.pot, opts.canonical);
  BatchSource source(en, x_slots.size());
  BudgetGuard guard(opts.budget_seconds);

  std::atomic<long long> nodes{0};
  std::atomic<long long> classes{0};
  std::mutex hit_mu;
  std::map<std::int64_t,
           std::pair<std::vector<ColorSet>, std::vector<ColorSet>>>
      hits;

  auto probe = [&](std::int64_t i) -> bool {
    std::vector<ColorSet> xs = source.item(i);
    classes.fetch_add(1);
    std::vector<ColorSet> unions = transversal_unions(xs);
    for (const ColorSet& s : unions)
      if (s.count() < min_y_size) return false;  // unblockable transversal
    CoverSolver solver(unions, budgets);
    CoverMask all(static_cast<int>(unions.size()));
    for (std::size_t t = 0; t < unions.size(); ++t)
      all.set(static_cast<int>(t));
    bool covered = solver.solve(all);
    nodes.fetch_add(solver.nodes);
    if (!covered) return false;
    std::vector<ColorSet> y_lists = assemble_blocker_lists(y_slots, solver);
    std::lock_guard<std::mutex> lock(hit_mu);
    hits.emplace(i, std::make_pair(std::move(xs), std::move(y_lists)));
    return true;
  };

  bool budget_hit = false;
  std::int64_t hit = RoundRunner::find_first(
      opts.workers, [&](std::int64_t i) { return source.has(i); }, probe,
      [&] { return guard.exceeded(); }, &budget_hit);

  verdict.stats.nodes = nodes.load();
  verdict.stats.classes = classes.load();
  verdict.stats.ms = ms_since(start);
  if (hit >= 0) {
    auto& [xs, ys] = hits.at(hit);
    ListAssignment bad = build_assignment(g, x_slots, xs, y_slots, ys);
    bad = normalize_assignment(g, bad);
    if (is_colorable(g, bad).colorable)
      internal_failure("blocking-set counterexample is colorable",
                       instance_dump(g, bad));
    verdict.decision = Decision::NotChoosable;
    verdict.counterexample = std::move(bad);
  } else if (budget_hit) {
    verdict.decision = Decision::Timeout;
    verdict.note = "budget exceeded";
  } else {
    verdict.decision = Decision::Choosable;
  }
  return verdict;
}

// Fully general route: enumerate complete assignments and test colorability.
ChoosabilityVerdict full_enumeration_search(const MultipartiteGraph& g,
                                            const std::vector<int>& sizes,
                                            const SearchOptions& opts) {
  auto start = Clock::now();
  ChoosabilityVerdict verdict;
  std::vector<SlotSpec> slots = slots_for_graph(g, sizes);
  int sum_all = 0;
  for (const auto& s : slots) sum_all += s.size;
  PotPlan plan = pot_plan(g, sizes, opts, sum_all);
  verdict.stats.pot = plan.pot;
  verdict.bounded_pot_only = plan.bounded_only;

  SlotEnumerator en(slots, plan.pot, opts.canonical);
  BatchSource source(en, slots.size());
  BudgetGuard guard(opts.budget_seconds);

  std::atomic<long long> nodes{0};
  std::atomic<long long> classes{0};
  std::mutex hit_mu;
  std::map<std::int64_t, std::vector<ColorSet>> hits;

  auto probe = [&](std::int64_t i) -> bool {
    std::vector<ColorSet> lists = source.item(i);
    classes.fetch_add(1);
    ListAssignment L = build_assignment(g, slots, lists);
    ColorableResult res = is_colorable(g, L);
    nodes.fetch_add(res.nodes);
    if (res.colorable) return false;
    std::lock_guard<std::mutex> lock(hit_mu);
    hits.emplace(i, std::move(lists));
    return true;
  };

  bool budget_hit = false;
  std::int64_t hit = RoundRunner::find_first(
      opts.workers, [&](std::int64_t i) { return source.has(i); }, probe,
      [&] { return guard.exceeded(); }, &budget_hit);

  verdict.stats.nodes = nodes.load();
  verdict.stats.classes = classes.load();
  verdict.stats.ms = ms_since(start);
  if (hit >= 0) {
    ListAssignment bad = build_assignment(g, slots, hits.at(hit));
    bad = normalize_assignment(g, bad);
    if (is_colorable(g, bad).colorable)
      internal_failure("enumerated counterexample is colorable",
                       instance_dump(g, bad));
    verdict.decision = Decision::NotChoosable;
    verdict.counterexample = std::move(bad);
  } else if (budget_hit) {
    verdict.decision = Decision::Timeout;
    verdict.note = "budget exceeded";
  } else {
    verdict.decision = Decision::Choosable;
  }
  return verdict;
}

}  // namespace

ListAssignment transversal_family_assignment(int t, int n, long long b) {
  if (t < 1 || n < 1 || b < 1) throw InputError("t, n, b must be positive");
  if (n * t > ColorSet::kMaxColors)
    throw InputError("transversal family needs too many colors");
  std::vector<ColorSet> lists;
  for (int i = 0; i < n; ++i) {
    ColorSet l;
    for (int c = i * t; c < (i + 1) * t; ++c) l.set(c);
    lists.push_back(l);
  }
  std::vector<ColorSet> family;
  std::vector<int> cursor(n, 0);
  for (;;) {
    ColorSet s;
    for (int i = 0; i < n; ++i) s.set(i * t + cursor[i]);
    family.push_back(s);
    int i = n - 1;
    while (i >= 0 && cursor[i] + 1 == t) cursor[i--] = 0;
    if (i < 0) break;
    ++cursor[i];
    if (static_cast<long long>(family.size()) > b) break;  // enough to cycle
  }
  for (long long j = 0; j < b; ++j)
    lists.push_back(family[static_cast<std::size_t>(j % family.size())]);
  return ListAssignment(std::move(lists));
}

ListAssignment normalize_assignment(const MultipartiteGraph& g,
                                    const ListAssignment& L) {
  auto flatten = [&](const std::vector<ColorSet>& lists) {
    std::vector<int> flat;
    for (const ColorSet& l : lists) {
      flat.push_back(-1);
      for (int c : l.to_vector()) flat.push_back(c);
    }
    return flat;
  };

  std::vector<ColorSet> cur = L.lists();
  std::vector<std::vector<int>> seen;
  std::vector<std::vector<ColorSet>> states;
  for (int round = 0; round < 16; ++round) {
    // Sort lists within per-part equal-size groups.
    for (int p = 0; p < g.num_parts(); ++p) {
      std::map<int, std::vector<int>> groups;
      for (int i = 0; i < g.part_size(p); ++i) {
        int flat = g.flat_index(Vertex{p, i});
        groups[cur[flat].count()].push_back(flat);
      }
      for (auto& [size, ids] : groups) {
        std::vector<ColorSet> lists;
        for (int id : ids) lists.push_back(cur[id]);
        std::sort(lists.begin(), lists.end(),
                  [](const ColorSet& a, const ColorSet& b) {
                    return ColorSet::cmp_lex(a, b) < 0;
                  });
        for (std::size_t j = 0; j < ids.size(); ++j) cur[ids[j]] = lists[j];
      }
    }
    // Rename colors by first appearance (part-major scan, elements ascending).
    std::vector<int> rename(ColorSet::kMaxColors, -1);
    int next = 0;
    for (const ColorSet& l : cur)
      for (int c : l.to_vector())
        if (rename[c] == -1) rename[c] = next++;
    std::vector<ColorSet> renamed(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (int c : cur[i].to_vector()) renamed[i].set(rename[c]);

    if (renamed == cur) return ListAssignment(renamed);
    std::vector<int> key = flatten(renamed);
    for (std::size_t s = 0; s < seen.size(); ++s)
      if (seen[s] == key) {
        std::size_t best = s;
        for (std::size_t u = s + 1; u < seen.size(); ++u)
          if (seen[u] < seen[best]) best = u;
        return ListAssignment(states[best]);
      }
    seen.push_back(std::move(key));
    states.push_back(renamed);
    cur = std::move(renamed);
  }
  return ListAssignment(cur);
}

ChoosabilityVerdict is_f_choosable(const MultipartiteGraph& g,
                                   const std::vector<int>& sizes,
                                   const SearchOptions& opts) {
  if (static_cast<int>(sizes.size()) != g.num_vertices())
    throw InputError("size function does not cover the vertex set");
  for (int s : sizes)
    if (s < 1) throw InputError("list sizes must be positive");

  ChoosabilityVerdict verdict;
  if (g.num_parts() == 1) {
    verdict.decision = Decision::Choosable;
    verdict.note = "single part: any per-vertex choice is proper";
    return verdict;
  }
  bool greedy = true;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (sizes[v] < g.degree(g.vertex_at(v)) + 1) greedy = false;
  if (greedy) {
    verdict.decision = Decision::Choosable;
    verdict.note = "every list exceeds the vertex degree: greedy coloring";
    return verdict;
  }

  if (g.num_parts() == 2 && opts.canonical)
    return bipartite_blocking_search(g, sizes, opts);
  return full_enumeration_search(g, sizes, opts);
}

namespace {

long long checked_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base > 0 && r > static_cast<long long>(4e18) / base)
      return -1;  // effectively infinite
    r *= base;
  }
  return r;
}

}  // namespace

ChoosabilityVerdict is_ab_choosable(int m, int n, int a, int b,
                                    const SearchOptions& opts) {
  if (m < 1 || n < 1 || a < 1 || b < 1)
    throw InputError("m, n, a, b must be positive");

  MultipartiteGraph g({m, n});
  auto shortcut = [&]() -> std::optional<ChoosabilityVerdict> {
    ChoosabilityVerdict v;
    if (a >= n + 1 || b >= m + 1) {
      // Lists larger than the opposite part: color the short-listed part
      // first; each vertex on the other side keeps a spare color.
      v.decision = Decision::Choosable;
      v.note = "lists exceed the opposite part size: greedy";
      return v;
    }
    if (b == m || a == n) {
      int t = (b == m) ? a : b;
      int parts = (b == m) ? m : n;
      long long count = (b == m) ? n : m;
      long long tn = checked_pow(t, parts);
      if (tn < 0 || count < tn) {
        v.decision = Decision::Choosable;
        v.note = "transversal-family criterion: fewer opposite lists than t^n";
        return v;
      }
      v.decision = Decision::NotChoosable;
      v.note = "transversal-family criterion: b >= t^n";
      ListAssignment bad = transversal_family_assignment(t, parts, count);
      if (!(b == m)) {
        // Family was built with the n-part first; swap into (m,n) order.
        std::vector<ColorSet> lists(m + n);
        for (int i = 0; i < m; ++i) lists[i] = bad.list(n + i);
        for (int i = 0; i < n; ++i) lists[m + i] = bad.list(i);
        bad = ListAssignment(std::move(lists));
      }
      if (is_colorable(g, bad).colorable)
        internal_failure("transversal-family counterexample is colorable",
                         instance_dump(g, bad));
      v.counterexample = std::move(bad);
      return v;
    }
    return std::nullopt;
  };

  if (opts.mode != SearchMode::Exhaustive) {
    if (auto v = shortcut()) return *v;
    if (opts.mode == SearchMode::Shortcut)
      throw InputError("no shortcut applies to this shape; use exhaustive mode");
  } else if (a >= m + n || b >= m + n) {
    // Sizes at or past |V| escape the small-pot reduction, but such lists
    // always exceed the opposite part, so the greedy fact answers.
    if (auto v = shortcut(); v && v->decision == Decision::Choosable) return *v;
  }

  std::vector<int> sizes(m + n, a);
  for (int i = 0; i < n; ++i) sizes[m + i] = b;
  SearchOptions inner = opts;
  inner.mode = SearchMode::Exhaustive;
  return is_f_choosable(g, sizes, inner);
}

std::vector<ListAssignment> enumerate_canonical_assignments(
    const MultipartiteGraph& g, const std::vector<int>& sizes, int pot,
    long long cap) {
  std::vector<SlotSpec> slots = slots_for_graph(g, sizes);
  SlotEnumerator en(slots, pot, /*canonical=*/true);
  std::vector<ListAssignment> out;
  std::vector<ColorSet> lists(slots.size());
  while (static_cast<long long>(out.size()) <= cap && en.next(lists))
    out.push_back(build_assignment(g, slots, lists));
  return out;
}

int list_chromatic_number_small(const MultipartiteGraph& g,
                                const SearchOptions& opts) {
  if (g.num_vertices() > 10)
    throw InputError("list_chromatic_number_small limited to |V| <= 10");
  for (int k = 1; k <= g.max_degree() + 1; ++k) {
    std::vector<int> sizes(g.num_vertices(), k);
    ChoosabilityVerdict v = is_f_choosable(g, sizes, opts);
    if (v.decision == Decision::Timeout)
      throw InputError(
          "budget exceeded while computing the list chromatic number");
    if (v.decision == Decision::Choosable) return k;
  }
  internal_failure("list chromatic number exceeded max degree + 1");
}

}  // namespace flexcolor
