#include "flexcolor/constructive.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "flexcolor/json_io.hpp"

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

}  // namespace

// ---- multipartite candidate coloring ---------------------------------------

namespace {

// Internal view with parts sorted ascending; index i maps to an original
// flat vertex through i2o.
struct Thm1Instance {
  MultipartiteGraph g;          // normalized
  std::vector<int> i2o;         // internal flat -> original flat
  std::vector<ColorSet> lists;  // internal order
  std::vector<int> req;         // internal order, -1 = no request
  int k = 0;
  int s = 0;                    // sum of all but the largest part
  std::vector<int> rank;        // color -> position in the C-descending order
  int p = 0;                    // |P|
};

Thm1Instance prepare_thm1(const MultipartiteGraph& g0, const ListAssignment& L,
                          const Request& r) {
  auto norm = g0.normalized();
  Thm1Instance inst{std::move(norm.graph), {}, {}, {}, 0, 0, {}, 0};
  inst.k = inst.g.num_parts();
  if (inst.k < 2) throw InputError("need at least two parts");
  for (int p = 0; p + 1 < inst.k; ++p) inst.s += inst.g.part_size(p);

  inst.i2o.resize(inst.g.num_vertices());
  inst.lists.resize(inst.g.num_vertices());
  inst.req.assign(inst.g.num_vertices(), -1);
  for (int p = 0; p < inst.k; ++p) {
    int orig_part = norm.part_order[p];
    for (int i = 0; i < inst.g.part_size(p); ++i) {
      int iflat = inst.g.flat_index(Vertex{p, i});
      int oflat = g0.flat_index(Vertex{orig_part, i});
      inst.i2o[iflat] = oflat;
      inst.lists[iflat] = L.list(oflat);
      if (r.has(oflat)) inst.req[iflat] = r.color(oflat);
    }
  }
  for (const ColorSet& l : inst.lists)
    if (l.count() != inst.s + 1)
      throw InputError("lists must all have size s+1 = " +
                       std::to_string(inst.s + 1) + " (s = sum of all but the "
                       "largest part)");

  // P = union of the first k-1 parts' lists, ordered by descending count of
  // last-part requests (ties by ascending color id).
  ColorSet P;
  int last_start = inst.g.flat_index(Vertex{inst.k - 1, 0});
  for (int v = 0; v < last_start; ++v) P |= inst.lists[v];
  std::vector<int> count(ColorSet::kMaxColors, 0);
  for (int v = last_start; v < inst.g.num_vertices(); ++v)
    if (inst.req[v] >= 0 && P.test(inst.req[v])) ++count[inst.req[v]];
  std::vector<int> order = P.to_vector();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (count[a] != count[b]) return count[a] > count[b];
    return a < b;
  });
  inst.p = static_cast<int>(order.size());
  inst.rank.assign(ColorSet::kMaxColors, -1);
  for (int i = 0; i < inst.p; ++i) inst.rank[order[i]] = i;
  return inst;
}

// Greedily colors the last part on top of the colors used by the other
// parts, granting requests whenever the requested color is free.
void color_last_part(const Thm1Instance& inst, const ColorSet& used_others,
                     std::vector<int>& colors) {
  int last_start = inst.g.flat_index(Vertex{inst.k - 1, 0});
  for (int v = last_start; v < inst.g.num_vertices(); ++v) {
    if (inst.req[v] >= 0 && !used_others.test(inst.req[v]))
      colors[v] = inst.req[v];
    else
      colors[v] = inst.lists[v].minus(used_others).lowest();
  }
}

// Candidate f: every vertex of the first k-1 parts takes the color of
// largest rank position (least-requested) still available against the other
// parts, then the last part is colored greedily.
std::vector<int> candidate_f(const Thm1Instance& inst) {
  std::vector<int> colors(inst.g.num_vertices(), -1);
  std::vector<ColorSet> used(inst.k);
  ColorSet all_used;
  for (int p = 0; p + 1 < inst.k; ++p) {
    for (int i = 0; i < inst.g.part_size(p); ++i) {
      int v = inst.g.flat_index(Vertex{p, i});
      ColorSet avail = inst.lists[v].minus(all_used.minus(used[p]));
      int pick = -1;
      for (int c = avail.lowest(); c != -1; c = avail.next_after(c))
        if (pick == -1 || inst.rank[c] > inst.rank[pick]) pick = c;
      colors[v] = pick;
      used[p].set(pick);
      all_used.set(pick);
    }
  }
  color_last_part(inst, all_used, colors);
  return colors;
}

// Candidate g_j: part j honors its requests, the remaining non-last parts
// avoid A ∪ B' ∪ C (falling back to weaker avoid sets if a cross-part
// collision exhausts the list), and the last part is colored greedily.
std::vector<int> candidate_g(const Thm1Instance& inst, int j) {
  std::vector<int> colors(inst.g.num_vertices(), -1);
  std::vector<ColorSet> used(inst.k);
  ColorSet all_used;

  for (int i = 0; i < inst.g.part_size(j); ++i) {
    int v = inst.g.flat_index(Vertex{j, i});
    int c = inst.req[v] >= 0 ? inst.req[v] : inst.lists[v].lowest();
    colors[v] = c;
    used[j].set(c);
    all_used.set(c);
  }

  if (inst.k >= 3) {
    int nj = inst.g.part_size(j);
    ColorSet top_nj, c_range;
    for (int c = 0; c < ColorSet::kMaxColors; ++c) {
      if (inst.rank[c] < 0) continue;
      if (inst.rank[c] < nj) top_nj.set(c);
      else if (inst.rank[c] < inst.s) c_range.set(c);
    }
    const ColorSet& A = used[j];
    int ell = (A & c_range).count();
    ColorSet B = top_nj.minus(A);
    if (B.count() < ell)
      internal_failure("candidate g_j: |B| < |A ∩ C|, impossible by counting");
    ColorSet Bp;
    for (int c = B.lowest(), taken = 0; c != -1 && taken < ell;
         c = B.next_after(c), ++taken)
      Bp.set(c);
    ColorSet avoid = A | Bp | c_range;
    ColorSet avoid_weak = A | c_range;

    for (int p = 0; p + 1 < inst.k; ++p) {
      if (p == j) continue;
      for (int i = 0; i < inst.g.part_size(p); ++i) {
        int v = inst.g.flat_index(Vertex{p, i});
        ColorSet other = all_used.minus(used[p]);
        ColorSet cand = inst.lists[v].minus(avoid).minus(other);
        int c;
        if (!cand.empty()) {
          c = cand.lowest();
        } else {
          // A cross-part collision exhausted the list.  Give up part of the
          // protected set, eating the least-requested color available.
          cand = inst.lists[v].minus(avoid_weak).minus(other);
          if (cand.empty()) cand = inst.lists[v].minus(A).minus(other);
          if (cand.empty()) cand = inst.lists[v].minus(other);
          c = -1;
          for (int x = cand.lowest(); x != -1; x = cand.next_after(x))
            if (c == -1 || inst.rank[x] > inst.rank[c]) c = x;
        }
        colors[v] = c;
        used[p].set(c);
        all_used.set(c);
      }
    }
  }
  color_last_part(inst, all_used, colors);
  return colors;
}

}  // namespace

FlexColorOutcome multipartite_flex_color(const MultipartiteGraph& g,
                                         const ListAssignment& L,
                                         const Request& r) {
  validate_request(g, L, r);
  Thm1Instance inst = prepare_thm1(g, L, r);

  std::vector<std::pair<std::string, std::vector<int>>> candidates;
  candidates.emplace_back("f", candidate_f(inst));
  for (int j = 0; j + 1 < inst.k; ++j)
    candidates.emplace_back("g" + std::to_string(j + 1), candidate_g(inst, j));

  FlexColorOutcome best;
  best.satisfied = -1;
  for (auto& [name, internal_colors] : candidates) {
    Coloring f = Coloring::uncolored(g.num_vertices());
    for (int v = 0; v < inst.g.num_vertices(); ++v)
      f.set_color(inst.i2o[v], internal_colors[v]);
    if (!is_proper(g, f) || !respects_lists(g, L, f))
      internal_failure("candidate " + name + " is not a proper list coloring",
                       instance_dump(g, L, &r));
    int sat = satisfied_count(r, f);
    if (sat > best.satisfied) {
      best.coloring = std::move(f);
      best.satisfied = sat;
      best.strategy_used = name;
    }
  }
  best.guarantee =
      static_cast<int>((r.domain_size() + inst.k - 1) / inst.k);
  if (best.satisfied < best.guarantee) {
    // The candidate recipes can be starved by cross-part collisions on
    // heavily overlapping lists.  The floor itself still holds, so fall
    // back to the exact solver (rare; reachable only on adversarial
    // overlaps).
    MaxSatResult exact = max_satisfied(g, L, r);
    if (exact.status != SatStatus::Solved || exact.best < best.guarantee)
      internal_failure("the |D|/k floor is unattainable on this instance",
                       instance_dump(g, L, &r));
    best.coloring = *exact.witness;
    best.satisfied = exact.best;
    best.strategy_used = "exact";
  }
  return best;
}

// ---- star completion --------------------------------------------------------

StarResult star_obstruction_check(const MultipartiteGraph& g,
                                  const ListAssignment& L) {
  if (g.num_parts() != 2 || g.part_size(0) != 1)
    throw InputError("star check expects K_{1,n} with the center first");
  int n = g.part_size(1);
  const ColorSet& center = L.list(0);
  if (center.count() < n)
    throw InputError("center list must have size >= n");

  // A leaf with two choices: color every other leaf, then the center, then
  // that leaf.
  for (int k = 0; k < n; ++k) {
    if (L.list(1 + k).count() < 2) continue;
    Coloring f = Coloring::uncolored(g.num_vertices());
    ColorSet leaf_used;
    for (int i = 0; i < n; ++i)
      if (i != k) {
        int c = L.list(1 + i).lowest();
        f.set_color(1 + i, c);
        leaf_used.set(c);
      }
    int cx = center.minus(leaf_used).lowest();  // <= n-1 colors used
    f.set_color(0, cx);
    f.set_color(1 + k, L.list(1 + k).minus(ColorSet::single(cx)).lowest());
    return f;
  }

  // All leaves are singletons.  A repeated singleton frees a center color.
  ColorSet unioned;
  int distinct = 0;
  for (int i = 0; i < n; ++i) {
    int c = L.list(1 + i).lowest();
    if (!unioned.test(c)) ++distinct;
    unioned.set(c);
  }
  if (distinct < n || !center.minus(unioned).empty()) {
    Coloring f = Coloring::uncolored(g.num_vertices());
    for (int i = 0; i < n; ++i) f.set_color(1 + i, L.list(1 + i).lowest());
    f.set_color(0, center.minus(unioned).lowest());
    return f;
  }
  // Pairwise disjoint singletons with center = their union: no coloring.
  StarObstruction obs;
  for (int i = 0; i < n; ++i) obs.leaf_singletons.push_back(L.list(1 + i));
  obs.center_equals_union = true;
  return obs;
}

// ---- degree-based bipartite completion --------------------------------------

Coloring degree_color_bipartite(const MultipartiteGraph& g,
                                const ListAssignment& L) {
  if (g.num_parts() != 2)
    throw InputError("degree coloring expects a bipartite graph");
  if (g.part_size(0) < 2 || g.part_size(1) < 2)
    throw InputError("degree coloring needs both parts of size >= 2");
  for (int v = 0; v < g.num_vertices(); ++v)
    if (L.list(v).count() < g.degree(g.vertex_at(v)))
      throw InputError("every list must have size >= the vertex degree");
  ColorableResult res = is_colorable(g, L);
  if (!res.colorable)
    internal_failure(
        "degree-sized bipartite instance has no proper coloring; "
        "degree-choosability guarantees one",
        instance_dump(g, L));
  return *res.witness;
}

// ---- K_{n,n} flexible colorer ------------------------------------------------

namespace {

// Internal relabeled view of K_{n,n}: xs[i]/ys[i] hold original flat ids;
// the part swap and every within-part reordering of the analysis compose
// into these arrays, and the final coloring is written back through them.
struct KnnView {
  const MultipartiteGraph& g;
  const ListAssignment& L;
  const Request& r;
  int n;
  std::vector<int> xs, ys;

  KnnView(const MultipartiteGraph& g_, const ListAssignment& L_,
          const Request& r_)
      : g(g_), L(L_), r(r_), n(g_.part_size(0)) {
    for (int i = 0; i < n; ++i) {
      xs.push_back(g.flat_index(Vertex{0, i}));
      ys.push_back(g.flat_index(Vertex{1, i}));
    }
  }

  const ColorSet& lx(int i) const { return L.list(xs[i]); }
  const ColorSet& ly(int i) const { return L.list(ys[i]); }
  int rx(int i) const { return r.has(xs[i]) ? r.color(xs[i]) : -1; }
  int ry(int i) const { return r.has(ys[i]) ? r.color(ys[i]) : -1; }

  void swap_parts() { std::swap(xs, ys); }
  int d_in_x() const {
    int c = 0;
    for (int i = 0; i < n; ++i)
      if (rx(i) >= 0) ++c;
    return c;
  }
  int d_in_y() const {
    int c = 0;
    for (int i = 0; i < n; ++i)
      if (ry(i) >= 0) ++c;
    return c;
  }
  void order_x_requested_first() {
    std::stable_sort(xs.begin(), xs.end(), [&](int a, int b) {
      return r.has(a) > r.has(b);
    });
  }
  void order_y_requested_first() {
    std::stable_sort(ys.begin(), ys.end(), [&](int a, int b) {
      return r.has(a) > r.has(b);
    });
  }
};

struct KnnBuilder {
  const KnnView& view;
  std::vector<int> colors;
  explicit KnnBuilder(const KnnView& v)
      : view(v), colors(v.g.num_vertices(), -1) {}
  void set_x(int i, int c) { colors[view.xs[i]] = c; }
  void set_y(int i, int c) { colors[view.ys[i]] = c; }
  Coloring finish() { return Coloring(colors); }
};

FlexColorOutcome knn_outcome(const KnnView& view, Coloring f,
                             const std::string& strategy) {
  if (!is_proper(view.g, f) || !respects_lists(view.g, view.L, f))
    internal_failure("K_{n,n} construction produced an improper coloring (" +
                         strategy + ")",
                     instance_dump(view.g, view.L, &view.r));
  FlexColorOutcome out;
  out.satisfied = satisfied_count(view.r, f);
  out.coloring = std::move(f);
  out.guarantee = (view.r.domain_size() + 1) / 2;
  out.strategy_used = strategy;
  if (out.satisfied < out.guarantee)
    internal_failure("K_{n,n} construction misses the |D|/2 floor (" +
                         strategy + ")",
                     instance_dump(view.g, view.L, &view.r));
  return out;
}

// Completes the star on {x_last} ∪ {leaf y's} after the given x colors are
// fixed.  Returns false when obstructed, in which case d[i] receives the
// leaf singleton colors.
bool complete_via_star(const KnnView& view, KnnBuilder& b,
                       const std::vector<int>& leaf_ys, int center_x,
                       const ColorSet& removed_from_leaves,
                       const ColorSet& removed_from_center,
                       std::vector<int>& d) {
  int nl = static_cast<int>(leaf_ys.size());
  MultipartiteGraph star({1, nl});
  std::vector<ColorSet> lists(1 + nl);
  lists[0] = view.lx(center_x).minus(removed_from_center);
  for (int i = 0; i < nl; ++i)
    lists[1 + i] = view.ly(leaf_ys[i]).minus(removed_from_leaves);
  ListAssignment sub(lists);
  StarResult res = star_obstruction_check(star, sub);
  if (std::holds_alternative<Coloring>(res)) {
    const Coloring& sf = std::get<Coloring>(res);
    b.set_x(center_x, sf.color(0));
    for (int i = 0; i < nl; ++i) b.set_y(leaf_ys[i], sf.color(1 + i));
    return true;
  }
  const StarObstruction& obs = std::get<StarObstruction>(res);
  d.assign(nl, -1);
  for (int i = 0; i < nl; ++i) d[i] = obs.leaf_singletons[i].lowest();
  return false;
}

FlexColorOutcome knn_large_domain(KnnView& view) {
  int n = view.n;
  // Position: X fully requested, y_0..y_{n-2} requested.
  if (view.d_in_x() < n) view.swap_parts();
  view.order_y_requested_first();

  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = view.rx(i);

  // Repeated requested colors: grant all of X, color Y off those colors.
  ColorSet creq;
  bool repeated = false;
  for (int i = 0; i < n; ++i) {
    if (creq.test(c[i])) repeated = true;
    creq.set(c[i]);
  }
  if (repeated) {
    KnnBuilder b(view);
    for (int i = 0; i < n; ++i) b.set_x(i, c[i]);
    for (int i = 0; i < n; ++i)
      b.set_y(i, view.ly(i).minus(creq).lowest());
    return knn_outcome(view, b.finish(), "knn:repeated-requests");
  }

  // Distinct requested colors.  If y_0 requests one of them, move that x to
  // the last slot.
  int ry0 = view.ry(0);
  for (int i = 0; i < n; ++i)
    if (c[i] == ry0) {
      std::swap(view.xs[i], view.xs[n - 1]);
      std::swap(c[i], c[n - 1]);
      break;
    }

  KnnBuilder b(view);
  b.set_y(0, ry0);
  ColorSet head;  // c_0..c_{n-2}
  for (int i = 0; i + 1 < n; ++i) {
    b.set_x(i, c[i]);
    head.set(c[i]);
  }
  std::vector<int> leaves;
  for (int i = 1; i < n; ++i) leaves.push_back(i);
  std::vector<int> d;
  if (complete_via_star(view, b, leaves, n - 1, head, ColorSet::single(ry0),
                        d))
    return knn_outcome(view, b.finish(), "knn:star-completion");

  // Obstructed: L(y_i) = {c_0..c_{n-2}, d_i}, L(x_{n-1}) = {ry0, d_1..d_{n-1}}.
  // First reconstruction: some requested leaf wants a head color c_q.
  for (int i = 1; i < n; ++i) {
    int want = view.ry(i);
    if (want < 0 || !head.test(want)) continue;
    int q = -1;
    for (int j = 0; j + 1 < n; ++j)
      if (c[j] == want) q = j;
    KnnBuilder b2(view);
    for (int i2 = 1; i2 < n; ++i2) b2.set_y(i2, want);
    ColorSet others;
    for (int j = 0; j < n; ++j)
      if (j != q) {
        b2.set_x(j, c[j]);
        others.set(c[j]);
      }
    int y0c = view.ly(0).minus(others).lowest();
    b2.set_y(0, y0c);
    b2.set_x(q, view.lx(q)
                    .minus(ColorSet::single(want))
                    .minus(ColorSet::single(y0c))
                    .lowest());
    return knn_outcome(view, b2.finish(), "knn:recolor-shared");
  }

  // Second reconstruction: every requested leaf wants its own d_i; pick one
  // with d != c_{n-1} (at most one collides, and n-2 >= 2 leaves qualify).
  int star_idx = -1;
  for (int i = 1; i + 1 < n; ++i)
    if (d[i - 1] != c[n - 1]) {
      star_idx = i;
      break;
    }
  if (star_idx == -1)
    internal_failure("K_{n,n} second reconstruction found no usable leaf",
                     instance_dump(view.g, view.L, &view.r));
  std::swap(view.ys[1], view.ys[star_idx]);
  std::swap(d[0], d[star_idx - 1]);

  KnnBuilder b3(view);
  b3.set_y(1, d[0]);  // = its request
  ColorSet tail;      // c_1..c_{n-1}
  for (int i = 1; i < n; ++i) {
    b3.set_x(i, c[i]);
    tail.set(c[i]);
  }
  for (int i = 2; i < n; ++i) b3.set_y(i, c[0]);
  int y0c = view.ly(0).minus(tail).lowest();
  b3.set_y(0, y0c);
  ColorSet x0_avoid = ColorSet::single(y0c) | ColorSet::single(d[0]) |
                      ColorSet::single(c[0]);
  b3.set_x(0, view.lx(0).minus(x0_avoid).lowest());
  return knn_outcome(view, b3.finish(), "knn:recolor-fresh");
}

FlexColorOutcome knn_mid_domain(KnnView& view) {
  int n = view.n;
  if (view.d_in_x() < view.d_in_y()) view.swap_parts();
  view.order_x_requested_first();
  view.order_y_requested_first();

  std::vector<int> c(n - 1);
  for (int i = 0; i + 1 < n; ++i) c[i] = view.rx(i);

  KnnBuilder b(view);
  ColorSet head;
  for (int i = 0; i + 1 < n; ++i) {
    b.set_x(i, c[i]);
    head.set(c[i]);
  }
  std::vector<int> leaves(n);
  std::iota(leaves.begin(), leaves.end(), 0);
  std::vector<int> d;
  if (complete_via_star(view, b, leaves, n - 1, head, ColorSet(), d))
    return knn_outcome(view, b.finish(), "knn:mid-star");

  // Obstructed: grant y_0 and n-2 head requests, finish on K_{2,n-1} by
  // degree-sized lists.
  int ry0 = view.ry(0);
  KnnBuilder b2(view);
  b2.set_y(0, ry0);
  std::vector<int> granted;
  ColorSet granted_colors;
  for (int i = 0; i + 1 < n && static_cast<int>(granted.size()) < n - 2; ++i) {
    if (c[i] == ry0) continue;
    b2.set_x(i, c[i]);
    granted.push_back(i);
    granted_colors.set(c[i]);
  }
  if (static_cast<int>(granted.size()) < n - 2)
    internal_failure("K_{n,n} mid-domain: fewer than n-2 grantable requests",
                     instance_dump(view.g, view.L, &view.r));
  std::vector<int> rem_x;
  for (int i = 0; i < n; ++i)
    if (std::find(granted.begin(), granted.end(), i) == granted.end())
      rem_x.push_back(i);
  MultipartiteGraph sub({2, n - 1});
  std::vector<ColorSet> lists(2 + (n - 1));
  for (int i = 0; i < 2; ++i)
    lists[i] = view.lx(rem_x[i]).minus(ColorSet::single(ry0));
  for (int i = 1; i < n; ++i)
    lists[2 + (i - 1)] = view.ly(i).minus(granted_colors);
  Coloring sf = degree_color_bipartite(sub, ListAssignment(lists));
  for (int i = 0; i < 2; ++i) b2.set_x(rem_x[i], sf.color(i));
  for (int i = 1; i < n; ++i) b2.set_y(i, sf.color(2 + (i - 1)));
  return knn_outcome(view, b2.finish(), "knn:mid-degree");
}

FlexColorOutcome knn_small_domain(KnnView& view) {
  int n = view.n;
  int dsize = view.r.domain_size();
  if (view.d_in_x() < view.d_in_y()) view.swap_parts();
  view.order_x_requested_first();

  int a = (dsize + 1) / 2;  // grant this many on the majority side
  KnnBuilder b(view);
  ColorSet granted_colors;
  for (int i = 0; i < a; ++i) {
    b.set_x(i, view.rx(i));
    granted_colors.set(view.rx(i));
  }
  MultipartiteGraph sub({n - a, n});
  std::vector<ColorSet> lists(n - a + n);
  for (int i = a; i < n; ++i) lists[i - a] = view.lx(i);
  for (int i = 0; i < n; ++i)
    lists[n - a + i] = view.ly(i).minus(granted_colors);
  Coloring sf = degree_color_bipartite(sub, ListAssignment(lists));
  for (int i = a; i < n; ++i) b.set_x(i, sf.color(i - a));
  for (int i = 0; i < n; ++i) b.set_y(i, sf.color(n - a + i));
  return knn_outcome(view, b.finish(), "knn:split-degree");
}

}  // namespace

FlexColorOutcome knn_flex_color(const MultipartiteGraph& g,
                                const ListAssignment& L, const Request& r) {
  if (g.num_parts() != 2 || g.part_size(0) != g.part_size(1))
    throw InputError("expected K_{n,n}");
  int n = g.part_size(0);
  if (n <= 3)
    throw InputError("n >= 4 required; exact search covers smaller sizes");
  if (!L.is_k_assignment(n))
    throw InputError("expected an n-assignment on K_{n,n}");
  validate_request(g, L, r);

  KnnView view(g, L, r);
  int dsize = r.domain_size();
  if (dsize >= 2 * n - 1) return knn_large_domain(view);
  if (dsize >= 2 * n - 3) return knn_mid_domain(view);
  return knn_small_domain(view);
}

// ---- transversal-family colorer and counterexample ---------------------------

Coloring precolor_choose(const MultipartiteGraph& g, const ListAssignment& L) {
  if (g.num_parts() != 2) throw InputError("expected a bipartite graph");
  int n = g.part_size(0);
  long long b = g.part_size(1);
  int t = L.list(0).count();
  for (int i = 0; i < n; ++i)
    if (L.list(i).count() != t)
      throw InputError("first-part lists must share one size t");
  for (int i = 0; i < g.part_size(1); ++i)
    if (L.list(n + i).count() != n)
      throw InputError("second-part lists must have size n");
  long long tn = checked_pow(t, n);
  if (tn >= 0 && b >= tn)
    throw InputError("requires b < t^n");

  Coloring f = Coloring::uncolored(g.num_vertices());

  // Two intersecting first-part lists collapse the used set below n.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ColorSet common = L.list(i) & L.list(j);
      if (common.empty()) continue;
      int c = common.lowest();
      ColorSet used;
      for (int v = 0; v < n; ++v) {
        int cv = (v == i || v == j) ? c : L.list(v).lowest();
        f.set_color(v, cv);
        used.set(cv);
      }
      for (int y = 0; y < g.part_size(1); ++y)
        f.set_color(n + y, L.list(n + y).minus(used).lowest());
      return f;
    }

  // Disjoint lists: walk transversals until one differs from every
  // second-part list (at most b+1 are needed).
  std::vector<std::vector<int>> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = L.list(i).to_vector();
  std::vector<int> cursor(n, 0);
  for (;;) {
    ColorSet s;
    for (int i = 0; i < n; ++i) s.set(colors[i][cursor[i]]);
    bool clash = false;
    for (int y = 0; y < g.part_size(1) && !clash; ++y)
      if (L.list(n + y) == s) clash = true;
    if (!clash) {
      for (int i = 0; i < n; ++i) f.set_color(i, colors[i][cursor[i]]);
      for (int y = 0; y < g.part_size(1); ++y)
        f.set_color(n + y, L.list(n + y).minus(s).lowest());
      return f;
    }
    int i = n - 1;
    while (i >= 0 && cursor[i] + 1 == t) cursor[i--] = 0;
    if (i < 0)
      internal_failure("no free transversal although b < t^n",
                       instance_dump(g, L));
    ++cursor[i];
  }
}

ListAssignment precolor_counterexample(int t, int n, long long b) {
  long long tn = checked_pow(t, n);
  if (tn >= 0 && b < tn)
    throw InputError("requires b >= t^n");
  if (tn < 0) throw InputError("requires b >= t^n");
  return transversal_family_assignment(t, n, b);
}

}  // namespace flexcolor
