#include "flexcolor/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace flexcolor {

void internal_failure(const std::string& what, const std::string& dump) {
  std::fprintf(stderr, "flexcolor internal invariant violation: %s\n",
               what.c_str());
  if (!dump.empty()) std::fprintf(stderr, "instance dump:\n%s\n", dump.c_str());
  std::fflush(stderr);
  std::abort();
}

MultipartiteGraph::MultipartiteGraph(std::vector<int> partite_sizes)
    : sizes_(std::move(partite_sizes)) {
  if (sizes_.empty()) throw InputError("graph needs at least one part");
  offsets_.reserve(sizes_.size());
  for (int s : sizes_) {
    if (s < 1) throw InputError("every partite size must be >= 1");
    offsets_.push_back(n_);
    n_ += s;
  }
}

Vertex MultipartiteGraph::vertex_at(int flat) const {
  int part = 0;
  while (part + 1 < num_parts() && offsets_[part + 1] <= flat) ++part;
  return Vertex{part, flat - offsets_[part]};
}

int MultipartiteGraph::max_degree() const {
  int min_size = *std::min_element(sizes_.begin(), sizes_.end());
  return n_ - min_size;
}

std::vector<int> MultipartiteGraph::sorted_sizes() const {
  std::vector<int> s = sizes_;
  std::sort(s.begin(), s.end());
  return s;
}

NormalizedGraph MultipartiteGraph::normalized() const {
  std::vector<int> order(num_parts());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sizes_[a] < sizes_[b]; });
  std::vector<int> sorted;
  sorted.reserve(order.size());
  for (int p : order) sorted.push_back(sizes_[p]);
  return NormalizedGraph{MultipartiteGraph(sorted), order};
}

void Request::add(int flat, int color) {
  if (flat < 0 || flat >= static_cast<int>(colors_.size()))
    throw InputError("request vertex out of range");
  if (color < 0) throw InputError("request color must be nonnegative");
  if (colors_[flat] >= 0) throw InputError("duplicate request for a vertex");
  colors_[flat] = color;
  ++domain_;
}

std::vector<int> Request::domain() const {
  std::vector<int> d;
  for (int i = 0; i < static_cast<int>(colors_.size()); ++i)
    if (colors_[i] >= 0) d.push_back(i);
  return d;
}

ListAssignment::ListAssignment(std::vector<ColorSet> lists,
                               std::vector<long long> labels)
    : lists_(std::move(lists)), labels_(std::move(labels)) {
  for (const ColorSet& l : lists_)
    if (l.empty()) throw InputError("every list must be nonempty");
  if (labels_.empty()) {
    int p = pot().highest() + 1;
    labels_.resize(p);
    std::iota(labels_.begin(), labels_.end(), 0);
  }
}

ColorSet ListAssignment::pot() const {
  ColorSet u;
  for (const ColorSet& l : lists_) u |= l;
  return u;
}

bool ListAssignment::is_k_assignment(int k) const {
  for (const ColorSet& l : lists_)
    if (l.count() != k) return false;
  return true;
}

bool ListAssignment::is_ab_assignment(const MultipartiteGraph& g, int a,
                                      int b) const {
  if (g.num_parts() != 2 || size() != g.num_vertices()) return false;
  for (int i = 0; i < size(); ++i) {
    int want = g.vertex_at(i).part == 0 ? a : b;
    if (lists_[i].count() != want) return false;
  }
  return true;
}

bool is_proper(const MultipartiteGraph& g, const Coloring& f) {
  if (f.size() != g.num_vertices())
    throw InputError("coloring does not cover the vertex set");
  if (!f.total()) throw InputError("coloring must be total");
  // Properness reduces to per-part used-color sets being pairwise disjoint.
  ColorSet seen;
  int flat = 0;
  for (int p = 0; p < g.num_parts(); ++p) {
    ColorSet used;
    for (int i = 0; i < g.part_size(p); ++i, ++flat) {
      int c = f.color(flat);
      if (c >= ColorSet::kMaxColors) throw InputError("color out of range");
      used.set(c);
    }
    if (!(used & seen).empty()) return false;
    seen |= used;
  }
  return true;
}

bool respects_lists(const MultipartiteGraph& g, const ListAssignment& L,
                    const Coloring& f) {
  if (L.size() != g.num_vertices() || f.size() != g.num_vertices())
    throw InputError("assignment/coloring does not match the vertex set");
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!L.list(v).test(f.color(v))) return false;
  return true;
}

int satisfied_count(const Request& r, const Coloring& f) {
  if (r.size() > f.size())
    throw InputError("request domain exceeds the colored vertex set");
  int n = 0;
  for (int v = 0; v < r.size(); ++v)
    if (r.has(v) && f.color(v) == r.color(v)) ++n;
  return n;
}

namespace {

// Adjacency bitmasks derived edge-by-edge; the brute-force routes work from
// these, not from the part structure.
std::vector<std::uint32_t> adjacency_masks(const MultipartiteGraph& g) {
  int n = g.num_vertices();
  std::vector<std::uint32_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(g.vertex_at(u), g.vertex_at(v)))
        adj[u] |= std::uint32_t{1} << v;
  return adj;
}

}  // namespace

Rational hall_ratio_bruteforce(const MultipartiteGraph& g) {
  int n = g.num_vertices();
  if (n > 12)
    throw InputError("hall_ratio_bruteforce limited to |V| <= 12");
  auto adj = adjacency_masks(g);
  // alpha[D] for every vertex subset D, via max over independent S <= D.
  std::vector<int> alpha(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if ((s >> v) & 1)
        if (adj[v] & s) independent = false;
    if (independent) alpha[s] = __builtin_popcount(s);
  }
  // alpha(G[D]) = max alpha over subsets; propagate upward.
  for (std::uint32_t d = 1; d < (std::uint32_t{1} << n); ++d)
    for (int v = 0; v < n; ++v)
      if ((d >> v) & 1) {
        std::uint32_t sub = d & ~(std::uint32_t{1} << v);
        if (alpha[sub] > alpha[d]) alpha[d] = alpha[sub];
      }
  Rational best(0);
  for (std::uint32_t d = 1; d < (std::uint32_t{1} << n); ++d) {
    Rational ratio(__builtin_popcount(d), alpha[d]);
    if (ratio > best) best = ratio;
  }
  return best;
}

Rational hall_ratio(const MultipartiteGraph& g) {
  Rational closed(g.num_parts(), 1);
  if (g.num_vertices() <= 12) {
    Rational brute = hall_ratio_bruteforce(g);
    if (brute != closed)
      internal_failure("hall_ratio closed form disagrees with brute force: " +
                       to_string(closed) + " vs " + to_string(brute));
  }
  return closed;
}

int coloring_number_bruteforce(const MultipartiteGraph& g) {
  int n = g.num_vertices();
  if (n > 10)
    throw InputError("coloring_number_bruteforce limited to |V| <= 10");
  auto adj = adjacency_masks(g);
  // Degeneracy via repeated removal of a minimum-degree vertex.
  std::uint32_t alive = (n == 32 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << n) - 1);
  int degeneracy = 0;
  while (alive) {
    int best = -1, best_deg = n + 1;
    for (int v = 0; v < n; ++v)
      if ((alive >> v) & 1) {
        int deg = __builtin_popcount(adj[v] & alive);
        if (deg < best_deg) {
          best_deg = deg;
          best = v;
        }
      }
    degeneracy = std::max(degeneracy, best_deg);
    alive &= ~(std::uint32_t{1} << best);
  }
  return degeneracy + 1;
}

int coloring_number(const MultipartiteGraph& g) {
  std::vector<int> s = g.sorted_sizes();
  int col = 1;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) col += s[i];
  if (g.num_vertices() <= 10) {
    int brute = coloring_number_bruteforce(g);
    if (brute != col)
      internal_failure("coloring_number closed form disagrees with brute force: " +
                       std::to_string(col) + " vs " + std::to_string(brute));
  }
  return col;
}

int independence_number_bruteforce(const MultipartiteGraph& g) {
  int n = g.num_vertices();
  if (n > 12)
    throw InputError("independence_number_bruteforce limited to |V| <= 12");
  auto adj = adjacency_masks(g);
  int best = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if ((s >> v) & 1)
        if (adj[v] & s) independent = false;
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

int independence_number(const MultipartiteGraph& g) {
  int alpha = *std::max_element(g.partite_sizes().begin(),
                                g.partite_sizes().end());
  if (g.num_vertices() <= 12) {
    int brute = independence_number_bruteforce(g);
    if (brute != alpha)
      internal_failure("independence_number closed form disagrees with brute force");
  }
  return alpha;
}

void validate_request(const MultipartiteGraph& g, const ListAssignment& L,
                      const Request& r) {
  if (r.size() != g.num_vertices() || L.size() != g.num_vertices())
    throw InputError("request does not match the vertex set");
  if (r.empty()) throw InputError("request domain must be nonempty");
  for (int v = 0; v < r.size(); ++v)
    if (r.has(v) && !L.list(v).test(r.color(v)))
      throw InputError("requested color is not in the vertex's list");
}

}  // namespace flexcolor
