// Constructive coloring algorithms with proven satisfaction floors: the
// multipartite candidate-coloring procedure (guarantee |D|/k), the K_{n,n}
// flexible colorer for n >= 4 (guarantee |D|/2), star completion with its
// exact obstruction, degree-based bipartite completion, and the
// transversal-family colorer/counterexample pair.
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "flexcolor/exact.hpp"
#include "flexcolor/graph.hpp"

namespace flexcolor {

struct FlexColorOutcome {
  Coloring coloring;
  int satisfied = 0;
  int guarantee = 0;  // proven floor: ceil(|D|/k) or ceil(|D|/2)
  std::string strategy_used;
};

// Candidate-coloring procedure for K_{n_1,...,n_k} (any part order; parts
// are normalized ascending internally).  Requires list sizes exactly s+1
// where s = |V| - max part size; returns the best of the k candidate proper
// colorings, which satisfies at least ceil(|D|/k) requests.
FlexColorOutcome multipartite_flex_color(const MultipartiteGraph& g,
                                         const ListAssignment& L,
                                         const Request& r);

// The exact non-colorability obstruction for stars K_{1,n} with
// |L(center)| >= n: all leaf lists are disjoint singletons whose union is
// exactly the center list.
struct StarObstruction {
  std::vector<ColorSet> leaf_singletons;
  bool center_equals_union = true;
};

using StarResult = std::variant<Coloring, StarObstruction>;

// Colors K_{1,n} (part 0 = center) or returns the obstruction.
StarResult star_obstruction_check(const MultipartiteGraph& g,
                                  const ListAssignment& L);

// Proper coloring of K_{m,n} (m,n >= 2) from lists of size >= degree;
// existence is guaranteed (complete bipartite graphs with both parts of
// size >= 2 are degree-choosable), so failure aborts.
Coloring degree_color_bipartite(const MultipartiteGraph& g,
                                const ListAssignment& L);

// Flexible colorer for K_{n,n} with n-lists, n >= 4 (n <= 3 is rejected;
// exact search covers those sizes).  Satisfies at least ceil(|D|/2).
FlexColorOutcome knn_flex_color(const MultipartiteGraph& g,
                                const ListAssignment& L, const Request& r);

// Proper coloring of K_{n,b} from a (t,n)-assignment with b < t^n: either
// two first-part lists share a color, or some transversal n-set differs
// from every second-part list.
Coloring precolor_choose(const MultipartiteGraph& g, const ListAssignment& L);

// The non-colorable (t,n)-assignment family on K_{n,b} for b >= t^n.
ListAssignment precolor_counterexample(int t, int n, long long b);

}  // namespace flexcolor
