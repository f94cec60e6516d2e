// Exact oracles: L-colorability, request maximization, and f-/(a,b)-
// choosability by exhaustive search with the small-pot reduction, canonical
// (symmetry-reduced) enumeration, and the blocking-set reformulation for
// bipartite instances.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flexcolor/graph.hpp"
#include "flexcolor/rational.hpp"

namespace flexcolor {

struct ColorableResult {
  bool colorable = false;
  std::optional<Coloring> witness;
  long long nodes = 0;
};

// Decides L-colorability with exhaustive certainty.  Bipartite graphs use
// the transversal reduction on the first part: a proper coloring exists iff
// some transversal of part 0 has a used-color set S with L(y) not contained
// in S for every y in part 1 (part 1 is then colored greedily).  With three
// or more parts, backtracks part by part over used-color sets.
ColorableResult is_colorable(const MultipartiteGraph& g,
                             const ListAssignment& L);

// Independent bipartite route used for cross-checks: non-colorable iff every
// transversal of part 0 is blocked by some part-1 list.
bool blocking_is_colorable(const MultipartiteGraph& g, const ListAssignment& L);

enum class SatStatus { NotColorable, Solved };

struct MaxSatResult {
  SatStatus status = SatStatus::NotColorable;
  int best = -1;
  std::optional<Coloring> witness;
  long long nodes = 0;
};

// Exact maximum of satisfied_count over all proper L-colorings, with a
// witness attaining it.  Branch and bound over parts (fail-first part order,
// requested colors tried first, bound = satisfied + requests still alive).
MaxSatResult max_satisfied(const MultipartiteGraph& g, const ListAssignment& L,
                           const Request& r);

// max_satisfied(...).best >= ceil(eps * |D|), compared in exact rationals.
bool epsilon_satisfiable(const MultipartiteGraph& g, const ListAssignment& L,
                         const Request& r, const Rational& eps);

enum class Decision { Choosable, NotChoosable, Timeout };

struct SearchStats {
  long long nodes = 0;    // inner search nodes over examined classes
  long long classes = 0;  // canonical classes examined
  double ms = 0;
  int pot = 0;  // pot bound the enumeration ran under
};

struct ChoosabilityVerdict {
  Decision decision = Decision::Timeout;
  std::optional<ListAssignment> counterexample;  // present iff NotChoosable
  SearchStats stats;
  std::string note;
  bool bounded_pot_only = false;  // verdict only covers the declared pot
};

enum class SearchMode { Auto, Exhaustive, Shortcut };

struct SearchOptions {
  int workers = 0;             // 0 = auto (FLEXCOLOR_WORKERS / hardware)
  bool canonical = true;       // symmetry-reduced enumeration
  double budget_seconds = 0;   // 0 = unlimited
  std::optional<int> pot_bound;
  SearchMode mode = SearchMode::Auto;
};

// Exhaustive f-choosability.  When every size is < |V|, the pot is
// restricted to |V|-1 colors (a non-f-choosable graph then has a bad
// assignment within that pot); otherwise pot_bound must be supplied.
// Enumeration covers assignments up to color permutation and permutation of
// same-part vertices with equal list sizes.
ChoosabilityVerdict is_f_choosable(const MultipartiteGraph& g,
                                   const std::vector<int>& sizes,
                                   const SearchOptions& opts = {});

// (a,b)-choosability of K_{m,n} (size-a lists on the m-part).  Fast paths:
// lists larger than the opposite part are always colorable greedily; when
// the shape matches the transversal-family criterion (opposite lists of
// size m, or a-lists of size n), the answer is the closed form b < t^n.
// Otherwise decides exhaustively via the blocking-set reformulation.
ChoosabilityVerdict is_ab_choosable(int m, int n, int a, int b,
                                    const SearchOptions& opts = {});

// Least k such that K is f-choosable with all sizes k; |V| <= 10 guardrail.
int list_chromatic_number_small(const MultipartiteGraph& g,
                                const SearchOptions& opts = {});

// Deterministic normal form for reporting: lists sorted, per-part equal-size
// list groups sorted lexicographically, colors renamed by first appearance;
// iterated to a fixpoint (lex-least snapshot on the rare cycle).
ListAssignment normalize_assignment(const MultipartiteGraph& g,
                                    const ListAssignment& L);

// The transversal-family assignment on K_{n,b}: n pairwise-disjoint t-lists
// on the first part, the t^n transversal n-sets cyclically repeated as the
// second-part lists.  Non-colorable whenever b >= t^n.
ListAssignment transversal_family_assignment(int t, int n, long long b);

// Distinct used-color sets over all transversals of the given lists.
std::vector<ColorSet> transversal_unions(const std::vector<ColorSet>& lists);

// Canonical assignments with the given per-vertex sizes under the pot bound,
// in enumeration order; stops at cap+1 items (signalling overflow).
std::vector<ListAssignment> enumerate_canonical_assignments(
    const MultipartiteGraph& g, const std::vector<int>& sizes, int pot,
    long long cap);

}  // namespace flexcolor
