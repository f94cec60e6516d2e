// Flexibility-level reasoning: epsilon bounds with certificates, the
// connect-lemma classifier with derived witnesses, sampled flexibility
// checking, counterexample search, and the flexibility-number upper bound.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "flexcolor/exact.hpp"
#include "flexcolor/graph.hpp"

namespace flexcolor {

// ---- published choosability facts ------------------------------------------

// (a,b)-choosability of K_{m,n} settled by published characterizations
// (2-choosable, 3-choosable, (3,2)/(2,3) tables, the transversal-family
// criterion, and list-size monotonicity); nullopt when they do not decide.
std::optional<bool> ab_choosable_known(int m, int n, int a, int b);

// A non-colorable (a,b)-assignment for K_{m,n}, built from the catalog plus
// padding or the transversal family; nullopt when no stock source applies.
std::optional<ListAssignment> not_choosable_witness(int m, int n, int a, int b);

struct ChiEllInfo {
  int lower = 2;
  std::optional<int> exact;
};
// What the characterizations say about chi_ell(K_{m,n}).
ChiEllInfo chi_ell_known(int m, int n);

// ---- epsilon bounds ---------------------------------------------------------

struct Certificate {
  std::string tag;     // constructive-thm1 | constructive-knn | lemma-connect
                       // | literature | choosability | hall-ratio | witness
  std::string detail;  // witness name, citation, or applicability note
};

struct EpsilonBound {
  Rational lower{0};
  Rational upper{1};
  Certificate lower_cert;
  Certificate upper_cert;
};

// Tightest interval for the epsilon flexibility of K_{m,n} with t-lists
// derivable from the implemented results; rejects t below (or not
// certifiably at least) the list chromatic number.
EpsilonBound epsilon_bounds_bipartite(int m, int n, int t);

// ---- connect-lemma classifier -----------------------------------------------

struct ConnectResult {
  bool zero = false;  // epsilon = 0, with a verified witness
  std::string detail;
  // Present when zero: a k-assignment and single-vertex request with
  // max_satisfied verified to be 0.
  std::optional<ListAssignment> witness_assignment;
  std::optional<Request> witness_request;
};

// Classifies epsilon(K_{m,n}, k) через the two reduced choosability
// queries: both choosable gives >= 1/(m+n); a failing side yields a
// verified zero witness.  Requires K_{m,n} k-choosable.
ConnectResult lemma_connect_classify(int m, int n, int k);

// ---- sampling and search ------------------------------------------------------

struct FlexSearchReport {
  enum class Mode {
    SampledNoCounterexample,
    BoundedPotExhausted,
    CounterexampleFound
  };
  Mode mode = Mode::SampledNoCounterexample;
  long long examined = 0;
  bool complete = false;  // the bounded-pot space was fully enumerated
  int pot_bound = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<ListAssignment, Request>> counterexample;
};

// Samples (L, r) pairs (a deterministic adversarial pool first, then seeded
// random instances) and verifies any failure via max_satisfied.  Never
// claims flexibility.
FlexSearchReport check_flexible_sampled(const MultipartiteGraph& g, int k,
                                        const Rational& eps, long long trials,
                                        std::uint64_t seed,
                                        std::optional<int> pot_bound = {});

// Exhausts the bounded-pot canonical space when it fits the budget
// (instances examined), otherwise runs a seeded local search; hits are
// verified before reporting.
FlexSearchReport search_flexibility_counterexample(
    const MultipartiteGraph& g, int k, const Rational& eps, long long budget,
    std::optional<int> pot_bound = {}, std::uint64_t seed = 1);

// ---- flexibility number and the chain ----------------------------------------

struct FlexUpper {
  int value = 0;
  std::string certificate;
};

// Upper bound for the list flexibility number: the coloring number always,
// n for K_{n,n} with n >= 3.
FlexUpper flex_number_upper(const std::vector<int>& partite_sizes);

struct ChainNumbers {
  int chi = 0;
  int chi_list = 0;
  int flex_upper = 0;
  int delta_plus_one = 0;
};

// (chi, chi_ell, flexibility upper bound, Delta+1) with the chain asserted;
// |V| <= 10 guardrail.
ChainNumbers chain_check(const MultipartiteGraph& g,
                         const SearchOptions& opts = {});

}  // namespace flexcolor
