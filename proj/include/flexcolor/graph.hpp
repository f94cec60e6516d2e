// Core data model: complete multipartite graphs, list assignments,
// requests, colorings, and the basic graph invariants.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexcolor/colorset.hpp"
#include "flexcolor/rational.hpp"

namespace flexcolor {

// Thrown on malformed user input (bad instance files, shape mismatches,
// invalid requests).  Internal invariant violations abort instead.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Prints the message and diagnostic dump to stderr, then aborts.  Used when
// a construction that is supposed to be exhaustive falls through; these
// indicate implementation bugs, not inputs.
[[noreturn]] void internal_failure(const std::string& what,
                                   const std::string& dump = "");

struct Vertex {
  int part = 0;
  int index = 0;

  bool operator==(const Vertex& o) const {
    return part == o.part && index == o.index;
  }
  bool operator<(const Vertex& o) const {  // part-major order
    return part != o.part ? part < o.part : index < o.index;
  }
};

struct NormalizedGraph;

// Complete multipartite graph K_{n_1,...,n_k}: vertices are (part, index)
// pairs and two vertices are adjacent iff their parts differ.
class MultipartiteGraph {
 public:
  explicit MultipartiteGraph(std::vector<int> partite_sizes);

  int num_parts() const { return static_cast<int>(sizes_.size()); }
  int part_size(int part) const { return sizes_[part]; }
  const std::vector<int>& partite_sizes() const { return sizes_; }
  int num_vertices() const { return n_; }

  int flat_index(Vertex v) const { return offsets_[v.part] + v.index; }
  Vertex vertex_at(int flat) const;
  bool valid(Vertex v) const {
    return v.part >= 0 && v.part < num_parts() && v.index >= 0 &&
           v.index < sizes_[v.part];
  }

  bool adjacent(Vertex a, Vertex b) const { return a.part != b.part; }
  int degree(Vertex v) const { return n_ - sizes_[v.part]; }
  int max_degree() const;

  std::vector<int> sorted_sizes() const;

  // View with partite sizes sorted ascending; part_order[i] is the original
  // part placed at position i (stable on ties).
  NormalizedGraph normalized() const;

  bool operator==(const MultipartiteGraph& o) const { return sizes_ == o.sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int n_ = 0;
};

struct NormalizedGraph {
  MultipartiteGraph graph;
  std::vector<int> part_order;
};

// Total map vertex -> color, stored flat in part-major order.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {}
  static Coloring uncolored(int n) { return Coloring(std::vector<int>(n, -1)); }

  int color(int flat) const { return colors_[flat]; }
  void set_color(int flat, int c) { colors_[flat] = c; }
  int size() const { return static_cast<int>(colors_.size()); }
  bool total() const {
    for (int c : colors_)
      if (c < 0) return false;
    return true;
  }
  const std::vector<int>& flat() const { return colors_; }

 private:
  std::vector<int> colors_;
};

// Partial map vertex -> requested color; -1 marks vertices without a request.
class Request {
 public:
  Request() = default;
  explicit Request(int n) : colors_(n, -1) {}

  void add(int flat, int color);
  bool has(int flat) const { return colors_[flat] >= 0; }
  int color(int flat) const { return colors_[flat]; }
  int domain_size() const { return domain_; }
  bool empty() const { return domain_ == 0; }
  int size() const { return static_cast<int>(colors_.size()); }
  std::vector<int> domain() const;  // flat indices, ascending

 private:
  std::vector<int> colors_;
  int domain_ = 0;
};

// Per-vertex finite sets of colors over a dense pot 0..p-1.  The original
// input labels are retained for reporting; generated assignments use the
// identity labeling.
class ListAssignment {
 public:
  ListAssignment() = default;
  // Dense lists; labels default to the identity.
  ListAssignment(std::vector<ColorSet> lists,
                 std::vector<long long> labels = {});

  int size() const { return static_cast<int>(lists_.size()); }
  const ColorSet& list(int flat) const { return lists_[flat]; }
  const std::vector<ColorSet>& lists() const { return lists_; }

  ColorSet pot() const;
  int pot_size() const { return pot().count(); }

  bool is_k_assignment(int k) const;
  // On a bipartite graph: size-a lists on part 0, size-b lists on part 1.
  bool is_ab_assignment(const MultipartiteGraph& g, int a, int b) const;

  long long label_of(int dense_color) const {
    if (dense_color >= 0 && dense_color < static_cast<int>(labels_.size()))
      return labels_[dense_color];
    return dense_color;
  }
  const std::vector<long long>& labels() const { return labels_; }

 private:
  std::vector<ColorSet> lists_;
  std::vector<long long> labels_;
};

// ---- basic operations -----------------------------------------------------

// True iff no two vertices in different parts share a color.  f must be a
// total coloring of g.
bool is_proper(const MultipartiteGraph& g, const Coloring& f);

// True iff f(v) is drawn from L(v) for every vertex.
bool respects_lists(const MultipartiteGraph& g, const ListAssignment& L,
                    const Coloring& f);

// |{v in D : f(v) = r(v)}|.
int satisfied_count(const Request& r, const Coloring& f);

// ---- invariants (closed form + brute-force cross-check) --------------------

// Hall ratio rho(G) = max over nonempty induced subgraphs of |V(H)|/alpha(H).
// Equals the number of parts; cross-checked against the brute force for
// |V| <= 12 (aborts on disagreement).
Rational hall_ratio(const MultipartiteGraph& g);
Rational hall_ratio_bruteforce(const MultipartiteGraph& g);

// col(G) = 1 + n_1 + ... + n_{k-1} with sizes sorted ascending; cross-checked
// against the degeneracy-ordering brute force for |V| <= 10.
int coloring_number(const MultipartiteGraph& g);
int coloring_number_bruteforce(const MultipartiteGraph& g);

// alpha(G) = max partite size; cross-checked by brute force for |V| <= 12.
int independence_number(const MultipartiteGraph& g);
int independence_number_bruteforce(const MultipartiteGraph& g);

// Validates that r is a request of L: nonempty domain, r(v) in L(v).
void validate_request(const MultipartiteGraph& g, const ListAssignment& L,
                      const Request& r);

}  // namespace flexcolor
