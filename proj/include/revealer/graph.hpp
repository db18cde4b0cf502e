#ifndef REVEALER_GRAPH_HPP
#define REVEALER_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "revealer/model.hpp"

namespace revealer {

// Directed graph over vertices 0..n-1. Self-loops are allowed; duplicate
// arcs collapse to one.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int num_vertices)
      : out_(num_vertices), indegree_(num_vertices, 0) {}

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return num_arcs_; }

  void add_arc(int from, int to);
  bool has_arc(int from, int to) const;

  // Out-neighbours of v, ascending.
  const std::vector<int>& out(int v) const { return out_[v]; }
  int outdegree(int v) const { return static_cast<int>(out_[v].size()); }
  int indegree(int v) const { return indegree_[v]; }

  // All arcs as (from, to) pairs, ascending.
  std::vector<std::pair<int, int>> arcs() const;

 private:
  std::vector<std::vector<int>> out_;
  std::vector<int> indegree_;
  int num_arcs_ = 0;
};

// Partition of the vertices into maximal strongly connected components.
// Components are listed in ascending order of their smallest vertex and
// each component lists its vertices ascending.
struct SccPartition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;  // vertex -> index into components
};

// Sequence of distinct vertices; the arc back from the last to the first
// is implied. A single vertex encodes a self-loop.
using Cycle = std::vector<int>;

// One arc per agent: for each house type, the agents receiving it are
// matched positionally (canonical order) to the agents endowed with it.
// Every vertex of the result has indegree and outdegree exactly 1.
Digraph build_small_graph(const Problem& p);

// Arc (a, b) present iff allocation(a) = endowment(b). Superset of the
// small graph's arcs.
Digraph build_big_graph(const Problem& p);

// Tarjan's algorithm, iterative.
SccPartition scc_partition(const Digraph& g);

// Same partition with the component order reversed.
SccPartition reverse_order(const SccPartition& part);

// Decomposes a graph whose vertices all have indegree = outdegree = 1 into
// vertex-disjoint cycles covering every vertex. Cycles are listed by
// smallest vertex and start at it. Throws std::invalid_argument when a
// vertex breaks the degree precondition.
std::vector<Cycle> cycle_partition(const Digraph& g);

// A cycle in `big` visiting every vertex of `component` exactly once,
// built by splicing the small-graph cycles inside the component together
// at endowment-equal vertices. `component` must be an SCC of `big` built
// from `p`, and `small_cycles` a cycle partition of the whole vertex set.
// Throws std::logic_error when no admissible splice exists, which cannot
// happen for a true SCC.
Cycle scc_cover_cycle(const Problem& p, const Digraph& big,
                      const std::vector<int>& component,
                      const std::vector<Cycle>& small_cycles);

// First arc (scan order: tail ascending, then head) that leaves its
// component, if any. Big graphs built from a valid problem have none.
std::optional<std::pair<int, int>> find_cross_component_arc(
    const Digraph& g, const SccPartition& part);

}  // namespace revealer

#endif  // REVEALER_GRAPH_HPP
