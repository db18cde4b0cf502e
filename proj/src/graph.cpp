#include "revealer/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace revealer {

void Digraph::add_arc(int from, int to) {
  if (from < 0 || from >= num_vertices() || to < 0 || to >= num_vertices()) {
    throw std::out_of_range("arc (" + std::to_string(from) + "," +
                            std::to_string(to) + ") out of range");
  }
  auto& row = out_[from];
  auto it = std::lower_bound(row.begin(), row.end(), to);
  if (it != row.end() && *it == to) return;
  row.insert(it, to);
  ++indegree_[to];
  ++num_arcs_;
}

bool Digraph::has_arc(int from, int to) const {
  const auto& row = out_[from];
  return std::binary_search(row.begin(), row.end(), to);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> all;
  all.reserve(num_arcs_);
  for (int v = 0; v < num_vertices(); ++v) {
    for (int w : out_[v]) all.emplace_back(v, w);
  }
  return all;
}

namespace {

// Agents grouped by a house attribute (endowment or allocation), each
// group in canonical (ascending ordinal) order.
std::vector<std::vector<int>> agents_by_house(const std::vector<int>& map,
                                              int num_houses) {
  std::vector<std::vector<int>> groups(num_houses);
  for (int a = 0; a < static_cast<int>(map.size()); ++a) {
    groups[map[a]].push_back(a);
  }
  return groups;
}

}  // namespace

Digraph build_small_graph(const Problem& p) {
  Digraph g(p.num_agents());
  const auto receivers = agents_by_house(p.allocation, p.num_house_types());
  const auto owners = agents_by_house(p.endowment, p.num_house_types());
  for (int h = 0; h < p.num_house_types(); ++h) {
    // Same cardinality: both sides count the supply of h.
    for (std::size_t j = 0; j < receivers[h].size(); ++j) {
      g.add_arc(receivers[h][j], owners[h][j]);
    }
  }
  return g;
}

Digraph build_big_graph(const Problem& p) {
  Digraph g(p.num_agents());
  const auto owners = agents_by_house(p.endowment, p.num_house_types());
  for (int a = 0; a < p.num_agents(); ++a) {
    for (int b : owners[p.allocation[a]]) g.add_arc(a, b);
  }
  return g;
}

SccPartition scc_partition(const Digraph& g) {
  const int n = g.num_vertices();
  std::vector<int> dfs_number(n, -1);
  std::vector<int> low_link(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  stack.reserve(n);
  std::vector<std::vector<int>> components;
  int next_number = 0;

  // Explicit DFS frames: (vertex, next out-arc index).
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (dfs_number[root] != -1) continue;
    dfs_number[root] = low_link[root] = next_number++;
    stack.push_back(root);
    on_stack[root] = 1;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      const auto [v, i] = frames.back();
      if (i < g.out(v).size()) {
        ++frames.back().second;
        const int w = g.out(v)[i];
        if (dfs_number[w] == -1) {
          dfs_number[w] = low_link[w] = next_number++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low_link[v] = std::min(low_link[v], dfs_number[w]);
        }
      } else {
        frames.pop_back();
        if (!frames.empty()) {
          const int parent = frames.back().first;
          low_link[parent] = std::min(low_link[parent], low_link[v]);
        }
        if (low_link[v] == dfs_number[v]) {
          components.emplace_back();
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            components.back().push_back(w);
          } while (w != v);
        }
      }
    }
  }

  // Deterministic order: components by smallest vertex, members ascending.
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());

  SccPartition part;
  part.components = std::move(components);
  part.component_of.assign(n, -1);
  for (int idx = 0; idx < static_cast<int>(part.components.size()); ++idx) {
    for (int v : part.components[idx]) part.component_of[v] = idx;
  }
  return part;
}

SccPartition reverse_order(const SccPartition& part) {
  SccPartition rev;
  rev.components.assign(part.components.rbegin(), part.components.rend());
  rev.component_of = part.component_of;
  const int m = static_cast<int>(part.components.size());
  for (auto& c : rev.component_of) {
    if (c >= 0) c = m - 1 - c;
  }
  return rev;
}

std::vector<Cycle> cycle_partition(const Digraph& g) {
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    if (g.outdegree(v) != 1) {
      throw std::invalid_argument("cycle partition: vertex " +
                                  std::to_string(v) + " has outdegree " +
                                  std::to_string(g.outdegree(v)));
    }
    if (g.indegree(v) != 1) {
      throw std::invalid_argument("cycle partition: vertex " +
                                  std::to_string(v) + " has indegree " +
                                  std::to_string(g.indegree(v)));
    }
  }
  std::vector<char> visited(n, 0);
  std::vector<Cycle> cycles;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    Cycle cycle;
    int v = start;
    do {
      visited[v] = 1;
      cycle.push_back(v);
      v = g.out(v)[0];
    } while (v != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

namespace {

// Rotates a cycle in place so that `front` comes first.
void rotate_to_front(Cycle& cycle, int front) {
  auto it = std::find(cycle.begin(), cycle.end(), front);
  std::rotate(cycle.begin(), it, cycle.end());
}

}  // namespace

Cycle scc_cover_cycle(const Problem& p, const Digraph& big,
                      const std::vector<int>& component,
                      const std::vector<Cycle>& small_cycles) {
  std::vector<char> in_component(big.num_vertices(), 0);
  for (int v : component) in_component[v] = 1;

  // Small cycles never straddle an SCC boundary.
  std::vector<Cycle> inside;
  for (const Cycle& c : small_cycles) {
    std::size_t hits = 0;
    for (int v : c) hits += in_component[v];
    if (hits == 0) continue;
    if (hits != c.size()) {
      throw std::logic_error("small cycle straddles the component boundary");
    }
    Cycle normalized = c;
    rotate_to_front(normalized, *std::min_element(c.begin(), c.end()));
    inside.push_back(std::move(normalized));
  }
  if (inside.empty()) {
    throw std::logic_error("component contains no small cycle");
  }
  std::sort(inside.begin(), inside.end(),
            [](const Cycle& a, const Cycle& b) { return a[0] < b[0]; });

  // Inductive merge: grow a covering cycle by splicing in, at each step,
  // the smallest pending small cycle that shares a house type with it.
  // Splicing at endowment-equal u (merged) and v (incoming) keeps every
  // consecutive pair an arc of the big graph.
  Cycle merged = inside[0];
  std::vector<Cycle> pending(inside.begin() + 1, inside.end());
  while (!pending.empty()) {
    int chosen = -1;
    int splice_u = -1;
    int splice_v = -1;
    for (std::size_t k = 0; k < pending.size() && chosen < 0; ++k) {
      std::vector<int> merged_sorted = merged;
      std::sort(merged_sorted.begin(), merged_sorted.end());
      std::vector<int> incoming_sorted = pending[k];
      std::sort(incoming_sorted.begin(), incoming_sorted.end());
      for (int u : merged_sorted) {
        for (int v : incoming_sorted) {
          if (p.endowment[u] == p.endowment[v]) {
            chosen = static_cast<int>(k);
            splice_u = u;
            splice_v = v;
            break;
          }
        }
        if (chosen >= 0) break;
      }
    }
    if (chosen < 0) {
      throw std::logic_error(
          "no pending small cycle shares a house type with the merged "
          "cycle; component is not strongly connected");
    }
    Cycle incoming = pending[chosen];
    pending.erase(pending.begin() + chosen);
    rotate_to_front(merged, splice_u);
    rotate_to_front(incoming, splice_v);
    merged.insert(merged.end(), incoming.begin(), incoming.end());
  }

  rotate_to_front(merged, *std::min_element(merged.begin(), merged.end()));

  // Self-check: a covering cycle visits each component vertex once and
  // every consecutive pair is an arc.
  if (merged.size() != component.size()) {
    throw std::logic_error("cover cycle does not match component size");
  }
  for (std::size_t j = 0; j < merged.size(); ++j) {
    const int from = merged[j];
    const int to = merged[(j + 1) % merged.size()];
    if (!big.has_arc(from, to)) {
      throw std::logic_error("cover cycle uses missing arc (" +
                             std::to_string(from) + "," + std::to_string(to) +
                             ")");
    }
  }
  return merged;
}

std::optional<std::pair<int, int>> find_cross_component_arc(
    const Digraph& g, const SccPartition& part) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int w : g.out(v)) {
      if (part.component_of[v] != part.component_of[w]) {
        return std::make_pair(v, w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace revealer
