#include "revealer/rationalize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace revealer {

std::optional<ViolatingPair> find_violation(const Problem& p,
                                            const SccPartition& part) {
  for (int c = 0; c < static_cast<int>(part.components.size()); ++c) {
    const auto& comp = part.components[c];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        const int a = comp[i];
        const int b = comp[j];
        if (p.type_of(a) == p.type_of(b) &&
            p.allocation[a] != p.allocation[b]) {
          return ViolatingPair{c, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

Verdict check(const Problem& p) {
  const Digraph big = build_big_graph(p);
  const SccPartition part = scc_partition(big);
  if (const auto violation = find_violation(p, part)) {
    const Digraph small = build_small_graph(p);
    const auto small_cycles = cycle_partition(small);
    Cycle cover = scc_cover_cycle(p, big, part.components[violation->component],
                                  small_cycles);
    return NotRationalizable{*violation, std::move(cover)};
  }
  PreferenceProfile profile = construct_profile(p, part);
  return Rationalizable{part, std::move(profile)};
}

PreferenceProfile construct_profile(const Problem& p,
                                    const SccPartition& order) {
  const int alpha = p.num_agent_types();
  const int eta = p.num_house_types();
  std::vector<std::vector<int>> ranking(alpha);
  std::vector<std::vector<char>> placed(alpha, std::vector<char>(eta, 0));

  for (const auto& comp : order.components) {
    std::vector<int> house_of_type(alpha, -1);
    for (int v : comp) {
      const int t = p.type_of(v);
      const int h = p.allocation[v];
      if (house_of_type[t] != -1 && house_of_type[t] != h) {
        throw std::invalid_argument(
            "construct_profile: agents of type " + std::to_string(t) +
            " in one component receive houses " +
            std::to_string(house_of_type[t]) + " and " + std::to_string(h));
      }
      house_of_type[t] = h;
    }
    for (int t = 0; t < alpha; ++t) {
      const int h = house_of_type[t];
      if (h == -1) continue;
      if (placed[t][h]) {
        // All copies of a house type live in one component, so a house
        // assigned in an earlier component cannot reappear.
        throw std::logic_error("construct_profile: house " +
                               std::to_string(h) +
                               " reappears for type " + std::to_string(t));
      }
      ranking[t].push_back(h);
      placed[t][h] = 1;
    }
  }

  // Remaining ranks in ascending house id.
  for (int t = 0; t < alpha; ++t) {
    for (int h = 0; h < eta; ++h) {
      if (!placed[t][h]) ranking[t].push_back(h);
    }
  }
  return PreferenceProfile(std::move(ranking));
}

std::optional<std::pair<int, int>> equal_treatment_check(const Problem& p) {
  int block_start = 0;
  for (int t = 0; t < p.num_agent_types(); ++t) {
    const int block_end = block_start + p.agent_counts[t];
    for (int a = block_start; a < block_end; ++a) {
      for (int b = a + 1; b < block_end; ++b) {
        if (p.endowment[a] == p.endowment[b] &&
            p.allocation[a] != p.allocation[b]) {
          return std::make_pair(a, b);
        }
      }
    }
    block_start = block_end;
  }
  return std::nullopt;
}

BlockingCoalition blocking_witness(const Problem& p,
                                   const PreferenceProfile& profile,
                                   const NotRationalizable& cert) {
  const Cycle& cycle = cert.cover_cycle;
  const int size = static_cast<int>(cycle.size());
  int x = cert.pair.first;
  int y = cert.pair.second;
  if (x < 0 || y < 0 || x >= p.num_agents() || y >= p.num_agents() || x == y) {
    throw std::invalid_argument("certificate pair out of range");
  }
  const int type = p.type_of(x);
  if (p.type_of(y) != type) {
    throw std::invalid_argument("certificate pair mixes agent types");
  }
  if (p.allocation[x] == p.allocation[y]) {
    throw std::invalid_argument(
        "certificate pair receives the same house type");
  }
  // Orient the pair so that x holds the strictly better house for the type.
  if (profile.strictly_prefers(type, p.allocation[y], p.allocation[x])) {
    std::swap(x, y);
  }
  const auto it = std::find(cycle.begin(), cycle.end(), x);
  if (it == cycle.end() ||
      std::find(cycle.begin(), cycle.end(), y) == cycle.end()) {
    throw std::invalid_argument("certificate pair not on the cover cycle");
  }
  const int pos_x = static_cast<int>(it - cycle.begin());

  // Members run from x's successor around to y. Everyone takes the next
  // member's endowment, which replicates their observed allocation; y
  // closes the loop with the first member's endowment, a strict gain.
  const int first_member = cycle[(pos_x + 1) % size];
  std::vector<std::pair<int, int>> assignment;
  for (int idx = (pos_x + 1) % size;; idx = (idx + 1) % size) {
    const int v = cycle[idx];
    if (v == y) {
      assignment.emplace_back(v, p.endowment[first_member]);
      break;
    }
    assignment.emplace_back(v, p.endowment[cycle[(idx + 1) % size]]);
  }

  std::sort(assignment.begin(), assignment.end());
  BlockingCoalition coalition;
  for (const auto& [member, house] : assignment) {
    coalition.members.push_back(member);
    coalition.sub_allocation.push_back(house);
  }
  return coalition;
}

namespace {

std::vector<int> order_with_favorite(int favorite, int eta) {
  std::vector<int> order;
  order.reserve(eta);
  order.push_back(favorite);
  for (int h = 0; h < eta; ++h) {
    if (h != favorite) order.push_back(h);
  }
  return order;
}

}  // namespace

PreferenceProfile adversarial_profile(const Problem& p) {
  const int alpha = p.num_agent_types();
  const int eta = p.num_house_types();
  if (alpha < 2 || eta < 2) {
    throw std::invalid_argument(
        "adversarial_profile requires at least 2 agent types and 2 house "
        "types");
  }

  std::vector<std::vector<int>> ranking(alpha);
  for (int t = 0; t < alpha; ++t) {
    ranking[t].resize(eta);
    std::iota(ranking[t].begin(), ranking[t].end(), 0);
  }

  // An agent away from its endowment loses individual rationality once the
  // endowment is its type's favorite.
  for (int a = 0; a < p.num_agents(); ++a) {
    if (p.allocation[a] != p.endowment[a]) {
      ranking[p.type_of(a)] = order_with_favorite(p.endowment[a], eta);
      return PreferenceProfile(std::move(ranking));
    }
  }

  // Everyone keeps their endowment: make two agents of different types
  // covet each other's houses, so the pair blocks by swapping.
  for (int u = 0; u < p.num_agents(); ++u) {
    for (int v = u + 1; v < p.num_agents(); ++v) {
      if (p.type_of(u) != p.type_of(v) &&
          p.endowment[u] != p.endowment[v]) {
        ranking[p.type_of(u)] = order_with_favorite(p.endowment[v], eta);
        ranking[p.type_of(v)] = order_with_favorite(p.endowment[u], eta);
        return PreferenceProfile(std::move(ranking));
      }
    }
  }
  // Unreachable: with >= 2 agent types and >= 2 endowed house types some
  // cross-type pair has distinct endowments.
  throw std::logic_error("no cross-type pair with distinct endowments");
}

}  // namespace revealer
