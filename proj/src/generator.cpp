#include "revealer/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "revealer/rationalize.hpp"
#include "revealer/rng.hpp"

namespace revealer {

namespace {

// Draws `parts` values in [1, cap] whose sum lands in [min_total,
// max_total], uniformly one coordinate at a time within the bounds that
// keep the remainder feasible.
std::vector<int> draw_composition(Rng& rng, int parts, int cap, int min_total,
                                  int max_total) {
  std::vector<int> out(parts);
  int sum = 0;
  for (int i = 0; i < parts; ++i) {
    const int remaining = parts - 1 - i;
    const int lo = std::max(1, min_total - sum - remaining * cap);
    const int hi = std::min(cap, max_total - sum - remaining);
    out[i] = rng.range(lo, hi);
    sum += out[i];
  }
  return out;
}

std::vector<int> shuffled_house_pool(Rng& rng,
                                     const std::vector<int>& house_counts) {
  std::vector<int> pool;
  for (int h = 0; h < static_cast<int>(house_counts.size()); ++h) {
    pool.insert(pool.end(), house_counts[h], h);
  }
  rng.shuffle(pool);
  return pool;
}

// Rewrites the allocation towards the rationalizability condition: while
// some component holds a same-type pair with different houses, hand the
// second agent the first one's house via a count-preserving swap. Falls
// back to a fresh shuffle when no swap partner exists; gives up after a
// bounded number of rounds.
void bias_towards_rationalizable(Rng& rng, Problem& p) {
  const int max_rounds = 4 * p.num_agents() + 8;
  for (int round = 0; round < max_rounds; ++round) {
    const auto part = scc_partition(build_big_graph(p));
    const auto violation = find_violation(p, part);
    if (!violation) return;
    const int a = violation->first;
    const int b = violation->second;
    int partner = -1;
    for (int c = 0; c < p.num_agents(); ++c) {
      if (c != a && c != b && p.allocation[c] == p.allocation[a]) {
        partner = c;
        break;
      }
    }
    if (partner >= 0) {
      std::swap(p.allocation[b], p.allocation[partner]);
    } else {
      auto pool = shuffled_house_pool(rng, p.house_counts);
      p.allocation = std::move(pool);
    }
  }
}

}  // namespace

Instance generate_instance(const GenParams& params) {
  const int alpha = params.agent_types;
  const int eta = params.house_types;
  const int cap = params.max_multiplicity;
  if (alpha < 1 || eta < 1 || cap < 1) {
    throw std::invalid_argument("generator parameters must be positive");
  }
  // Totals must agree: sum K in [alpha, alpha*cap] must meet
  // sum L in [eta, eta*cap].
  const int min_total = std::max(alpha, eta);
  const int max_total = std::min(alpha * cap, eta * cap);
  if (min_total > max_total) {
    throw std::invalid_argument(
        "infeasible generator parameters: " + std::to_string(alpha) +
        " agent types and " + std::to_string(eta) +
        " house types cannot reach a common total with multiplicity <= " +
        std::to_string(cap));
  }

  Rng rng(params.seed);
  Instance instance;
  Problem& p = instance.problem;
  p.agent_counts = draw_composition(rng, alpha, cap, min_total, max_total);
  const int total = std::accumulate(p.agent_counts.begin(),
                                    p.agent_counts.end(), 0);
  p.house_counts = draw_composition(rng, eta, cap, total, total);

  p.endowment = shuffled_house_pool(rng, p.house_counts);
  p.allocation = shuffled_house_pool(rng, p.house_counts);
  if (params.rationalizable_bias) {
    bias_towards_rationalizable(rng, p);
  }

  for (int t = 0; t < alpha; ++t) {
    instance.agent_type_names.push_back(std::to_string(t + 1));
  }
  for (int h = 0; h < eta; ++h) {
    instance.house_type_names.push_back("h" + std::to_string(h + 1));
  }
  return instance;
}

}  // namespace revealer
