#include "revealer/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace revealer {

namespace {

void require_profile_shape(const Problem& p, const PreferenceProfile& profile) {
  if (profile.num_types() != p.num_agent_types() ||
      profile.num_houses() != p.num_house_types()) {
    throw std::invalid_argument(
        "profile shape does not match the problem: " +
        std::to_string(profile.num_types()) + " types over " +
        std::to_string(profile.num_houses()) + " houses, expected " +
        std::to_string(p.num_agent_types()) + " over " +
        std::to_string(p.num_house_types()));
  }
}

}  // namespace

bool verify_blocking(const Problem& p, const PreferenceProfile& profile,
                     const BlockingCoalition& coalition) {
  require_profile_shape(p, profile);
  if (coalition.members.size() != coalition.sub_allocation.size()) {
    throw std::invalid_argument(
        "coalition members and sub-allocation differ in length");
  }
  if (coalition.members.empty()) {
    throw std::invalid_argument("coalition is empty");
  }
  std::vector<char> seen(p.num_agents(), 0);
  for (int m : coalition.members) {
    if (m < 0 || m >= p.num_agents()) {
      throw std::invalid_argument("coalition member " + std::to_string(m) +
                                  " out of range");
    }
    if (seen[m]) {
      throw std::invalid_argument("coalition member " + std::to_string(m) +
                                  " listed twice");
    }
    seen[m] = 1;
  }
  for (int h : coalition.sub_allocation) {
    if (h < 0 || h >= p.num_house_types()) {
      throw std::invalid_argument("sub-allocation house " + std::to_string(h) +
                                  " out of range");
    }
  }

  // Condition 1: the coalition reallocates exactly its own endowments.
  std::vector<int> balance(p.num_house_types(), 0);
  for (std::size_t j = 0; j < coalition.members.size(); ++j) {
    ++balance[p.endowment[coalition.members[j]]];
    --balance[coalition.sub_allocation[j]];
  }
  if (std::any_of(balance.begin(), balance.end(),
                  [](int b) { return b != 0; })) {
    return false;
  }

  // Condition 2: all weakly better off, at least one strictly.
  bool strict = false;
  for (std::size_t j = 0; j < coalition.members.size(); ++j) {
    const int member = coalition.members[j];
    const int type = p.type_of(member);
    const int now = p.allocation[member];
    const int then = coalition.sub_allocation[j];
    switch (profile.compare(type, then, now)) {
      case Comparison::StrictlyDisprefers:
        return false;
      case Comparison::StrictlyPrefers:
        strict = true;
        break;
      case Comparison::Equal:
        break;
    }
  }
  return strict;
}

namespace {

// Can some house from `pool` (sorted multiset of the coalition's
// endowments) serve `member` at least as well as its allocation?
bool member_can_weakly_improve(const Problem& p,
                               const PreferenceProfile& profile,
                               const std::vector<int>& pool, int member) {
  const int type = p.type_of(member);
  const int current_rank = profile.rank(type, p.allocation[member]);
  return std::any_of(pool.begin(), pool.end(), [&](int h) {
    return profile.rank(type, h) <= current_rank;
  });
}

bool member_can_strictly_improve(const Problem& p,
                                 const PreferenceProfile& profile,
                                 const std::vector<int>& pool, int member) {
  const int type = p.type_of(member);
  const int current_rank = profile.rank(type, p.allocation[member]);
  return std::any_of(pool.begin(), pool.end(), [&](int h) {
    return profile.rank(type, h) < current_rank;
  });
}

std::optional<BlockingCoalition> find_blocking_in_subset(
    const Problem& p, const PreferenceProfile& profile,
    const std::vector<int>& members) {
  std::vector<int> pool;
  pool.reserve(members.size());
  for (int m : members) pool.push_back(p.endowment[m]);
  std::sort(pool.begin(), pool.end());

  // Permutation-independent pruning; skipping a subset with no blocking
  // reallocation cannot change the canonical witness.
  bool any_strict = false;
  for (int m : members) {
    if (!member_can_weakly_improve(p, profile, pool, m)) return std::nullopt;
    any_strict = any_strict || member_can_strictly_improve(p, profile, pool, m);
  }
  if (!any_strict) return std::nullopt;

  // Distinct multiset assignments in lexicographic order.
  do {
    bool all_weak = true;
    bool strict = false;
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int type = p.type_of(members[j]);
      switch (profile.compare(type, pool[j], p.allocation[members[j]])) {
        case Comparison::StrictlyDisprefers:
          all_weak = false;
          break;
        case Comparison::StrictlyPrefers:
          strict = true;
          break;
        case Comparison::Equal:
          break;
      }
      if (!all_weak) break;
    }
    if (all_weak && strict) {
      return BlockingCoalition{members, pool};
    }
  } while (std::next_permutation(pool.begin(), pool.end()));
  return std::nullopt;
}

}  // namespace

CoreResult is_core(const Problem& p, const PreferenceProfile& profile,
                   int max_agents) {
  require_profile_shape(p, profile);
  const int n = p.num_agents();
  if (n > max_agents) {
    throw std::invalid_argument("size guard exceeded: " + std::to_string(n) +
                                " agents, guard is " +
                                std::to_string(max_agents));
  }

  // Subsets by size, then lexicographic membership.
  for (int k = 1; k <= n; ++k) {
    std::vector<int> members(k);
    std::iota(members.begin(), members.end(), 0);
    for (;;) {
      if (auto witness = find_blocking_in_subset(p, profile, members)) {
        return CoreResult{false, std::move(witness)};
      }
      int i = k - 1;
      while (i >= 0 && members[i] == n - k + i) --i;
      if (i < 0) break;
      ++members[i];
      for (int j = i + 1; j < k; ++j) members[j] = members[j - 1] + 1;
    }
  }
  return CoreResult{true, std::nullopt};
}

ExhaustiveResult rationalizable_exhaustive(const Problem& p,
                                           std::uint64_t max_profiles,
                                           int max_agents) {
  const int alpha = p.num_agent_types();
  const int eta = p.num_house_types();
  if (p.num_agents() > max_agents) {
    throw std::invalid_argument("size guard exceeded: " +
                                std::to_string(p.num_agents()) +
                                " agents, guard is " +
                                std::to_string(max_agents));
  }
  std::uint64_t factorial = 1;
  for (int i = 2; i <= eta; ++i) {
    if (factorial > max_profiles / i) {
      throw std::invalid_argument("profile space exceeds the guard");
    }
    factorial *= i;
  }
  std::uint64_t total = 1;
  for (int t = 0; t < alpha; ++t) {
    if (factorial != 0 && total > max_profiles / factorial) {
      throw std::invalid_argument("profile space exceeds the guard");
    }
    total *= factorial;
  }
  (void)total;

  std::vector<std::vector<int>> perms(alpha, std::vector<int>(eta));
  for (auto& perm : perms) std::iota(perm.begin(), perm.end(), 0);

  ExhaustiveResult result;
  for (;;) {
    PreferenceProfile profile{perms};
    ++result.profiles_enumerated;
    if (is_core(p, profile, max_agents).in_core) {
      result.rationalizable = true;
      result.witness_profile = std::move(profile);
      return result;
    }
    // Odometer over per-type permutations, last type fastest; a wrapped
    // next_permutation leaves the vector back at ascending order.
    int t = alpha - 1;
    while (t >= 0 && !std::next_permutation(perms[t].begin(), perms[t].end())) {
      --t;
    }
    if (t < 0) break;
  }
  return result;
}

}  // namespace revealer
