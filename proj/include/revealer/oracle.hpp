#ifndef REVEALER_ORACLE_HPP
#define REVEALER_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "revealer/model.hpp"

namespace revealer {

// Brute-force ground truth at desk scale. Everything here enumerates; the
// guards exist so a stray large instance fails fast instead of hanging.
inline constexpr int kOracleAgentGuard = 12;
inline constexpr std::uint64_t kOracleProfileGuard = 1'000'000;

// Definition check for a blocking coalition: the sub-allocation permutes
// the members' own endowments, every member weakly improves and at least
// one strictly. Structural defects (unknown agents, duplicate members,
// arity mismatch) throw std::invalid_argument; a well-formed coalition
// that fails the definition returns false.
bool verify_blocking(const Problem& p, const PreferenceProfile& profile,
                     const BlockingCoalition& coalition);

struct CoreResult {
  bool in_core = true;
  std::optional<BlockingCoalition> witness;
};

// Enumerates every nonempty coalition (by size, then lexicographic
// membership) and every distinct reallocation of its endowment multiset
// (lexicographic), returning the first blocking coalition found.
// Throws std::invalid_argument past the agent guard.
CoreResult is_core(const Problem& p, const PreferenceProfile& profile,
                   int max_agents = kOracleAgentGuard);

struct ExhaustiveResult {
  bool rationalizable = false;
  std::optional<PreferenceProfile> witness_profile;
  std::uint64_t profiles_enumerated = 0;
};

// Enumerates all strict profiles, eta! per agent type, in lexicographic
// order with type 0 most significant; rationalizable iff some profile puts
// the allocation in the core. Throws std::invalid_argument when the
// profile space exceeds max_profiles or the instance exceeds max_agents.
ExhaustiveResult rationalizable_exhaustive(
    const Problem& p, std::uint64_t max_profiles = kOracleProfileGuard,
    int max_agents = kOracleAgentGuard);

}  // namespace revealer

#endif  // REVEALER_ORACLE_HPP
