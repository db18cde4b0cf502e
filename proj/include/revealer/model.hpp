#ifndef REVEALER_MODEL_HPP
#define REVEALER_MODEL_HPP

#include <compare>
#include <string>
#include <vector>

namespace revealer {

// An individual agent, identified by agent type and index within the type.
// Canonical order is lexicographic by (type, index).
struct AgentId {
  int type = 0;
  int index = 0;

  friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

std::string to_string(const AgentId& a);

// A house-allocation problem: agent types and house types with
// multiplicities, plus per-agent endowment and observed allocation.
// Agents are addressed by ordinal in canonical (type, index) order;
// houses are addressed by dense type id. House copies have no identity
// of their own.
struct Problem {
  std::vector<int> agent_counts;  // agents per agent type
  std::vector<int> house_counts;  // copies per house type
  std::vector<int> endowment;     // house type owned, by agent ordinal
  std::vector<int> allocation;    // house type received, by agent ordinal

  int num_agent_types() const { return static_cast<int>(agent_counts.size()); }
  int num_house_types() const { return static_cast<int>(house_counts.size()); }
  int num_agents() const { return static_cast<int>(endowment.size()); }

  int ordinal(const AgentId& a) const;
  AgentId agent_at(int ordinal) const;
  int type_of(int ordinal) const { return agent_at(ordinal).type; }

  friend bool operator==(const Problem&, const Problem&) = default;
};

// One failed structural invariant. `subject` is a house type id for the
// house-count kinds, an agent type id for AgentTypeCount, -1 otherwise.
struct Violation {
  enum class Kind {
    AgentTypeCount,
    HouseTypeCount,
    SupplyMismatch,
    EndowmentTotality,
    AllocationTotality,
    EndowmentRange,
    AllocationRange,
    EndowmentSupply,
    AllocationSupply,
  };

  Kind kind;
  int subject = -1;
  std::string message;
};

// Checks every structural invariant. Empty result means the problem is
// well formed: positive counts, total endowment/allocation maps, and the
// number of agents endowed with (and receiving) each house type equal to
// its supply.
std::vector<Violation> validate(const Problem& p);

enum class Comparison { StrictlyPrefers, Equal, StrictlyDisprefers };

// One strict order over house types per agent type; rank 1 is the favorite.
// Agents of the same type share the order. Copies of a house type are
// interchangeable, so preferences never mention individual copies.
class PreferenceProfile {
 public:
  PreferenceProfile() = default;

  // ranking[type] lists house ids favorite-first. Throws
  // std::invalid_argument unless every entry is a permutation of the same
  // house set.
  explicit PreferenceProfile(std::vector<std::vector<int>> ranking);

  int num_types() const { return static_cast<int>(ranking_.size()); }
  int num_houses() const {
    return ranking_.empty() ? 0 : static_cast<int>(ranking_[0].size());
  }

  // Houses of `type` in preference order, favorite first.
  const std::vector<int>& order(int type) const;

  // 1-based rank of `house` for `type`.
  int rank(int type, int house) const;

  Comparison compare(int type, int house_a, int house_b) const;
  bool strictly_prefers(int type, int house_a, int house_b) const;

  friend bool operator==(const PreferenceProfile& a,
                         const PreferenceProfile& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<std::vector<int>> ranking_;  // [type][rank-1] = house
  std::vector<std::vector<int>> rank_of_;  // [type][house] = rank
};

// A coalition and a reallocation of its own endowments. members are agent
// ordinals, sub_allocation is parallel to members. Whether it blocks is a
// property of a profile; see oracle.hpp.
struct BlockingCoalition {
  std::vector<int> members;
  std::vector<int> sub_allocation;

  friend bool operator==(const BlockingCoalition&,
                         const BlockingCoalition&) = default;
};

}  // namespace revealer

#endif  // REVEALER_MODEL_HPP
