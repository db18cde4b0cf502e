#ifndef REVEALER_RATIONALIZE_HPP
#define REVEALER_RATIONALIZE_HPP

#include <optional>
#include <utility>
#include <variant>

#include "revealer/graph.hpp"
#include "revealer/model.hpp"

namespace revealer {

// Two agents of the same type in one component of the big graph that
// receive different house types. first < second in canonical order.
struct ViolatingPair {
  int component = 0;
  int first = 0;
  int second = 0;
};

struct Rationalizable {
  SccPartition scc_order;
  PreferenceProfile profile;
};

struct NotRationalizable {
  ViolatingPair pair;
  Cycle cover_cycle;  // covers the offending component
};

using Verdict = std::variant<Rationalizable, NotRationalizable>;

inline bool is_rationalizable(const Verdict& v) {
  return std::holds_alternative<Rationalizable>(v);
}

// Scans components in `part` order and returns the lexicographically first
// (component, first, second) violation, if any.
std::optional<ViolatingPair> find_violation(const Problem& p,
                                            const SccPartition& part);

// Decides rationalizability: the observed allocation can be a strong-core
// outcome iff same-type agents in the same component of the big graph
// receive the same house type. The positive verdict carries a constructed
// rationalizing profile; the negative one carries the first violating pair
// and a cycle covering its component.
Verdict check(const Problem& p);

// Builds the rationalizing profile along the given component order: in
// each component, every agent type present gets the house its members
// receive at its lowest still-unassigned rank; leftover ranks are filled
// by ascending house id. Throws std::invalid_argument when same-type
// agents in one component received different houses (run check first).
PreferenceProfile construct_profile(const Problem& p,
                                    const SccPartition& order);

// Necessary condition only: same-type agents with equal endowments must
// receive equal house types. Returns the first violating pair.
std::optional<std::pair<int, int>> equal_treatment_check(const Problem& p);

// Turns a negative certificate into a blocking coalition valid under
// `profile`: cut the covering cycle just after the better-treated agent of
// the pair, walk to the worse-treated one, and let each member take its
// successor's endowment (the worse-treated agent takes the cut endowment).
// Throws std::invalid_argument when the certificate does not fit `p`.
BlockingCoalition blocking_witness(const Problem& p,
                                   const PreferenceProfile& profile,
                                   const NotRationalizable& cert);

// A profile under which the observed allocation is never a strong-core
// outcome: either some agent strictly prefers its endowment, or two agents
// of different types want to swap theirs. Requires at least two agent
// types and two house types.
PreferenceProfile adversarial_profile(const Problem& p);

}  // namespace revealer

#endif  // REVEALER_RATIONALIZE_HPP
