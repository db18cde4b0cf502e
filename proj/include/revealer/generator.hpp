#ifndef REVEALER_GENERATOR_HPP
#define REVEALER_GENERATOR_HPP

#include <cstdint>

#include "revealer/instance_io.hpp"

namespace revealer {

struct GenParams {
  std::uint64_t seed = 0;
  int agent_types = 1;
  int house_types = 1;
  int max_multiplicity = 1;
  // Steer the random allocation towards rationalizable instances by
  // repairing same-type/same-component mismatches. Best effort.
  bool rationalizable_bias = false;
};

// Deterministic in the seed. Agent types are named "1", "2", ...; house
// types "h1", "h2", .... Throws std::invalid_argument when no valid
// instance fits the parameters.
Instance generate_instance(const GenParams& params);

}  // namespace revealer

#endif  // REVEALER_GENERATOR_HPP
