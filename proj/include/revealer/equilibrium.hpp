#ifndef REVEALER_EQUILIBRIUM_HPP
#define REVEALER_EQUILIBRIUM_HPP

#include <boost/rational.hpp>
#include <vector>

#include "revealer/graph.hpp"
#include "revealer/model.hpp"

namespace revealer {

// Exact prices; copies of a house type share one price.
using Price = boost::rational<long long>;

struct PriceVector {
  std::vector<Price> by_house;

  friend bool operator==(const PriceVector&, const PriceVector&) = default;
};

// Supporting prices descending along the component order: houses whose
// copies sit in component m (0-based) of M cost M - m. All copies of a
// house type sit in one component; a house type spanning components
// signals an upstream bug and throws std::logic_error.
PriceVector construct_prices(const Problem& p, const SccPartition& order);

// Competitive equilibrium at `prices`: every agent affords its allocated
// house from the value of its endowment and no affordable house beats it.
bool verify_ce(const Problem& p, const PreferenceProfile& profile,
               const PriceVector& prices);

}  // namespace revealer

#endif  // REVEALER_EQUILIBRIUM_HPP
