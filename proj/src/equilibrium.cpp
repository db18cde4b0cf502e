#include "revealer/equilibrium.hpp"

#include <stdexcept>
#include <string>

namespace revealer {

PriceVector construct_prices(const Problem& p, const SccPartition& order) {
  const int num_components = static_cast<int>(order.components.size());
  const int eta = p.num_house_types();
  std::vector<int> component_of_house(eta, -1);
  for (int a = 0; a < p.num_agents(); ++a) {
    const int h = p.endowment[a];
    const int c = order.component_of[a];
    if (component_of_house[h] != -1 && component_of_house[h] != c) {
      throw std::logic_error("house type " + std::to_string(h) +
                             " spans components " +
                             std::to_string(component_of_house[h]) + " and " +
                             std::to_string(c));
    }
    component_of_house[h] = c;
  }

  PriceVector prices;
  prices.by_house.reserve(eta);
  for (int h = 0; h < eta; ++h) {
    if (component_of_house[h] == -1) {
      throw std::logic_error("house type " + std::to_string(h) +
                             " is endowed to nobody");
    }
    prices.by_house.emplace_back(num_components - component_of_house[h]);
  }
  return prices;
}

bool verify_ce(const Problem& p, const PreferenceProfile& profile,
               const PriceVector& prices) {
  const int eta = p.num_house_types();
  if (static_cast<int>(prices.by_house.size()) != eta ||
      profile.num_types() != p.num_agent_types() ||
      profile.num_houses() != eta) {
    throw std::invalid_argument("prices or profile do not match the problem");
  }
  for (int a = 0; a < p.num_agents(); ++a) {
    const Price budget = prices.by_house[p.endowment[a]];
    const int received = p.allocation[a];
    if (prices.by_house[received] > budget) return false;
    const int type = p.type_of(a);
    for (int h = 0; h < eta; ++h) {
      if (prices.by_house[h] <= budget &&
          profile.strictly_prefers(type, h, received)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace revealer
