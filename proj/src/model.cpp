#include "revealer/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace revealer {

std::string to_string(const AgentId& a) {
  return "(" + std::to_string(a.type) + "," + std::to_string(a.index) + ")";
}

int Problem::ordinal(const AgentId& a) const {
  if (a.type < 0 || a.type >= num_agent_types() || a.index < 0 ||
      a.index >= agent_counts[a.type]) {
    throw std::out_of_range("no such agent " + to_string(a));
  }
  int offset = 0;
  for (int t = 0; t < a.type; ++t) offset += agent_counts[t];
  return offset + a.index;
}

AgentId Problem::agent_at(int ordinal) const {
  int rest = ordinal;
  if (rest >= 0) {
    for (int t = 0; t < num_agent_types(); ++t) {
      if (rest < agent_counts[t]) return {t, rest};
      rest -= agent_counts[t];
    }
  }
  throw std::out_of_range("agent ordinal " + std::to_string(ordinal) +
                          " out of range");
}

namespace {

std::string agent_desc(const Problem& p, int ordinal, long long total) {
  if (ordinal < total) return to_string(p.agent_at(ordinal));
  return "#" + std::to_string(ordinal);
}

}  // namespace

std::vector<Violation> validate(const Problem& p) {
  std::vector<Violation> out;
  const int alpha = p.num_agent_types();
  const int eta = p.num_house_types();

  for (int t = 0; t < alpha; ++t) {
    if (p.agent_counts[t] < 1) {
      out.push_back({Violation::Kind::AgentTypeCount, t,
                     "agent type " + std::to_string(t) + ": count " +
                         std::to_string(p.agent_counts[t]) +
                         " (must be >= 1)"});
    }
  }
  for (int h = 0; h < eta; ++h) {
    if (p.house_counts[h] < 1) {
      out.push_back({Violation::Kind::HouseTypeCount, h,
                     "house type " + std::to_string(h) + ": count " +
                         std::to_string(p.house_counts[h]) +
                         " (must be >= 1)"});
    }
  }

  const long long total_agents =
      std::accumulate(p.agent_counts.begin(), p.agent_counts.end(), 0LL);
  const long long total_supply =
      std::accumulate(p.house_counts.begin(), p.house_counts.end(), 0LL);
  if (total_agents != total_supply) {
    out.push_back({Violation::Kind::SupplyMismatch, -1,
                   "total agents " + std::to_string(total_agents) +
                       " != total house supply " +
                       std::to_string(total_supply)});
  }
  if (static_cast<long long>(p.endowment.size()) != total_agents) {
    out.push_back({Violation::Kind::EndowmentTotality, -1,
                   "endowment covers " + std::to_string(p.endowment.size()) +
                       " agents, expected " + std::to_string(total_agents)});
  }
  if (static_cast<long long>(p.allocation.size()) != total_agents) {
    out.push_back({Violation::Kind::AllocationTotality, -1,
                   "allocation covers " + std::to_string(p.allocation.size()) +
                       " agents, expected " + std::to_string(total_agents)});
  }

  std::vector<long long> endow_tally(eta, 0);
  std::vector<long long> alloc_tally(eta, 0);
  for (std::size_t a = 0; a < p.endowment.size(); ++a) {
    const int h = p.endowment[a];
    if (h < 0 || h >= eta) {
      out.push_back({Violation::Kind::EndowmentRange, -1,
                     "endowment of agent " +
                         agent_desc(p, static_cast<int>(a), total_agents) +
                         ": house " + std::to_string(h) + " out of range"});
    } else {
      ++endow_tally[h];
    }
  }
  for (std::size_t a = 0; a < p.allocation.size(); ++a) {
    const int h = p.allocation[a];
    if (h < 0 || h >= eta) {
      out.push_back({Violation::Kind::AllocationRange, -1,
                     "allocation of agent " +
                         agent_desc(p, static_cast<int>(a), total_agents) +
                         ": house " + std::to_string(h) + " out of range"});
    } else {
      ++alloc_tally[h];
    }
  }

  for (int h = 0; h < eta; ++h) {
    if (endow_tally[h] != p.house_counts[h]) {
      out.push_back({Violation::Kind::EndowmentSupply, h,
                     "endowment count for house " + std::to_string(h) + ": " +
                         std::to_string(endow_tally[h]) +
                         " agents endowed, supply is " +
                         std::to_string(p.house_counts[h])});
    }
    if (alloc_tally[h] != p.house_counts[h]) {
      out.push_back({Violation::Kind::AllocationSupply, h,
                     "allocation count for house " + std::to_string(h) + ": " +
                         std::to_string(alloc_tally[h]) +
                         " agents receive it, supply is " +
                         std::to_string(p.house_counts[h])});
    }
  }
  return out;
}

PreferenceProfile::PreferenceProfile(std::vector<std::vector<int>> ranking)
    : ranking_(std::move(ranking)) {
  const int eta =
      ranking_.empty() ? 0 : static_cast<int>(ranking_[0].size());
  rank_of_.assign(ranking_.size(), std::vector<int>(eta, 0));
  for (std::size_t t = 0; t < ranking_.size(); ++t) {
    if (static_cast<int>(ranking_[t].size()) != eta) {
      throw std::invalid_argument(
          "preference for type " + std::to_string(t) + " ranks " +
          std::to_string(ranking_[t].size()) + " houses, expected " +
          std::to_string(eta));
    }
    for (int r = 0; r < eta; ++r) {
      const int h = ranking_[t][r];
      if (h < 0 || h >= eta) {
        throw std::invalid_argument("preference for type " +
                                    std::to_string(t) + ": house " +
                                    std::to_string(h) + " out of range");
      }
      if (rank_of_[t][h] != 0) {
        throw std::invalid_argument("preference for type " +
                                    std::to_string(t) + ": house " +
                                    std::to_string(h) + " listed twice");
      }
      rank_of_[t][h] = r + 1;
    }
  }
}

const std::vector<int>& PreferenceProfile::order(int type) const {
  if (type < 0 || type >= num_types()) {
    throw std::out_of_range("unknown agent type " + std::to_string(type));
  }
  return ranking_[type];
}

int PreferenceProfile::rank(int type, int house) const {
  if (type < 0 || type >= num_types()) {
    throw std::out_of_range("unknown agent type " + std::to_string(type));
  }
  if (house < 0 || house >= num_houses()) {
    throw std::out_of_range("unknown house type " + std::to_string(house));
  }
  return rank_of_[type][house];
}

Comparison PreferenceProfile::compare(int type, int house_a,
                                      int house_b) const {
  const int ra = rank(type, house_a);
  const int rb = rank(type, house_b);
  if (ra == rb) return Comparison::Equal;
  return ra < rb ? Comparison::StrictlyPrefers
                 : Comparison::StrictlyDisprefers;
}

bool PreferenceProfile::strictly_prefers(int type, int house_a,
                                         int house_b) const {
  return compare(type, house_a, house_b) == Comparison::StrictlyPrefers;
}

}  // namespace revealer
