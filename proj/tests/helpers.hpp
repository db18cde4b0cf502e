#ifndef REVEALER_TESTS_HELPERS_HPP
#define REVEALER_TESTS_HELPERS_HPP

#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "revealer/generator.hpp"
#include "revealer/instance_io.hpp"

namespace revealer::testing {

// Row: type name, index, endowment name, allocation name.
using AgentRow = std::tuple<std::string, int, std::string, std::string>;

inline Instance make_instance(
    std::vector<std::pair<std::string, int>> agent_types,
    std::vector<std::pair<std::string, int>> house_types,
    std::vector<AgentRow> rows) {
  Instance instance;
  for (auto& [name, count] : agent_types) {
    instance.agent_type_names.push_back(name);
    instance.problem.agent_counts.push_back(count);
  }
  for (auto& [name, count] : house_types) {
    instance.house_type_names.push_back(name);
    instance.problem.house_counts.push_back(count);
  }
  int total = 0;
  for (int c : instance.problem.agent_counts) total += c;
  instance.problem.endowment.assign(total, -1);
  instance.problem.allocation.assign(total, -1);
  for (const auto& [type_name, index, endowment, allocation] : rows) {
    const int type = instance.agent_type_by_name(type_name);
    const int ordinal = instance.problem.ordinal({type, index});
    instance.problem.endowment[ordinal] = instance.house_by_name(endowment);
    instance.problem.allocation[ordinal] = instance.house_by_name(allocation);
  }
  return instance;
}

// The running example: six agents, five house types, two components.
inline Instance fig2() {
  return make_instance(
      {{"1", 3}, {"2", 2}, {"3", 1}},
      {{"h1", 1}, {"h2", 2}, {"h3", 1}, {"h4", 1}, {"h5", 1}},
      {
          {"1", 0, "h1", "h2"},
          {"1", 1, "h2", "h2"},
          {"1", 2, "h4", "h5"},
          {"2", 0, "h2", "h3"},
          {"2", 1, "h5", "h4"},
          {"3", 0, "h3", "h1"},
      });
}

// Two agents of one type who swap their two houses; not rationalizable.
inline Instance example1() {
  return make_instance({{"1", 2}}, {{"h1", 1}, {"h2", 1}},
                       {
                           {"1", 0, "h2", "h1"},
                           {"1", 1, "h1", "h2"},
                       });
}

inline int agent(const Instance& instance, const std::string& type_name,
                 int index) {
  return instance.problem.ordinal(
      {instance.agent_type_by_name(type_name), index});
}

inline std::set<std::pair<int, int>> arc_set(const Digraph& g) {
  const auto arcs = g.arcs();
  return {arcs.begin(), arcs.end()};
}

// A mixed bag of generator parameter shapes for property tests.
inline std::vector<Instance> random_instances(int count,
                                              std::uint64_t seed_base,
                                              int max_types = 4,
                                              int max_mult = 3) {
  std::vector<Instance> out;
  std::uint64_t seed = seed_base;
  while (static_cast<int>(out.size()) < count) {
    for (int a = 1; a <= max_types && static_cast<int>(out.size()) < count;
         ++a) {
      for (int h = 1; h <= max_types && static_cast<int>(out.size()) < count;
           ++h) {
        GenParams params;
        params.seed = seed++;
        params.agent_types = a;
        params.house_types = h;
        params.max_multiplicity = max_mult;
        params.rationalizable_bias = (seed % 2) == 0;
        try {
          out.push_back(generate_instance(params));
        } catch (const std::invalid_argument&) {
          // infeasible parameter combination; skip
        }
      }
    }
  }
  return out;
}

}  // namespace revealer::testing

#endif  // REVEALER_TESTS_HELPERS_HPP
