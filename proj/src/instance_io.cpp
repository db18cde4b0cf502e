#include "revealer/instance_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace revealer {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const json& j, const std::string& where,
                  const std::set<std::string>& keys) {
  if (!j.is_object()) {
    throw ParseError(where + ": expected an object");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!keys.count(key)) {
      throw ParseError(where + ": unknown key \"" + key + "\"");
    }
  }
  for (const auto& key : keys) {
    if (!j.contains(key)) {
      throw ParseError(where + ": missing key \"" + key + "\"");
    }
  }
}

int require_count(const json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    throw ParseError(where + ": count must be an integer");
  }
  const long long c = j.get<long long>();
  if (c < 1 || c > 1'000'000) {
    throw ParseError(where + ": count " + std::to_string(c) +
                     " out of range");
  }
  return static_cast<int>(c);
}

std::string require_name(const json& j, const std::string& where) {
  if (!j.is_string() || j.get<std::string>().empty()) {
    throw ParseError(where + ": name must be a non-empty string");
  }
  return j.get<std::string>();
}

// Parses one of the two type tables, returning names and counts.
void parse_type_table(const json& j, const std::string& where,
                      std::vector<std::string>& names,
                      std::vector<int>& counts) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(where + ": expected a non-empty array");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string entry = where + "[" + std::to_string(i) + "]";
    require_keys(j[i], entry, {"name", "count"});
    std::string name = require_name(j[i]["name"], entry);
    if (!seen.insert(name).second) {
      throw ParseError(entry + ": duplicate name \"" + name + "\"");
    }
    names.push_back(std::move(name));
    counts.push_back(require_count(j[i]["count"], entry));
  }
}

}  // namespace

std::string Instance::agent_label(int ordinal) const {
  const AgentId a = problem.agent_at(ordinal);
  std::string label = agent_type_names[a.type];
  if (a.index < 26) {
    label += static_cast<char>('a' + a.index);
  } else {
    label += "#" + std::to_string(a.index);
  }
  return label;
}

int Instance::agent_type_by_name(const std::string& name) const {
  const auto it =
      std::find(agent_type_names.begin(), agent_type_names.end(), name);
  if (it == agent_type_names.end()) return -1;
  return static_cast<int>(it - agent_type_names.begin());
}

int Instance::house_by_name(const std::string& name) const {
  const auto it =
      std::find(house_type_names.begin(), house_type_names.end(), name);
  if (it == house_type_names.end()) return -1;
  return static_cast<int>(it - house_type_names.begin());
}

Instance parse_instance_schema(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, "instance", {"agent_types", "house_types", "agents"});

  Instance instance;
  parse_type_table(j["agent_types"], "agent_types", instance.agent_type_names,
                   instance.problem.agent_counts);
  parse_type_table(j["house_types"], "house_types", instance.house_type_names,
                   instance.problem.house_counts);

  const json& agents = j["agents"];
  if (!agents.is_array()) {
    throw ParseError("agents: expected an array");
  }
  const int total = std::accumulate(instance.problem.agent_counts.begin(),
                                    instance.problem.agent_counts.end(), 0);
  instance.problem.endowment.assign(total, -1);
  instance.problem.allocation.assign(total, -1);
  std::vector<char> filled(total, 0);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string entry = "agents[" + std::to_string(i) + "]";
    require_keys(agents[i], entry,
                 {"type", "index", "endowment", "allocation"});
    const std::string type_name = require_name(agents[i]["type"], entry);
    const int type = instance.agent_type_by_name(type_name);
    if (type < 0) {
      throw ParseError(entry + ": unknown agent type \"" + type_name + "\"");
    }
    if (!agents[i]["index"].is_number_integer()) {
      throw ParseError(entry + ": index must be an integer");
    }
    const long long index = agents[i]["index"].get<long long>();
    if (index < 0 || index >= instance.problem.agent_counts[type]) {
      throw ParseError(entry + ": index " + std::to_string(index) +
                       " out of range for type \"" + type_name + "\"");
    }
    const AgentId id{type, static_cast<int>(index)};
    const int ordinal = instance.problem.ordinal(id);
    if (filled[ordinal]) {
      throw ParseError(entry + ": duplicate agent (\"" + type_name + "\", " +
                       std::to_string(index) + ")");
    }
    filled[ordinal] = 1;
    for (const char* field : {"endowment", "allocation"}) {
      const std::string house_name = require_name(agents[i][field], entry);
      const int house = instance.house_by_name(house_name);
      if (house < 0) {
        throw ParseError(entry + ": unknown house type \"" + house_name +
                         "\"");
      }
      (field == std::string("endowment") ? instance.problem.endowment
                                         : instance.problem.allocation)
          [ordinal] = house;
    }
  }
  for (int ordinal = 0; ordinal < total; ++ordinal) {
    if (!filled[ordinal]) {
      throw ParseError("agents: missing record for agent " +
                       to_string(instance.problem.agent_at(ordinal)));
    }
  }
  return instance;
}

Instance parse_instance(const std::string& text) {
  Instance instance = parse_instance_schema(text);
  const auto violations = validate(instance.problem);
  if (!violations.empty()) {
    std::string message = "instance invalid:";
    for (const auto& v : violations) {
      message += "\n  " + violation_message(instance, v);
    }
    throw ParseError(message);
  }
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  ordered_json j;
  j["agent_types"] = ordered_json::array();
  for (int t = 0; t < instance.problem.num_agent_types(); ++t) {
    j["agent_types"].push_back({{"name", instance.agent_type_names[t]},
                                {"count", instance.problem.agent_counts[t]}});
  }
  j["house_types"] = ordered_json::array();
  for (int h = 0; h < instance.problem.num_house_types(); ++h) {
    j["house_types"].push_back({{"name", instance.house_type_names[h]},
                                {"count", instance.problem.house_counts[h]}});
  }
  j["agents"] = ordered_json::array();
  for (int ordinal = 0; ordinal < instance.problem.num_agents(); ++ordinal) {
    const AgentId a = instance.problem.agent_at(ordinal);
    j["agents"].push_back(
        {{"type", instance.agent_type_names[a.type]},
         {"index", a.index},
         {"endowment",
          instance.house_type_names[instance.problem.endowment[ordinal]]},
         {"allocation",
          instance.house_type_names[instance.problem.allocation[ordinal]]}});
  }
  return j.dump(2) + "\n";
}

PreferenceProfile parse_profile(const std::string& text,
                                const Instance& instance) {
  const json j = parse_json(text);
  require_keys(j, "profile", {"preferences"});
  const json& prefs = j["preferences"];
  if (!prefs.is_object()) {
    throw ParseError("preferences: expected an object");
  }
  const int alpha = instance.problem.num_agent_types();
  const int eta = instance.problem.num_house_types();
  std::vector<std::vector<int>> ranking(alpha);
  std::vector<char> seen_type(alpha, 0);
  for (const auto& [type_name, order] : prefs.items()) {
    const int type = instance.agent_type_by_name(type_name);
    if (type < 0) {
      throw ParseError("preferences: unknown agent type \"" + type_name +
                       "\"");
    }
    seen_type[type] = 1;
    if (!order.is_array() || static_cast<int>(order.size()) != eta) {
      throw ParseError("preferences[\"" + type_name + "\"]: expected " +
                       std::to_string(eta) + " house names");
    }
    std::vector<char> seen_house(eta, 0);
    for (const auto& entry : order) {
      const std::string house_name =
          require_name(entry, "preferences[\"" + type_name + "\"]");
      const int house = instance.house_by_name(house_name);
      if (house < 0) {
        throw ParseError("preferences[\"" + type_name +
                         "\"]: unknown house type \"" + house_name + "\"");
      }
      if (seen_house[house]) {
        throw ParseError("preferences[\"" + type_name + "\"]: house \"" +
                         house_name + "\" listed twice");
      }
      seen_house[house] = 1;
      ranking[type].push_back(house);
    }
  }
  for (int t = 0; t < alpha; ++t) {
    if (!seen_type[t]) {
      throw ParseError("preferences: missing agent type \"" +
                       instance.agent_type_names[t] + "\"");
    }
  }
  return PreferenceProfile(std::move(ranking));
}

std::string serialize_profile(const PreferenceProfile& profile,
                              const Instance& instance) {
  ordered_json prefs = ordered_json::object();
  for (int t = 0; t < profile.num_types(); ++t) {
    ordered_json order = ordered_json::array();
    for (int h : profile.order(t)) {
      order.push_back(instance.house_type_names[h]);
    }
    prefs[instance.agent_type_names[t]] = std::move(order);
  }
  ordered_json j;
  j["preferences"] = std::move(prefs);
  return j.dump(2) + "\n";
}

std::string violation_message(const Instance& instance, const Violation& v) {
  std::string message = v.message;
  switch (v.kind) {
    case Violation::Kind::HouseTypeCount:
    case Violation::Kind::EndowmentSupply:
    case Violation::Kind::AllocationSupply:
      if (v.subject >= 0 &&
          v.subject <
              static_cast<int>(instance.house_type_names.size())) {
        message += " (house \"" + instance.house_type_names[v.subject] + "\")";
      }
      break;
    case Violation::Kind::AgentTypeCount:
      if (v.subject >= 0 &&
          v.subject <
              static_cast<int>(instance.agent_type_names.size())) {
        message += " (type \"" + instance.agent_type_names[v.subject] + "\")";
      }
      break;
    default:
      break;
  }
  return message;
}

namespace {

ordered_json agent_json(const Instance& instance, int ordinal) {
  const AgentId a = instance.problem.agent_at(ordinal);
  return ordered_json::array(
      {instance.agent_type_names[a.type], a.index});
}

ordered_json cycle_json(const Instance& instance, const Cycle& cycle) {
  ordered_json out = ordered_json::array();
  for (int v : cycle) out.push_back(agent_json(instance, v));
  return out;
}

ordered_json prices_json(const Instance& instance, const PriceVector& prices) {
  ordered_json out = ordered_json::object();
  for (std::size_t h = 0; h < prices.by_house.size(); ++h) {
    const Price& price = prices.by_house[h];
    if (price.denominator() == 1) {
      out[instance.house_type_names[h]] = price.numerator();
    } else {
      out[instance.house_type_names[h]] =
          ordered_json::array({price.numerator(), price.denominator()});
    }
  }
  return out;
}

ordered_json coalition_json(const Instance& instance,
                            const BlockingCoalition& coalition) {
  ordered_json members = ordered_json::array();
  ordered_json houses = ordered_json::array();
  for (std::size_t j = 0; j < coalition.members.size(); ++j) {
    members.push_back(agent_json(instance, coalition.members[j]));
    houses.push_back(
        instance.house_type_names[coalition.sub_allocation[j]]);
  }
  ordered_json out;
  out["members"] = std::move(members);
  out["sub_allocation"] = std::move(houses);
  return out;
}

ordered_json profile_json(const Instance& instance,
                          const PreferenceProfile& profile) {
  return ordered_json::parse(serialize_profile(profile, instance));
}

}  // namespace

std::string serialize_validation(const Instance& instance,
                                 const std::vector<Violation>& violations) {
  ordered_json j;
  j["valid"] = violations.empty();
  j["violations"] = ordered_json::array();
  for (const auto& v : violations) {
    j["violations"].push_back(violation_message(instance, v));
  }
  return j.dump(2) + "\n";
}

std::string serialize_verdict(const Instance& instance, const Verdict& verdict,
                              const PriceVector* prices) {
  ordered_json j;
  if (const auto* yes = std::get_if<Rationalizable>(&verdict)) {
    j["rationalizable"] = true;
    j["profile"] = profile_json(instance, yes->profile);
    j["scc_order"] = ordered_json::array();
    for (const auto& comp : yes->scc_order.components) {
      ordered_json members = ordered_json::array();
      for (int v : comp) members.push_back(agent_json(instance, v));
      j["scc_order"].push_back(std::move(members));
    }
    if (prices != nullptr) {
      j["prices"] = prices_json(instance, *prices);
    }
  } else {
    const auto& no = std::get<NotRationalizable>(verdict);
    j["rationalizable"] = false;
    j["pair"] = ordered_json::array({agent_json(instance, no.pair.first),
                                     agent_json(instance, no.pair.second)});
    j["component"] = no.pair.component;
    j["cover_cycle"] = cycle_json(instance, no.cover_cycle);
  }
  return j.dump(2) + "\n";
}

std::string serialize_coalition(const Instance& instance,
                                const BlockingCoalition& coalition) {
  return coalition_json(instance, coalition).dump(2) + "\n";
}

std::string serialize_core_result(const Instance& instance,
                                  const CoreResult& result) {
  ordered_json j;
  j["in_core"] = result.in_core;
  j["witness"] = result.witness
                     ? coalition_json(instance, *result.witness)
                     : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string serialize_exhaustive_result(const Instance& instance,
                                        const ExhaustiveResult& result) {
  ordered_json j;
  j["rationalizable"] = result.rationalizable;
  j["witness_profile"] = result.witness_profile
                             ? profile_json(instance, *result.witness_profile)
                             : ordered_json(nullptr);
  j["profiles_enumerated"] = result.profiles_enumerated;
  return j.dump(2) + "\n";
}

std::string serialize_ce_report(const Instance& instance,
                                const PriceVector& prices, bool holds) {
  ordered_json j;
  j["rationalizable"] = true;
  j["prices"] = prices_json(instance, prices);
  j["competitive_equilibrium"] = holds;
  return j.dump(2) + "\n";
}

std::string to_dot(const Instance& instance, const Digraph& g,
                   const SccPartition& part, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  for (std::size_t c = 0; c < part.components.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"S" << c + 1 << "\";\n";
    for (int v : part.components[c]) {
      out << "    \"" << instance.agent_label(v) << "\";\n";
    }
    out << "  }\n";
  }
  for (const auto& [from, to] : g.arcs()) {
    out << "  \"" << instance.agent_label(from) << "\" -> \""
        << instance.agent_label(to) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace revealer
