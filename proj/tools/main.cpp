// Command-line front end: decides whether an observed house allocation can
// be a strong-core outcome and emits verifiable certificates either way.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "revealer/generator.hpp"
#include "revealer/instance_io.hpp"

namespace {

using namespace revealer;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct Guards {
  int max_agents = kOracleAgentGuard;
  std::uint64_t max_profiles = kOracleProfileGuard;
};

// CORE_REVEALER_GUARD="<agents>[,<profiles>]" raises the oracle guards.
// Documented as unsafe: enumeration cost explodes quickly.
Guards guards_from_env() {
  Guards guards;
  const char* env = std::getenv("CORE_REVEALER_GUARD");
  if (env == nullptr) return guards;
  std::istringstream in(env);
  long long agents = 0;
  if (!(in >> agents) || agents < 1) {
    throw std::runtime_error("invalid CORE_REVEALER_GUARD value");
  }
  guards.max_agents = static_cast<int>(agents);
  char comma = 0;
  if (in >> comma) {
    long long profiles = 0;
    if (comma != ',' || !(in >> profiles) || profiles < 1) {
      throw std::runtime_error("invalid CORE_REVEALER_GUARD value");
    }
    guards.max_profiles = static_cast<std::uint64_t>(profiles);
  }
  return guards;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open file for writing: " + path);
  }
  out << text;
}

std::string pair_text(const Instance& instance, const ViolatingPair& pair) {
  const AgentId first = instance.problem.agent_at(pair.first);
  return "agents " + instance.agent_label(pair.first) + " and " +
         instance.agent_label(pair.second) + " (type \"" +
         instance.agent_type_names[first.type] + "\") share component " +
         std::to_string(pair.component) + " but receive \"" +
         instance.house_type_names[instance.problem.allocation[pair.first]] +
         "\" and \"" +
         instance.house_type_names[instance.problem.allocation[pair.second]] +
         "\"";
}

int cmd_validate(const std::string& path, bool json) {
  const Instance instance = parse_instance_schema(read_file(path));
  const auto violations = validate(instance.problem);
  if (json) {
    std::cout << serialize_validation(instance, violations);
  } else if (violations.empty()) {
    std::cout << "valid\n";
  } else {
    for (const auto& v : violations) {
      std::cout << violation_message(instance, v) << "\n";
    }
  }
  return violations.empty() ? kExitOk : kExitNegative;
}

int cmd_check(const std::string& path, bool json) {
  const Instance instance = parse_instance(read_file(path));
  const Verdict verdict = check(instance.problem);
  if (const auto* yes = std::get_if<Rationalizable>(&verdict)) {
    const PriceVector prices =
        construct_prices(instance.problem, yes->scc_order);
    if (json) {
      std::cout << serialize_verdict(instance, verdict, &prices);
    } else {
      std::cout << "rationalizable\n";
    }
    return kExitOk;
  }
  const auto& no = std::get<NotRationalizable>(verdict);
  if (json) {
    std::cout << serialize_verdict(instance, verdict);
  } else {
    std::cout << "not rationalizable: " << pair_text(instance, no.pair)
              << "\n";
  }
  return kExitNegative;
}

int cmd_rationalize(const std::string& path, const std::string& order_name,
                    const std::string& out_path) {
  const Instance instance = parse_instance(read_file(path));
  const Verdict verdict = check(instance.problem);
  if (const auto* no = std::get_if<NotRationalizable>(&verdict)) {
    std::cerr << "not rationalizable: " << pair_text(instance, no->pair)
              << "\n";
    return kExitNegative;
  }
  const auto& yes = std::get<Rationalizable>(verdict);
  SccPartition order = yes.scc_order;
  if (order_name == "reverse") {
    order = reverse_order(order);
  }
  const PreferenceProfile profile =
      construct_profile(instance.problem, order);
  write_output(out_path, serialize_profile(profile, instance));
  return kExitOk;
}

int cmd_witness(const std::string& path, const std::string& profile_path,
                bool json) {
  const Instance instance = parse_instance(read_file(path));
  const PreferenceProfile profile =
      parse_profile(read_file(profile_path), instance);
  const Verdict verdict = check(instance.problem);
  if (is_rationalizable(verdict)) {
    std::cerr << "instance is rationalizable; no violation certificate "
                 "exists\n";
    return kExitNegative;
  }
  const auto& cert = std::get<NotRationalizable>(verdict);
  const BlockingCoalition coalition =
      blocking_witness(instance.problem, profile, cert);
  if (json) {
    std::cout << serialize_coalition(instance, coalition);
  } else {
    std::cout << "blocking coalition:";
    for (std::size_t j = 0; j < coalition.members.size(); ++j) {
      std::cout << " " << instance.agent_label(coalition.members[j]) << "<-"
                << instance.house_type_names[coalition.sub_allocation[j]];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_oracle_core(const std::string& path, const std::string& profile_path,
                    bool json) {
  const Instance instance = parse_instance(read_file(path));
  const PreferenceProfile profile =
      parse_profile(read_file(profile_path), instance);
  const CoreResult result =
      is_core(instance.problem, profile, guards_from_env().max_agents);
  if (json) {
    std::cout << serialize_core_result(instance, result);
  } else if (result.in_core) {
    std::cout << "in core\n";
  } else {
    std::cout << "not in core; blocking coalition:";
    for (std::size_t j = 0; j < result.witness->members.size(); ++j) {
      std::cout << " " << instance.agent_label(result.witness->members[j])
                << "<-"
                << instance
                       .house_type_names[result.witness->sub_allocation[j]];
    }
    std::cout << "\n";
  }
  return result.in_core ? kExitOk : kExitNegative;
}

int cmd_oracle_exhaustive(const std::string& path, bool json) {
  const Instance instance = parse_instance(read_file(path));
  const Guards guards = guards_from_env();
  const ExhaustiveResult result = rationalizable_exhaustive(
      instance.problem, guards.max_profiles, guards.max_agents);
  if (json) {
    std::cout << serialize_exhaustive_result(instance, result);
  } else if (result.rationalizable) {
    std::cout << "rationalizable (witness profile found after "
              << result.profiles_enumerated << " profiles)\n";
  } else {
    std::cout << "not rationalizable (all " << result.profiles_enumerated
              << " profiles fail)\n";
  }
  return result.rationalizable ? kExitOk : kExitNegative;
}

int cmd_ce(const std::string& path, bool json) {
  const Instance instance = parse_instance(read_file(path));
  const Verdict verdict = check(instance.problem);
  if (const auto* no = std::get_if<NotRationalizable>(&verdict)) {
    if (json) {
      std::cout << serialize_verdict(instance, verdict);
    } else {
      std::cout << "not rationalizable: " << pair_text(instance, no->pair)
                << "\n";
    }
    return kExitNegative;
  }
  const auto& yes = std::get<Rationalizable>(verdict);
  const PriceVector prices = construct_prices(instance.problem, yes.scc_order);
  const bool holds = verify_ce(instance.problem, yes.profile, prices);
  if (json) {
    std::cout << serialize_ce_report(instance, prices, holds);
  } else {
    std::cout << (holds ? "competitive equilibrium verified\n"
                        : "competitive equilibrium check FAILED\n");
  }
  return holds ? kExitOk : kExitNegative;
}

int cmd_gen(const GenParams& params, const std::string& out_path) {
  const Instance instance = generate_instance(params);
  write_output(out_path, serialize_instance(instance));
  std::cerr << "seed: " << params.seed << "\n";
  return kExitOk;
}

int cmd_export_dot(const std::string& path, const std::string& which,
                   const std::string& out_path) {
  const Instance instance = parse_instance(read_file(path));
  const Digraph graph = which == "small"
                            ? build_small_graph(instance.problem)
                            : build_big_graph(instance.problem);
  const SccPartition part = scc_partition(graph);
  write_output(out_path, to_dot(instance, graph, part,
                                which == "small" ? "gsmall" : "gbig"));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "core-revealer: strong-core rationalizability of observed house "
      "allocations, with certificates"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string profile_path;
  std::string out_path;
  std::string order_name = "canonical";
  std::string graph_name = "big";
  bool json = false;
  GenParams gen_params;

  auto* validate_cmd = app.add_subcommand(
      "validate", "check the structural invariants of an instance file");
  validate_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();
  validate_cmd->add_flag("--json", json, "machine-readable output");

  auto* check_cmd = app.add_subcommand(
      "check", "decide rationalizability and print a certificate");
  check_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();
  check_cmd->add_flag("--json", json, "machine-readable output");

  auto* rationalize_cmd = app.add_subcommand(
      "rationalize", "construct a rationalizing preference profile");
  rationalize_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();
  rationalize_cmd
      ->add_option("--order", order_name, "component order (default canonical)")
      ->check(CLI::IsMember({"canonical", "reverse"}));
  rationalize_cmd->add_option("-o,--output", out_path, "output file");

  auto* witness_cmd = app.add_subcommand(
      "witness",
      "produce a blocking coalition for a non-rationalizable instance");
  witness_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();
  witness_cmd->add_option("--profile", profile_path, "profile JSON file")
      ->required();
  witness_cmd->add_flag("--json", json, "machine-readable output");

  auto* core_cmd = app.add_subcommand(
      "oracle-core",
      "brute-force strong-core membership under a given profile");
  core_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();
  core_cmd->add_option("--profile", profile_path, "profile JSON file")
      ->required();
  core_cmd->add_flag("--json", json, "machine-readable output");

  auto* exhaustive_cmd = app.add_subcommand(
      "oracle-exhaustive",
      "brute-force rationalizability by enumerating all strict profiles");
  exhaustive_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();
  exhaustive_cmd->add_flag("--json", json, "machine-readable output");

  auto* ce_cmd = app.add_subcommand(
      "ce", "construct supporting prices and verify the equilibrium");
  ce_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();
  ce_cmd->add_flag("--json", json, "machine-readable output");

  auto* gen_cmd =
      app.add_subcommand("gen", "generate a random valid instance");
  gen_cmd->add_option("--seed", gen_params.seed, "PRNG seed")->required();
  gen_cmd->add_option("--agent-types", gen_params.agent_types,
                      "number of agent types")
      ->required();
  gen_cmd->add_option("--house-types", gen_params.house_types,
                      "number of house types")
      ->required();
  gen_cmd->add_option("--max-mult", gen_params.max_multiplicity,
                      "maximum copies per type");
  gen_cmd->add_flag("--bias", gen_params.rationalizable_bias,
                    "steer towards rationalizable instances");
  gen_cmd->add_option("-o,--output", out_path, "output file");

  auto* dot_cmd = app.add_subcommand(
      "export-dot", "emit Graphviz with components as clusters");
  dot_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();
  dot_cmd->add_option("--graph", graph_name, "which graph (default big)")
      ->check(CLI::IsMember({"big", "small"}));
  dot_cmd->add_option("-o,--output", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(instance_path, json);
    if (app.got_subcommand(check_cmd)) return cmd_check(instance_path, json);
    if (app.got_subcommand(rationalize_cmd)) {
      return cmd_rationalize(instance_path, order_name, out_path);
    }
    if (app.got_subcommand(witness_cmd)) {
      return cmd_witness(instance_path, profile_path, json);
    }
    if (app.got_subcommand(core_cmd)) {
      return cmd_oracle_core(instance_path, profile_path, json);
    }
    if (app.got_subcommand(exhaustive_cmd)) {
      return cmd_oracle_exhaustive(instance_path, json);
    }
    if (app.got_subcommand(ce_cmd)) return cmd_ce(instance_path, json);
    if (app.got_subcommand(gen_cmd)) return cmd_gen(gen_params, out_path);
    if (app.got_subcommand(dot_cmd)) {
      return cmd_export_dot(instance_path, graph_name, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
