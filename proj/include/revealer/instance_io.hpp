#ifndef REVEALER_INSTANCE_IO_HPP
#define REVEALER_INSTANCE_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "revealer/equilibrium.hpp"
#include "revealer/graph.hpp"
#include "revealer/model.hpp"
#include "revealer/oracle.hpp"
#include "revealer/rationalize.hpp"

namespace revealer {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A problem together with the external names from its instance file.
// Names map to dense ids at parse time; the core works on ids only.
struct Instance {
  Problem problem;
  std::vector<std::string> agent_type_names;
  std::vector<std::string> house_type_names;

  // "1a"-style label: type name plus a letter for the index.
  std::string agent_label(int ordinal) const;

  int agent_type_by_name(const std::string& name) const;  // -1 if unknown
  int house_by_name(const std::string& name) const;       // -1 if unknown

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Schema check only; the returned problem may still violate count
// invariants. Throws ParseError with a field diagnostic.
Instance parse_instance_schema(const std::string& text);

// Schema check plus structural validation.
Instance parse_instance(const std::string& text);

// Canonical form: fixed key order, agents in canonical order, two-space
// indent, trailing newline. parse followed by serialize is the identity
// on canonical files.
std::string serialize_instance(const Instance& instance);

PreferenceProfile parse_profile(const std::string& text,
                                const Instance& instance);
std::string serialize_profile(const PreferenceProfile& profile,
                              const Instance& instance);

// Violation message enriched with external names where they are known.
std::string violation_message(const Instance& instance, const Violation& v);

// JSON renderings of results, used verbatim by the CLI.
std::string serialize_validation(const Instance& instance,
                                 const std::vector<Violation>& violations);
std::string serialize_verdict(const Instance& instance, const Verdict& verdict,
                              const PriceVector* prices = nullptr);
std::string serialize_coalition(const Instance& instance,
                                const BlockingCoalition& coalition);
std::string serialize_core_result(const Instance& instance,
                                  const CoreResult& result);
std::string serialize_exhaustive_result(const Instance& instance,
                                        const ExhaustiveResult& result);
std::string serialize_ce_report(const Instance& instance,
                                const PriceVector& prices, bool holds);

// Graphviz rendering with one cluster per component.
std::string to_dot(const Instance& instance, const Digraph& g,
                   const SccPartition& part, const std::string& name);

}  // namespace revealer

#endif  // REVEALER_INSTANCE_IO_HPP
