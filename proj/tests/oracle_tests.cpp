#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "helpers.hpp"
#include "revealer/oracle.hpp"
#include "revealer/rationalize.hpp"

using namespace revealer;
using namespace revealer::testing;

namespace {

Instance thirteen_agents() {
  std::vector<AgentRow> rows;
  for (int i = 0; i < 13; ++i) rows.push_back({"1", i, "h1", "h1"});
  return make_instance({{"1", 13}}, {{"h1", 13}}, rows);
}

PreferenceProfile fig2_profile() {
  return PreferenceProfile{{
      {1, 4, 0, 2, 3},
      {2, 3, 0, 1, 4},
      {0, 1, 2, 3, 4},
  }};
}

PreferenceProfile ascending_profile(const Problem& p) {
  std::vector<std::vector<int>> ranking(
      p.num_agent_types(), std::vector<int>(p.num_house_types()));
  for (auto& order : ranking) std::iota(order.begin(), order.end(), 0);
  return PreferenceProfile{std::move(ranking)};
}

}  // namespace

TEST_CASE("verify_blocking accepts the textbook singleton") {
  const Instance ins = example1();
  const PreferenceProfile profile{{{0, 1}}};  // h1 over h2
  const BlockingCoalition coalition{{agent(ins, "1", 1)}, {0}};
  CHECK(verify_blocking(ins.problem, profile, coalition));
}

TEST_CASE("verify_blocking needs a strict improvement") {
  // The grand coalition keeping the observed allocation never blocks.
  const Instance ins = fig2();
  BlockingCoalition coalition;
  coalition.members.resize(ins.problem.num_agents());
  std::iota(coalition.members.begin(), coalition.members.end(), 0);
  coalition.sub_allocation = ins.problem.allocation;
  CHECK(!verify_blocking(ins.problem, fig2_profile(), coalition));

  // Swapping h4/h5 back hands 1c and 2b exactly what they already hold.
  const BlockingCoalition pair{{agent(ins, "1", 2), agent(ins, "2", 1)},
                               {4, 3}};
  CHECK(!verify_blocking(ins.problem, fig2_profile(), pair));
}

TEST_CASE("verify_blocking enforces the endowment multiset") {
  const Instance ins = example1();
  const PreferenceProfile profile{{{0, 1}}};
  // 1a asks for h1, which the singleton coalition does not own.
  const BlockingCoalition coalition{{agent(ins, "1", 0)}, {0}};
  CHECK(!verify_blocking(ins.problem, profile, coalition));
}

TEST_CASE("verify_blocking rejects malformed coalitions outright") {
  const Instance ins = example1();
  const PreferenceProfile profile{{{0, 1}}};
  CHECK_THROWS_AS(
      verify_blocking(ins.problem, profile, BlockingCoalition{{0, 0}, {0, 1}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      verify_blocking(ins.problem, profile, BlockingCoalition{{7}, {0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      verify_blocking(ins.problem, profile, BlockingCoalition{{0}, {0, 1}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      verify_blocking(ins.problem, profile, BlockingCoalition{{}, {}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      verify_blocking(ins.problem, profile, BlockingCoalition{{0}, {5}}),
      std::invalid_argument);
}

TEST_CASE("is_core on the golden instances") {
  SUBCASE("running example with its constructed profile") {
    const CoreResult result = is_core(fig2().problem, fig2_profile());
    CHECK(result.in_core);
    CHECK(!result.witness.has_value());
  }
  SUBCASE("trading pair fails under both strict profiles") {
    const Instance ins = example1();
    const CoreResult first = is_core(ins.problem, PreferenceProfile{{{0, 1}}});
    CHECK(!first.in_core);
    REQUIRE(first.witness.has_value());
    CHECK(first.witness->members == std::vector<int>{agent(ins, "1", 1)});
    CHECK(first.witness->sub_allocation == std::vector<int>{0});

    const CoreResult second = is_core(ins.problem, PreferenceProfile{{{1, 0}}});
    CHECK(!second.in_core);
    REQUIRE(second.witness.has_value());
    CHECK(second.witness->members == std::vector<int>{agent(ins, "1", 0)});
  }
  SUBCASE("a lone agent at its endowment is in the core") {
    const Instance ins =
        make_instance({{"1", 1}}, {{"h1", 1}}, {{"1", 0, "h1", "h1"}});
    CHECK(is_core(ins.problem, PreferenceProfile{{{0}}}).in_core);
  }
}

TEST_CASE("is_core witnesses satisfy the definition") {
  const auto corpus = random_instances(60, 12000, 3, 2);
  int witnesses = 0;
  for (const auto& ins : corpus) {
    if (ins.problem.num_agents() > 8) continue;
    const PreferenceProfile profile =
        ins.problem.num_agent_types() >= 2 && ins.problem.num_house_types() >= 2
            ? adversarial_profile(ins.problem)
            : ascending_profile(ins.problem);
    const CoreResult result = is_core(ins.problem, profile);
    if (result.witness) {
      CHECK(verify_blocking(ins.problem, profile, *result.witness));
      ++witnesses;
    } else {
      CHECK(result.in_core);
    }
  }
  CHECK(witnesses > 10);
}

TEST_CASE("is_core size guard") {
  const Instance ins = thirteen_agents();
  CHECK_THROWS_AS(is_core(ins.problem, PreferenceProfile{{{0}}}),
                  std::invalid_argument);
  // raising the guard unlocks the instance
  const Instance small =
      make_instance({{"1", 1}}, {{"h1", 1}}, {{"1", 0, "h1", "h1"}});
  CHECK(is_core(small.problem, PreferenceProfile{{{0}}}, 1).in_core);
}

TEST_CASE("exhaustive search on the golden instances") {
  SUBCASE("trading pair: no profile rationalizes") {
    const ExhaustiveResult result =
        rationalizable_exhaustive(example1().problem);
    CHECK(!result.rationalizable);
    CHECK(!result.witness_profile.has_value());
    // one agent type over two houses: exactly 2! strict profiles
    CHECK(result.profiles_enumerated == 2);
  }
  SUBCASE("running example: some profile rationalizes") {
    // (5!)^3 profiles: past the default guard, so raise it explicitly.
    const ExhaustiveResult result =
        rationalizable_exhaustive(fig2().problem, 2'000'000);
    CHECK(result.rationalizable);
    REQUIRE(result.witness_profile.has_value());
    CHECK(is_core(fig2().problem, *result.witness_profile).in_core);
  }
  SUBCASE("cross-type swap is rationalized by reciprocal tastes") {
    const Instance ins = make_instance({{"1", 1}, {"2", 1}},
                                       {{"h1", 1}, {"h2", 1}},
                                       {
                                           {"1", 0, "h1", "h2"},
                                           {"2", 0, "h2", "h1"},
                                       });
    const ExhaustiveResult result = rationalizable_exhaustive(ins.problem);
    CHECK(result.rationalizable);
    REQUIRE(result.witness_profile.has_value());
    CHECK(result.witness_profile->rank(0, 1) == 1);
    CHECK(result.witness_profile->rank(1, 0) == 1);
  }
}

TEST_CASE("exhaustive search guards") {
  CHECK_THROWS_AS(rationalizable_exhaustive(thirteen_agents().problem),
                  std::invalid_argument);
  // 10 house types: 10! profiles overflow the default guard
  std::vector<AgentRow> rows;
  std::vector<std::pair<std::string, int>> houses;
  for (int i = 0; i < 10; ++i) {
    houses.push_back({"h" + std::to_string(i + 1), 1});
    rows.push_back({"1", i, "h" + std::to_string(i + 1),
                    "h" + std::to_string(i + 1)});
  }
  const Instance ins = make_instance({{"1", 10}}, houses, rows);
  CHECK_THROWS_AS(rationalizable_exhaustive(ins.problem),
                  std::invalid_argument);
}

TEST_CASE("exhaustive verdict equals the graph condition") {
  const auto corpus = random_instances(40, 13000, 3, 2);
  for (const auto& ins : corpus) {
    if (ins.problem.num_agents() > 6) continue;
    CHECK(rationalizable_exhaustive(ins.problem).rationalizable ==
          is_rationalizable(check(ins.problem)));
  }
}

TEST_CASE("improving a blocking coalition keeps it blocking") {
  // 1a trades down to h3, 2a trades down to h2, 2b keeps h1.
  const Instance ins = make_instance({{"1", 1}, {"2", 2}},
                                     {{"h1", 1}, {"h2", 1}, {"h3", 1}},
                                     {
                                         {"1", 0, "h2", "h3"},
                                         {"2", 0, "h3", "h2"},
                                         {"2", 1, "h1", "h1"},
                                     });
  const PreferenceProfile profile{{{0, 1, 2}, {2, 1, 0}}};
  const Problem& p = ins.problem;
  const int a1a = agent(ins, "1", 0), a2a = agent(ins, "2", 0),
            a2b = agent(ins, "2", 1);
  const int h1 = 0, h2 = 1, h3 = 2;

  const BlockingCoalition base{{a1a, a2a, a2b}, {h2, h3, h1}};
  REQUIRE(verify_blocking(p, profile, base));

  // Upgrade 1a from h2 to h1 by swapping with 2b: the multiset is
  // unchanged, 2b still weakly improves (h2 beats its h1 under type 2),
  // and 1a gains strictly more than before.
  const BlockingCoalition improved{{a1a, a2a, a2b}, {h1, h3, h2}};
  CHECK(verify_blocking(p, profile, improved));

  // Random witnesses obey the same closure: any multiset-preserving swap
  // that keeps all members weakly ahead and someone strictly ahead still
  // blocks.
  const auto corpus = random_instances(60, 14000, 3, 2);
  for (const auto& ins2 : corpus) {
    const Problem& p2 = ins2.problem;
    if (p2.num_agents() > 8 || p2.num_agent_types() < 2 ||
        p2.num_house_types() < 2) {
      continue;
    }
    const PreferenceProfile adversarial = adversarial_profile(p2);
    const CoreResult result = is_core(p2, adversarial);
    if (!result.witness) continue;
    const BlockingCoalition& witness = *result.witness;
    for (std::size_t i = 0; i < witness.members.size(); ++i) {
      for (std::size_t j = i + 1; j < witness.members.size(); ++j) {
        BlockingCoalition altered = witness;
        std::swap(altered.sub_allocation[i], altered.sub_allocation[j]);
        bool all_weak = true;
        bool strict = false;
        for (std::size_t k = 0; k < altered.members.size(); ++k) {
          const int member = altered.members[k];
          const auto cmp =
              adversarial.compare(p2.type_of(member),
                                  altered.sub_allocation[k],
                                  p2.allocation[member]);
          if (cmp == Comparison::StrictlyDisprefers) all_weak = false;
          if (cmp == Comparison::StrictlyPrefers) strict = true;
        }
        if (all_weak && strict) {
          CHECK(verify_blocking(p2, adversarial, altered));
        }
      }
    }
  }
}
