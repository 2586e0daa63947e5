#include <set>
#include <string>

#include "doctest.h"
#include "goalsel/errors.hpp"
#include "goalsel/kb.hpp"
#include "goalsel/semantics.hpp"
#include "support/oracles.hpp"

using goalsel::ArgumentSet;
using goalsel::EnumLimits;
using goalsel::Extension;
using goalsel::Framework;
using goalsel::KnowledgeBase;
using goalsel::SelectionReport;
using goalsel::SelectOptions;
using oracle::IndexPair;

namespace {

struct Built {
    KnowledgeBase kb;
    ArgumentSet args;
};

Built build_fixture(const std::string& name) {
    Built b;
    b.kb = goalsel::load_spec_file(oracle::fixture_path(name));
    b.args = goalsel::build_all(b.kb);
    return b;
}

std::set<std::vector<std::size_t>> member_sets(const std::vector<Extension>& family) {
    std::set<std::vector<std::size_t>> out;
    for (const Extension& e : family) out.insert(e.members);
    return out;
}

const std::string k3_text = R"({
  "beliefs": [
    {"lit": "p", "l": 0.8, "u": 1.0}, {"lit": "~p", "l": 0.8, "u": 1.0},
    {"lit": "q", "l": 0.8, "u": 1.0}, {"lit": "~q", "l": 0.8, "u": 1.0},
    {"lit": "r", "l": 0.8, "u": 1.0}, {"lit": "~r", "l": 0.8, "u": 1.0}
  ],
  "goals": [
    {"name": "g1", "pref": 0.5, "pursued": true},
    {"name": "g2", "pref": 0.5, "pursued": true},
    {"name": "g3", "pref": 0.5, "pursued": true}
  ],
  "rules": [
    {"id": "r1", "head": "g1", "beliefs": ["p", "q"], "l": 0.9, "u": 1.0},
    {"id": "r2", "head": "g2", "beliefs": ["~p", "r"], "l": 0.9, "u": 1.0},
    {"id": "r3", "head": "g3", "beliefs": ["~q", "~r"], "l": 0.9, "u": 1.0}
  ]})";

} // namespace

TEST_CASE("successful filter keeps exactly the winning directions") {
    Built b = build_fixture("cleaner.json");
    std::size_t fix = oracle::by_claim(b.args, "be_fixed")->index;
    std::size_t halt = oracle::by_claim(b.args, "~be_oper")->index;
    std::size_t wshop = oracle::by_claim(b.args, "in_wshop")->index;
    std::size_t clean = oracle::by_claim(b.args, "clean_1_3")->index;
    std::size_t oper = oracle::by_claim(b.args, "be_oper")->index;

    Framework af = goalsel::make_framework(b.args, b.kb);
    CHECK(af.attacks.size() == 12);
    CHECK(af.argument_count == 5);

    Framework filtered = goalsel::successful_filter(af, b.args, b.kb);
    std::set<IndexPair> got = oracle::all_pairs(filtered.attacks);
    std::set<IndexPair> expected = {{clean, fix}, {oper, fix},  {halt, clean},
                                    {halt, oper}, {wshop, clean}, {oper, wshop}};
    CHECK(got == expected);

    // Trying the strength tie-break clauses in the other order changes nothing.
    Framework alt =
        goalsel::successful_filter(af, b.args, b.kb, goalsel::TieBreak::location_first);
    CHECK(oracle::all_pairs(alt.attacks) == got);
}

TEST_CASE("conflict-free extensions of the cleaning-robot framework") {
    Built b = build_fixture("cleaner.json");
    Framework filtered =
        goalsel::successful_filter(goalsel::make_framework(b.args, b.kb), b.args, b.kb);
    std::vector<Extension> family = goalsel::conflict_free(filtered, b.args, b.kb);
    CHECK(family.size() == 11);

    std::set<std::set<std::string>> expected = {
        {},
        {"be_fixed"},
        {"~be_oper"},
        {"in_wshop"},
        {"clean_1_3"},
        {"be_oper"},
        {"be_fixed", "~be_oper"},
        {"be_fixed", "in_wshop"},
        {"~be_oper", "in_wshop"},
        {"be_fixed", "~be_oper", "in_wshop"},
        {"clean_1_3", "be_oper"}};
    CHECK(oracle::claim_families(family, b.args) == expected);

    // Ordered by size, then by member indices.
    for (std::size_t i = 0; i + 1 < family.size(); ++i) {
        bool ordered = family[i].members.size() < family[i + 1].members.size() ||
                       (family[i].members.size() == family[i + 1].members.size() &&
                        family[i].members < family[i + 1].members);
        CHECK(ordered);
    }

    // Brute-force power-set scan finds the same family.
    CHECK(member_sets(family) == oracle::conflict_free_bruteforce(filtered));
}

TEST_CASE("goal-maximal and utility-maximal extensions of the cleaning-robot framework") {
    KnowledgeBase kb = goalsel::load_spec_file(oracle::fixture_path("cleaner.json"));
    SelectionReport report = goalsel::select(kb);

    CHECK(oracle::claim_families(report.goal_winners, report.args) ==
          std::set<std::set<std::string>>{{"be_fixed", "~be_oper", "in_wshop"},
                                          {"clean_1_3", "be_oper"}});
    for (const Extension& e : report.goal_winners) CHECK(e.top_goals.size() == 1);

    REQUIRE(report.utility_winners.size() == 1);
    const Extension& winner = report.utility_winners[0];
    CHECK(winner.top_goals == std::vector<std::string>{"clean_1_3"});
    CHECK(winner.pref_total == doctest::Approx(0.9).epsilon(1e-9));
    CHECK(oracle::claim_families(report.utility_winners, report.args) ==
          std::set<std::set<std::string>>{{"clean_1_3", "be_oper"}});

    REQUIRE(report.compatible_goals.size() == 1);
    std::vector<goalsel::Literal> compatible = {goalsel::Literal{"be_oper", true},
                                                goalsel::Literal{"clean_1_3", true}};
    CHECK(report.compatible_goals[0] == compatible);

    CHECK(report.attacks_pre.size() == 12);
    CHECK(report.attacks_post.size() == 6);
    CHECK(report.diagnostics.empty());
}

TEST_CASE("select is deterministic") {
    KnowledgeBase kb = goalsel::load_spec_file(oracle::fixture_path("cleaner.json"));
    SelectionReport r1 = goalsel::select(kb);
    SelectionReport r2 = goalsel::select(kb);
    REQUIRE(r1.args.size() == r2.args.size());
    for (std::size_t i = 0; i < r1.args.size(); ++i) {
        CHECK(r1.args.args[i]->id == r2.args.args[i]->id);
        CHECK(r1.args.args[i]->structure_key == r2.args.args[i]->structure_key);
    }
    CHECK(r1.attacks_pre == r2.attacks_pre);
    CHECK(r1.attacks_post == r2.attacks_post);
    CHECK(r1.conflict_free_family == r2.conflict_free_family);
    CHECK(r1.goal_winners == r2.goal_winners);
    CHECK(r1.utility_winners == r2.utility_winners);
    CHECK(r1.compatible_goals == r2.compatible_goals);
}

TEST_CASE("an empty spec selects the empty extension") {
    KnowledgeBase kb = goalsel::load_spec_file(oracle::fixture_path("empty.json"));
    SelectionReport report = goalsel::select(kb);
    CHECK(report.args.size() == 0);
    REQUIRE(report.conflict_free_family.size() == 1);
    CHECK(report.conflict_free_family[0].members.empty());
    REQUIRE(report.utility_winners.size() == 1);
    CHECK(report.utility_winners[0].pref_total == 0.0);
    REQUIRE(report.compatible_goals.size() == 1);
    CHECK(report.compatible_goals[0].empty());
}

TEST_CASE("without attacks every subset is conflict-free") {
    std::string text = R"({
      "beliefs": [
        {"lit": "b1", "l": 1.0, "u": 1.0}, {"lit": "b2", "l": 1.0, "u": 1.0},
        {"lit": "b3", "l": 1.0, "u": 1.0}, {"lit": "b4", "l": 1.0, "u": 1.0}
      ],
      "goals": [
        {"name": "t1", "pursued": true}, {"name": "t2", "pursued": true},
        {"name": "t3", "pursued": true}, {"name": "t4", "pursued": true}
      ],
      "rules": [
        {"id": "r1", "head": "t1", "beliefs": ["b1"], "l": 1.0, "u": 1.0},
        {"id": "r2", "head": "t2", "beliefs": ["b2"], "l": 1.0, "u": 1.0},
        {"id": "r3", "head": "t3", "beliefs": ["b3"], "l": 1.0, "u": 1.0},
        {"id": "r4", "head": "t4", "beliefs": ["b4"], "l": 1.0, "u": 1.0}
      ]})";
    KnowledgeBase kb = goalsel::load_spec(text);
    SelectionReport report = goalsel::select(kb);
    CHECK(report.attacks_pre.empty());
    CHECK(report.conflict_free_family.size() == 16);
    // All four goals fit together; only the full set is goal-maximal.
    REQUIRE(report.goal_winners.size() == 1);
    CHECK(report.goal_winners[0].members.size() == 4);
    CHECK(report.goal_winners[0].top_goals.size() == 4);
}

TEST_CASE("a symmetric three-way standoff keeps all attacks and singleton extensions") {
    KnowledgeBase kb = goalsel::load_spec(k3_text);
    SelectionReport report = goalsel::select(kb);
    REQUIRE(report.args.size() == 3);

    // Equal strength and utility everywhere: no direction succeeds alone.
    CHECK(report.attacks_pre.size() == 6);
    CHECK(report.attacks_post == report.attacks_pre);

    CHECK(oracle::claim_families(report.conflict_free_family, report.args) ==
          std::set<std::set<std::string>>{{}, {"g1"}, {"g2"}, {"g3"}});
    CHECK(report.goal_winners.size() == 3);
    CHECK(report.utility_winners.size() == 3);
}

TEST_CASE("enumeration refuses oversized frameworks") {
    Built b = build_fixture("cleaner.json");
    Framework af = goalsel::make_framework(b.args, b.kb);
    EnumLimits limits;
    limits.max_enum_args = 3;
    CHECK_THROWS_AS(goalsel::conflict_free(af, b.args, b.kb, limits), goalsel::LimitError);
}

TEST_CASE("enumeration stops at the extension cap") {
    std::string text = R"({
      "beliefs": [
        {"lit": "b1", "l": 1.0, "u": 1.0}, {"lit": "b2", "l": 1.0, "u": 1.0},
        {"lit": "b3", "l": 1.0, "u": 1.0}, {"lit": "b4", "l": 1.0, "u": 1.0}
      ],
      "goals": [
        {"name": "t1", "pursued": true}, {"name": "t2", "pursued": true},
        {"name": "t3", "pursued": true}, {"name": "t4", "pursued": true}
      ],
      "rules": [
        {"id": "r1", "head": "t1", "beliefs": ["b1"], "l": 1.0, "u": 1.0},
        {"id": "r2", "head": "t2", "beliefs": ["b2"], "l": 1.0, "u": 1.0},
        {"id": "r3", "head": "t3", "beliefs": ["b3"], "l": 1.0, "u": 1.0},
        {"id": "r4", "head": "t4", "beliefs": ["b4"], "l": 1.0, "u": 1.0}
      ]})";
    KnowledgeBase kb = goalsel::load_spec(text);
    SelectOptions opt;
    opt.limits.max_extensions = 10;
    CHECK_THROWS_AS(goalsel::select(kb, opt), goalsel::LimitError);
    try {
        goalsel::select(kb, opt);
    } catch (const goalsel::LimitError& e) {
        CHECK(std::string(e.what()).find("--max-extensions") != std::string::npos);
    }
}

TEST_CASE("maximal-extension selectors work on handmade families") {
    auto ext = [](std::vector<std::size_t> members, std::vector<std::string> tops,
                  double pref) {
        Extension e;
        e.members = std::move(members);
        e.top_goals = std::move(tops);
        e.pref_total = pref;
        return e;
    };
    std::vector<Extension> family = {
        ext({}, {}, 0.0),
        ext({0}, {"a"}, 0.3),
        ext({1}, {"b"}, 0.5),
        ext({0, 1}, {"a", "b"}, 0.8),
        ext({2}, {"c"}, 0.9),
        ext({0, 1, 2}, {"a", "b"}, 0.8),
    };
    std::vector<Extension> goals = goalsel::max_goal(family);
    // Two top goals is the maximum; {0,1} is included in {0,1,2}.
    REQUIRE(goals.size() == 1);
    CHECK(goals[0].members == std::vector<std::size_t>{0, 1, 2});

    std::vector<Extension> utils = goalsel::max_util(family);
    REQUIRE(utils.size() == 1);
    CHECK(utils[0].members == std::vector<std::size_t>{2});

    // Ties within tolerance are kept together.
    std::vector<Extension> close = {ext({0}, {"a"}, 0.5), ext({1}, {"b"}, 0.5 + 1e-10)};
    CHECK(goalsel::max_util(close).size() == 2);

    CHECK(goalsel::max_goal({}).empty());
    CHECK(goalsel::max_util({}).empty());
}

TEST_CASE("conflict-free enumeration matches the power-set oracle") {
    oracle::for_each_random_kb(40, 777, [](const KnowledgeBase& kb, std::size_t) {
        ArgumentSet args = goalsel::build_all(kb);
        if (args.size() > 12) return;
        Framework af = goalsel::make_framework(args, kb);
        CHECK(member_sets(goalsel::conflict_free(af, args, kb)) ==
              oracle::conflict_free_bruteforce(af));

        Framework filtered = goalsel::successful_filter(af, args, kb);
        CHECK(member_sets(goalsel::conflict_free(filtered, args, kb)) ==
              oracle::conflict_free_bruteforce(filtered));

        // The filter only removes edges, and never both directions of a
        // mutual attack.
        std::set<IndexPair> pre = oracle::all_pairs(af.attacks);
        std::set<IndexPair> post = oracle::all_pairs(filtered.attacks);
        for (const auto& p : post) CHECK(pre.count(p) == 1);
        for (const auto& [a, b] : pre) {
            CHECK((post.count({a, b}) + post.count({b, a})) >= 1);
        }
    });
}
