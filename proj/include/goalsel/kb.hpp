#ifndef GOALSEL_KB_HPP
#define GOALSEL_KB_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goalsel/interval.hpp"

namespace goalsel {

enum class Base { belief, action, goal, resource };

std::string_view base_name(Base b);

// Atom with an optional classical negation. Atoms match [a-z_][a-z0-9_]*;
// the textual form prefixes negated atoms with '~'.
struct Literal {
    std::string atom;
    bool positive = true;

    Literal negated() const { return Literal{atom, !positive}; }
    std::string str() const { return positive ? atom : "~" + atom; }

    bool operator==(const Literal&) const = default;
    // Positive literal sorts before its negation.
    auto operator<=>(const Literal& o) const {
        if (auto c = atom <=> o.atom; c != 0) return c;
        return (positive ? 0 : 1) <=> (o.positive ? 0 : 1);
    }

    // Parses "atom" / "~atom"; throws ValidationError on a bad token.
    static Literal parse(std::string_view text);
};

// Probabilistic fact (belief or action base): the literal holds with a
// probability inside the interval.
struct ProbFact {
    Literal lit;
    Interval interval;
    bool operator==(const ProbFact&) const = default;
};

struct GoalDecl {
    std::string name;
    double pref = 0.0; // undeclared preference defaults to 0
    bool pursued = false;
    bool operator==(const GoalDecl&) const = default;
};

struct ResourceDecl {
    std::string name;
    double amount = 0.0;
    bool operator==(const ResourceDecl&) const = default;
};

// Plan rule: head goal literal, body split per base, conditional probability
// interval, and resource needs (unit-blind scalar amounts per resource).
struct PlanRule {
    std::string id;
    Literal head;
    std::vector<Literal> beliefs;
    std::vector<Literal> goals;
    std::vector<Literal> actions;
    Interval interval;
    std::map<std::string, double> needs;
    bool operator==(const PlanRule&) const = default;
};

// Validated, canonically ordered agent specification. Immutable after load.
struct KnowledgeBase {
    std::vector<ProbFact> beliefs;
    std::vector<ProbFact> actions;
    std::vector<GoalDecl> goals;
    std::vector<ResourceDecl> resources;
    std::vector<PlanRule> rules;

    bool operator==(const KnowledgeBase&) const = default;

    // Declared availability; throws ValidationError on an unknown resource.
    double available_res(const std::string& name) const;
    // Declared preference; throws ValidationError on an unknown goal.
    double pref(const std::string& goal) const;

    std::optional<Base> base_of(const std::string& atom) const;
    // Fact matching the exact literal, or nullptr (negative literals are only
    // satisfied by an explicit fact on the negated atom).
    const ProbFact* find_fact(Base base, const Literal& lit) const;
    const GoalDecl* find_goal(const std::string& name) const;
};

// Parses and validates an agent-spec JSON document. Unknown top-level keys
// are rejected; missing sections are treated as empty. Throws ParseError or
// ValidationError naming the violated invariant.
KnowledgeBase load_spec(const std::string& json_text);
KnowledgeBase load_spec_file(const std::string& path);

// Canonical JSON serialization: fixed key order, entries sorted (literal
// order, goal/resource name, rule id), every field explicit. Feeding the
// output back through load_spec yields an equal KnowledgeBase.
std::string serialize(const KnowledgeBase& kb);

// Validates an in-memory knowledge base (used by generators and tests);
// sorts it into canonical order first.
void canonicalize_and_validate(KnowledgeBase& kb);

} // namespace goalsel

#endif
