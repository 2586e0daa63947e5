#ifndef GOALSEL_ARGUMENTS_HPP
#define GOALSEL_ARGUMENTS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "goalsel/interval.hpp"
#include "goalsel/kb.hpp"

namespace goalsel {

// Elementary argument: a probabilistic fact standing on its own.
struct ArgumentLeaf {
    Literal claim;
    Interval interval;
    bool operator==(const ArgumentLeaf&) const = default;
};

// Instrumental argument: a plan rule applied to elementary arguments and
// sub-arguments, one per body literal. Shared immutable nodes; the direct
// sub-arguments are the canonical objects for their own claims.
struct Argument {
    std::string id;           // assigned after canonical ordering ("A1", ...)
    std::size_t index = 0;    // position in ArgumentSet::args
    std::string rule_id;
    Interval rule_interval;
    Literal claim;            // rule head
    Interval claim_interval;  // modus_ponens(rule, conjoin(children))
    std::vector<ArgumentLeaf> belief_leaves; // this node's leaves, body order
    std::vector<ArgumentLeaf> action_leaves;
    std::vector<std::shared_ptr<const Argument>> subs; // direct, body-goal order
    std::map<std::string, double> needs;               // this rule only

    // Canonical structural key: rule id chain plus leaf literals. Two
    // arguments are the same argument exactly when their keys match.
    std::string structure_key;

    // Aggregates over the whole tree, filled during construction.
    std::vector<std::size_t> sub_indices;          // transitive, sorted, unique
    std::map<std::string, double> needs_total;     // summed over every rule node
    std::vector<Literal> support_literals;         // leaf claims + root heads, sorted unique
    std::vector<std::string> support_elements;     // structural support set, sorted unique
    std::vector<Literal> body_beliefs;             // rule bodies over the tree, per base
    std::vector<Literal> body_actions;
    std::vector<Literal> body_goals;
};

struct BuildOptions {
    std::size_t max_arguments = 10000;
};

struct ArgumentSet {
    // Canonical order: lexicographic by structure key.
    std::vector<std::shared_ptr<const Argument>> args;
    // Pursued goals that ended up with no argument, and similar findings.
    std::vector<std::string> diagnostics;

    const Argument* by_id(const std::string& id) const;
    const Argument* by_claim(const Literal& claim) const; // first match or nullptr
    std::size_t size() const { return args.size(); }
};

// Enumerates every constructible argument: for each rule whose body beliefs
// and actions have matching facts, one argument per combination of
// sub-arguments for its body goals. A body literal nobody can satisfy drops
// the candidate, and so does a combined support asserting both a literal and
// its negation: such a plan is not executable. Throws LimitError once the
// candidates exceed max_arguments.
ArgumentSet build_all(const KnowledgeBase& kb, const BuildOptions& opt = {});

// Claim interval of the root.
Interval claim_interval(const Argument& a);

// Recomputes the root interval from the leaves; equals the stored value.
Interval recompute_claim_interval(const Argument& a);

// Aggregated resource needs over every rule in the tree.
const std::map<std::string, double>& list_res_arg(const Argument& a);

// Amount of one resource the argument consumes (0 when absent).
double need_res(const Argument& a, const std::string& resource);

} // namespace goalsel

#endif
