#ifndef GOALSEL_SEMANTICS_HPP
#define GOALSEL_SEMANTICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "goalsel/arguments.hpp"
#include "goalsel/attacks.hpp"
#include "goalsel/kb.hpp"
#include "goalsel/strength.hpp"

namespace goalsel {

// Argumentation framework: every built argument plus a directed attack
// relation over argument indices.
struct Framework {
    std::size_t argument_count = 0;
    std::vector<Attack> attacks; // sorted by (attacker, target)
};

Framework make_framework(const ArgumentSet& args, const KnowledgeBase& kb);

// Keeps an attack only when it succeeds: the attacker must beat the target
// in the strength order or in the utility order. When both or neither
// direction of a mutual attack succeeds, both edges survive.
Framework successful_filter(const Framework& af, const ArgumentSet& args,
                            const KnowledgeBase& kb,
                            TieBreak tb = TieBreak::precision_first);

// Conflict-free extension: member indices sorted ascending; top_goals are the
// distinct pursued goal atoms claimed (positively) by members, and pref_total
// sums their preferences.
struct Extension {
    std::vector<std::size_t> members;
    std::vector<std::string> top_goals;
    double pref_total = 0.0;

    bool operator==(const Extension&) const = default;
};

struct EnumLimits {
    std::size_t max_enum_args = 25;      // refuse exponential enumeration beyond this
    std::size_t max_extensions = 1000000;
};

// Every conflict-free set (any directed edge counts as a conflict), the empty
// set included, ordered by size then member sequence. Throws LimitError when
// the framework exceeds the caps.
std::vector<Extension> conflict_free(const Framework& af, const ArgumentSet& args,
                                     const KnowledgeBase& kb, const EnumLimits& limits = {});

// Extensions achieving the maximum number of distinct pursued top goals,
// reduced to the inclusion-maximal member sets among them.
std::vector<Extension> max_goal(const std::vector<Extension>& family);

// Extensions maximizing the preference total over distinct pursued top goals.
std::vector<Extension> max_util(const std::vector<Extension>& family);

// Claims of the member arguments and of all their sub-arguments.
std::vector<Literal> comp_goals(const Extension& e, const ArgumentSet& args);

struct SelectOptions {
    BuildOptions build;
    EnumLimits limits;
    TieBreak tiebreak = TieBreak::precision_first;
};

// Full pipeline output: arguments, both attack relations, the extension
// ladder, and the compatible goal sets of the winners.
struct SelectionReport {
    ArgumentSet args;
    std::vector<Attack> attacks_pre;
    std::vector<Attack> attacks_post;
    std::vector<Extension> conflict_free_family;
    std::vector<Extension> goal_winners;
    std::vector<Extension> utility_winners;
    std::vector<std::vector<Literal>> compatible_goals; // aligned with utility_winners
    std::vector<std::string> diagnostics;
};

SelectionReport select(const KnowledgeBase& kb, const SelectOptions& opt = {});

} // namespace goalsel

#endif
