#ifndef GOALSEL_ATTACKS_HPP
#define GOALSEL_ATTACKS_HPP

#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

#include "goalsel/arguments.hpp"
#include "goalsel/kb.hpp"

namespace goalsel {

enum class AttackType { terminal, resource, superfluous };

std::string_view attack_type_name(AttackType t);

// Directed attack between arguments (by index into the ArgumentSet). The
// detectors each emit a symmetric, irreflexive relation; all_attacks merges
// the type tags per directed pair.
struct Attack {
    std::size_t attacker = 0;
    std::size_t target = 0;
    std::set<AttackType> types;

    bool operator==(const Attack&) const = default;
};

// Support rebuttal: different claims and complementary support literals.
// Both arguments' sub-arguments inherit the conflict: every directed pair
// across {A} u SUB(A) and {B} u SUB(B) except self-pairs.
std::vector<Attack> terminal_attacks(const ArgumentSet& args);

// Resource overlap: different claims and some shared resource whose combined
// need strictly exceeds the declared availability. Not inherited.
std::vector<Attack> resource_attacks(const ArgumentSet& args, const KnowledgeBase& kb);

// Superfluity: same claim reached through different support. Inherited like
// support rebuttals, skipping pairs of structurally identical arguments.
std::vector<Attack> superfluous_attacks(const ArgumentSet& args);

// Union of the three relations with type tags merged per directed pair,
// sorted by (attacker, target).
std::vector<Attack> all_attacks(const ArgumentSet& args, const KnowledgeBase& kb);

} // namespace goalsel

#endif
