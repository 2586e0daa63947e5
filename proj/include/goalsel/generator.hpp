#ifndef GOALSEL_GENERATOR_HPP
#define GOALSEL_GENERATOR_HPP

#include <cstdint>
#include <random>

#include "goalsel/kb.hpp"

namespace goalsel {

// Policy for random agent specs. Interval bounds and preferences live on a
// 0.05 grid; every rule body carries at least one belief or action premise,
// the way executable plans do. Amounts are multiples of 10 so that resource
// conflicts appear at predictable rates.
struct GeneratorParams {
    int max_belief_atoms = 3;
    int max_action_atoms = 2;
    int max_goal_atoms = 4;
    int max_resources = 2;
    int max_rules = 8;
    double p_negative_head = 0.15;
    double p_complementary_fact = 0.35;
    double p_negative_body = 0.2;
    double p_rule_needs = 0.4;
    double p_pursued = 0.7;
};

// Deterministic for a given engine state; always returns a knowledge base
// that passes validation.
KnowledgeBase random_kb(std::mt19937_64& rng, const GeneratorParams& params = {});

} // namespace goalsel

#endif
