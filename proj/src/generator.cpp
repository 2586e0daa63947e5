#include "goalsel/generator.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace goalsel {

namespace {

struct Dice {
    std::mt19937_64& rng;

    int upto(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }
    double chance() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
    double grid(double lo, double hi) { // 0.05 grid point in [lo, hi]
        int steps = static_cast<int>((hi - lo) / 0.05 + 0.5);
        return lo + 0.05 * upto(0, steps);
    }
};

} // namespace

KnowledgeBase random_kb(std::mt19937_64& rng, const GeneratorParams& params) {
    Dice dice{rng};
    KnowledgeBase kb;

    auto add_facts = [&](std::vector<ProbFact>& out, const std::string& prefix, int max_atoms,
                         int min_atoms) {
        int n = dice.upto(min_atoms, std::max(min_atoms, max_atoms));
        for (int i = 0; i < n; ++i) {
            std::string atom = prefix + std::to_string(i + 1);
            bool positive_fact = dice.chance() >= 0.15;
            double l = dice.grid(0.0, 1.0);
            ProbFact f{Literal{atom, positive_fact}, Interval{l, dice.grid(l, 1.0)}};
            out.push_back(f);
            if (dice.chance() < params.p_complementary_fact) {
                double nl = dice.grid(0.0, 1.0);
                out.push_back(ProbFact{f.lit.negated(), Interval{nl, dice.grid(nl, 1.0)}});
            }
        }
    };
    add_facts(kb.beliefs, "b", params.max_belief_atoms, 1);
    add_facts(kb.actions, "a", params.max_action_atoms, 0);

    int n_goals = dice.upto(1, params.max_goal_atoms);
    for (int i = 0; i < n_goals; ++i) {
        GoalDecl g;
        g.name = "g" + std::to_string(i + 1);
        if (dice.chance() < 0.7) g.pref = dice.grid(0.0, 1.0);
        kb.goals.push_back(std::move(g));
    }

    int n_res = dice.upto(0, params.max_resources);
    for (int i = 0; i < n_res; ++i) {
        kb.resources.push_back(
            ResourceDecl{"res" + std::to_string(i + 1), 10.0 * dice.upto(0, 10)});
    }

    auto pick_fact_literal = [&](const std::vector<ProbFact>& facts) {
        // Atom from the declared set; the sign may lack a fact, leaving the
        // body literal unsatisfiable on purpose.
        const ProbFact& f = facts[static_cast<std::size_t>(dice.upto(0, int(facts.size()) - 1))];
        Literal lit = f.lit;
        if (dice.chance() < params.p_negative_body) lit = lit.negated();
        return lit;
    };

    int n_rules = dice.upto(1, params.max_rules);
    for (int i = 0; i < n_rules; ++i) {
        PlanRule r;
        r.id = "r" + std::to_string(i + 1);
        int head_idx = dice.upto(1, n_goals);
        r.head = Literal{"g" + std::to_string(head_idx), dice.chance() >= params.p_negative_head};

        std::set<Literal> beliefs;
        int n_body_beliefs = dice.upto(1, 2);
        for (int k = 0; k < n_body_beliefs; ++k) beliefs.insert(pick_fact_literal(kb.beliefs));
        r.beliefs.assign(beliefs.begin(), beliefs.end());

        if (!kb.actions.empty() && dice.chance() < 0.5) {
            r.actions.push_back(pick_fact_literal(kb.actions));
        }

        // Body goals point at strictly lower goal indices, keeping the goal
        // dependency graph acyclic by construction.
        if (head_idx > 1) {
            std::set<Literal> goals;
            int n_body_goals = dice.upto(0, 2);
            for (int k = 0; k < n_body_goals; ++k) {
                Literal g{"g" + std::to_string(dice.upto(1, head_idx - 1)),
                          dice.chance() >= params.p_negative_body};
                goals.insert(g);
            }
            r.goals.assign(goals.begin(), goals.end());
        }

        double l = dice.grid(0.0, 1.0);
        r.interval = Interval{l, dice.grid(l, 1.0)};

        if (!kb.resources.empty() && dice.chance() < params.p_rule_needs) {
            const ResourceDecl& res =
                kb.resources[static_cast<std::size_t>(dice.upto(0, int(kb.resources.size()) - 1))];
            r.needs[res.name] = 10.0 * dice.upto(1, 6);
        }
        kb.rules.push_back(std::move(r));
    }

    for (GoalDecl& g : kb.goals) {
        bool has_rule = std::any_of(kb.rules.begin(), kb.rules.end(), [&](const PlanRule& r) {
            return r.head == Literal{g.name, true};
        });
        if (has_rule && dice.chance() < params.p_pursued) g.pursued = true;
    }

    canonicalize_and_validate(kb);
    return kb;
}

} // namespace goalsel
