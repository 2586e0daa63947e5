#include "goalsel/arguments.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "goalsel/errors.hpp"

namespace goalsel {

namespace {

std::string fmt_bound(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string leaf_element_key(const ArgumentLeaf& leaf) {
    return "f|" + leaf.claim.str() + "|" + fmt_bound(leaf.interval.l) + "|" +
           fmt_bound(leaf.interval.u);
}

std::string root_element_key(const Argument& a) {
    return "r|" + a.rule_id + "|" + a.claim.str() + "|" + fmt_bound(a.claim_interval.l) + "|" +
           fmt_bound(a.claim_interval.u);
}

template <typename T>
void merge_unique(std::vector<T>& into, const std::vector<T>& from) {
    into.insert(into.end(), from.begin(), from.end());
}

template <typename T>
void finish_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Distinct nodes of the tree: the argument itself plus every sub-argument,
// shared sub-arguments counted once.
void collect_nodes(const Argument& a, std::set<const Argument*>& out) {
    if (!out.insert(&a).second) return;
    for (const auto& s : a.subs) collect_nodes(*s, out);
}

std::vector<std::string> goal_atoms_dependency_first(const KnowledgeBase& kb) {
    std::map<std::string, std::set<std::string>> edges; // head atom -> body goal atoms
    for (const PlanRule& r : kb.rules) {
        edges[r.head.atom];
        for (const Literal& g : r.goals) edges[r.head.atom].insert(g.atom);
    }
    std::vector<std::string> order;
    std::set<std::string> done;
    // Postorder emits body atoms before the heads that need them; the goal
    // graph is acyclic by kb validation.
    auto visit = [&](auto&& self, const std::string& atom) -> void {
        if (done.count(atom)) return;
        done.insert(atom);
        if (auto it = edges.find(atom); it != edges.end()) {
            for (const std::string& dep : it->second) self(self, dep);
        }
        order.push_back(atom);
    };
    for (const GoalDecl& g : kb.goals) visit(visit, g.name);
    return order;
}

} // namespace

ArgumentSet build_all(const KnowledgeBase& kb, const BuildOptions& opt) {
    std::map<Literal, std::vector<const PlanRule*>> rules_by_head;
    for (const PlanRule& r : kb.rules) rules_by_head[r.head].push_back(&r);

    std::map<Literal, std::vector<std::shared_ptr<Argument>>> by_claim;
    std::vector<std::shared_ptr<Argument>> all;
    std::size_t candidates = 0;

    for (const std::string& atom : goal_atoms_dependency_first(kb)) {
        for (bool positive : {true, false}) {
            Literal head{atom, positive};
            auto rules_it = rules_by_head.find(head);
            if (rules_it == rules_by_head.end()) continue;
            for (const PlanRule* rule : rules_it->second) {
                std::vector<ArgumentLeaf> belief_leaves;
                std::vector<ArgumentLeaf> action_leaves;
                bool satisfiable = true;
                auto resolve = [&](const std::vector<Literal>& body, Base base,
                                   std::vector<ArgumentLeaf>& out) {
                    for (const Literal& lit : body) {
                        const ProbFact* fact = kb.find_fact(base, lit);
                        if (!fact) {
                            satisfiable = false;
                            return;
                        }
                        out.push_back(ArgumentLeaf{fact->lit, fact->interval});
                    }
                };
                resolve(rule->beliefs, Base::belief, belief_leaves);
                if (satisfiable) resolve(rule->actions, Base::action, action_leaves);
                if (!satisfiable) continue;

                std::vector<const std::vector<std::shared_ptr<Argument>>*> candidate_lists;
                for (const Literal& g : rule->goals) {
                    auto it = by_claim.find(g);
                    if (it == by_claim.end() || it->second.empty()) {
                        satisfiable = false;
                        break;
                    }
                    candidate_lists.push_back(&it->second);
                }
                if (!satisfiable) continue;

                std::vector<std::size_t> pick(candidate_lists.size(), 0);
                while (true) {
                    auto arg = std::make_shared<Argument>();
                    arg->rule_id = rule->id;
                    arg->rule_interval = rule->interval;
                    arg->claim = rule->head;
                    arg->belief_leaves = belief_leaves;
                    arg->action_leaves = action_leaves;
                    arg->needs = rule->needs;
                    for (std::size_t i = 0; i < pick.size(); ++i) {
                        arg->subs.push_back((*candidate_lists[i])[pick[i]]);
                    }

                    std::vector<Interval> premises;
                    for (const ArgumentLeaf& leaf : belief_leaves) premises.push_back(leaf.interval);
                    for (const auto& sub : arg->subs) premises.push_back(sub->claim_interval);
                    for (const ArgumentLeaf& leaf : action_leaves) premises.push_back(leaf.interval);
                    arg->claim_interval = modus_ponens(rule->interval, conjoin(premises));

                    std::string key = rule->id + "(";
                    const char* sep = "";
                    for (const ArgumentLeaf& leaf : belief_leaves) {
                        key += sep;
                        key += "b:" + leaf.claim.str();
                        sep = ",";
                    }
                    for (const auto& sub : arg->subs) {
                        key += sep;
                        key += "g:" + sub->structure_key;
                        sep = ",";
                    }
                    for (const ArgumentLeaf& leaf : action_leaves) {
                        key += sep;
                        key += "a:" + leaf.claim.str();
                        sep = ",";
                    }
                    key += ")";
                    arg->structure_key = std::move(key);

                    arg->support_literals.push_back(arg->claim);
                    arg->support_elements.push_back(root_element_key(*arg));
                    for (const ArgumentLeaf& leaf : belief_leaves) {
                        arg->support_literals.push_back(leaf.claim);
                        arg->support_elements.push_back(leaf_element_key(leaf));
                    }
                    for (const ArgumentLeaf& leaf : action_leaves) {
                        arg->support_literals.push_back(leaf.claim);
                        arg->support_elements.push_back(leaf_element_key(leaf));
                    }
                    arg->body_beliefs = rule->beliefs;
                    arg->body_goals = rule->goals;
                    arg->body_actions = rule->actions;
                    for (const auto& sub : arg->subs) {
                        merge_unique(arg->support_literals, sub->support_literals);
                        merge_unique(arg->support_elements, sub->support_elements);
                        merge_unique(arg->body_beliefs, sub->body_beliefs);
                        merge_unique(arg->body_goals, sub->body_goals);
                        merge_unique(arg->body_actions, sub->body_actions);
                    }
                    finish_unique(arg->support_literals);
                    finish_unique(arg->support_elements);
                    finish_unique(arg->body_beliefs);
                    finish_unique(arg->body_goals);
                    finish_unique(arg->body_actions);

                    ++candidates;
                    if (candidates > opt.max_arguments) {
                        throw LimitError("argument-limit: more than " +
                                         std::to_string(opt.max_arguments) +
                                         " arguments; raise --max-args or simplify the knowledge base");
                    }
                    // Complementary literals in the sorted support sit next
                    // to each other; a plan asserting both is not executable.
                    bool executable = true;
                    for (std::size_t k = 0; k + 1 < arg->support_literals.size(); ++k) {
                        if (arg->support_literals[k].negated() == arg->support_literals[k + 1]) {
                            executable = false;
                            break;
                        }
                    }
                    if (executable) {
                        by_claim[rule->head].push_back(arg);
                        all.push_back(arg);
                    }

                    // Odometer over the candidate lists.
                    std::size_t pos = 0;
                    for (; pos < pick.size(); ++pos) {
                        if (++pick[pos] < candidate_lists[pos]->size()) break;
                        pick[pos] = 0;
                    }
                    if (pos == pick.size()) break;
                }
            }
        }
    }

    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a->structure_key < b->structure_key;
    });
    std::map<const Argument*, std::size_t> index_of;
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i]->index = i;
        all[i]->id = "A" + std::to_string(i + 1);
        index_of[all[i].get()] = i;
    }
    for (const auto& arg : all) {
        std::set<const Argument*> nodes;
        collect_nodes(*arg, nodes);
        arg->needs_total.clear();
        for (const Argument* node : nodes) {
            for (const auto& [res, amount] : node->needs) arg->needs_total[res] += amount;
            if (node != arg.get()) arg->sub_indices.push_back(index_of.at(node));
        }
        finish_unique(arg->sub_indices);
    }

    ArgumentSet out;
    out.args.assign(all.begin(), all.end());
    for (const GoalDecl& g : kb.goals) {
        if (!g.pursued) continue;
        Literal claim{g.name, true};
        bool found = std::any_of(out.args.begin(), out.args.end(),
                                 [&](const auto& a) { return a->claim == claim; });
        if (!found) {
            out.diagnostics.push_back("pursued goal '" + g.name + "' has no argument");
        }
    }
    return out;
}

const Argument* ArgumentSet::by_id(const std::string& id) const {
    for (const auto& a : args) {
        if (a->id == id) return a.get();
    }
    return nullptr;
}

const Argument* ArgumentSet::by_claim(const Literal& claim) const {
    for (const auto& a : args) {
        if (a->claim == claim) return a.get();
    }
    return nullptr;
}

Interval claim_interval(const Argument& a) {
    return a.claim_interval;
}

Interval recompute_claim_interval(const Argument& a) {
    std::vector<Interval> premises;
    for (const ArgumentLeaf& leaf : a.belief_leaves) premises.push_back(leaf.interval);
    for (const auto& sub : a.subs) premises.push_back(recompute_claim_interval(*sub));
    for (const ArgumentLeaf& leaf : a.action_leaves) premises.push_back(leaf.interval);
    return modus_ponens(a.rule_interval, conjoin(premises));
}

const std::map<std::string, double>& list_res_arg(const Argument& a) {
    return a.needs_total;
}

double need_res(const Argument& a, const std::string& resource) {
    auto it = a.needs_total.find(resource);
    return it == a.needs_total.end() ? 0.0 : it->second;
}

} // namespace goalsel
