#include "goalsel/attacks.hpp"

#include <algorithm>
#include <map>

namespace goalsel {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

bool has_complementary_support(const Argument& a, const Argument& b) {
    // Support literals are sorted; bases are disjoint on atoms, so a
    // complementary pair is automatically same-base.
    for (const Literal& lit : a.support_literals) {
        if (std::binary_search(b.support_literals.begin(), b.support_literals.end(),
                               lit.negated())) {
            return true;
        }
    }
    return false;
}

// Expands a base pair to every directed pair across the two argument trees
// ({a} u SUB(a)) x ({b} u SUB(b)), both directions, without self-pairs.
// This is the fixpoint of the published inheritance rules, since
// sub-arguments of sub-arguments are sub-arguments themselves.
void inherit(const ArgumentSet& args, std::size_t a, std::size_t b, std::set<Pair>& out) {
    std::vector<std::size_t> left{a};
    left.insert(left.end(), args.args[a]->sub_indices.begin(), args.args[a]->sub_indices.end());
    std::vector<std::size_t> right{b};
    right.insert(right.end(), args.args[b]->sub_indices.begin(), args.args[b]->sub_indices.end());
    for (std::size_t x : left) {
        for (std::size_t y : right) {
            if (x == y) continue;
            out.insert({x, y});
            out.insert({y, x});
        }
    }
}

std::vector<Attack> to_attacks(const std::set<Pair>& pairs, AttackType type) {
    std::vector<Attack> out;
    out.reserve(pairs.size());
    for (const Pair& p : pairs) out.push_back(Attack{p.first, p.second, {type}});
    return out;
}

} // namespace

std::string_view attack_type_name(AttackType t) {
    switch (t) {
    case AttackType::terminal: return "terminal";
    case AttackType::resource: return "resource";
    case AttackType::superfluous: return "superfluous";
    }
    return "?";
}

std::vector<Attack> terminal_attacks(const ArgumentSet& args) {
    std::set<Pair> pairs;
    const std::size_t n = args.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Argument& a = *args.args[i];
            const Argument& b = *args.args[j];
            if (a.claim == b.claim) continue;
            if (!has_complementary_support(a, b)) continue;
            inherit(args, i, j, pairs);
        }
    }
    return to_attacks(pairs, AttackType::terminal);
}

std::vector<Attack> resource_attacks(const ArgumentSet& args, const KnowledgeBase& kb) {
    std::set<Pair> pairs;
    const std::size_t n = args.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Argument& a = *args.args[i];
            const Argument& b = *args.args[j];
            if (a.claim == b.claim) continue;
            bool overlap = false;
            for (const auto& [res, amount] : a.needs_total) {
                auto it = b.needs_total.find(res);
                if (it == b.needs_total.end()) continue;
                if (amount + it->second > kb.available_res(res)) {
                    overlap = true;
                    break;
                }
            }
            if (!overlap) continue;
            pairs.insert({i, j});
            pairs.insert({j, i});
        }
    }
    return to_attacks(pairs, AttackType::resource);
}

std::vector<Attack> superfluous_attacks(const ArgumentSet& args) {
    std::set<Pair> pairs;
    const std::size_t n = args.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Argument& a = *args.args[i];
            const Argument& b = *args.args[j];
            if (a.claim != b.claim) continue;
            if (a.support_elements == b.support_elements) continue;
            inherit(args, i, j, pairs);
        }
    }
    return to_attacks(pairs, AttackType::superfluous);
}

std::vector<Attack> all_attacks(const ArgumentSet& args, const KnowledgeBase& kb) {
    std::map<Pair, std::set<AttackType>> merged;
    auto absorb = [&](const std::vector<Attack>& attacks) {
        for (const Attack& at : attacks) {
            merged[{at.attacker, at.target}].insert(at.types.begin(), at.types.end());
        }
    };
    absorb(terminal_attacks(args));
    absorb(resource_attacks(args, kb));
    absorb(superfluous_attacks(args));
    std::vector<Attack> out;
    out.reserve(merged.size());
    for (const auto& [pair, types] : merged) {
        out.push_back(Attack{pair.first, pair.second, types});
    }
    return out;
}

} // namespace goalsel
