#include "goalsel/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "goalsel/errors.hpp"

namespace goalsel {

namespace {

Extension finish_extension(std::vector<std::size_t> members, const ArgumentSet& args,
                           const KnowledgeBase& kb) {
    Extension e;
    e.members = std::move(members);
    std::set<std::string> tops;
    for (std::size_t i : e.members) {
        const Argument& a = *args.args[i];
        if (!a.claim.positive) continue;
        const GoalDecl* g = kb.find_goal(a.claim.atom);
        if (g && g->pursued) tops.insert(a.claim.atom);
    }
    e.top_goals.assign(tops.begin(), tops.end());
    for (const std::string& g : e.top_goals) e.pref_total += kb.pref(g);
    return e;
}

} // namespace

Framework make_framework(const ArgumentSet& args, const KnowledgeBase& kb) {
    Framework af;
    af.argument_count = args.size();
    af.attacks = all_attacks(args, kb);
    return af;
}

Framework successful_filter(const Framework& af, const ArgumentSet& args,
                            const KnowledgeBase& kb, TieBreak tb) {
    auto succeeds = [&](std::size_t attacker, std::size_t target) {
        const Argument& a = *args.args[attacker];
        const Argument& b = *args.args[target];
        return prefer_logical(a, b, tb) == Ordering::a_preferred ||
               prefer_utility(a, b, kb) == Ordering::a_preferred;
    };
    std::set<std::pair<std::size_t, std::size_t>> present;
    for (const Attack& at : af.attacks) present.insert({at.attacker, at.target});

    Framework out;
    out.argument_count = af.argument_count;
    for (const Attack& at : af.attacks) {
        bool fwd = succeeds(at.attacker, at.target);
        bool rev = present.count({at.target, at.attacker}) && succeeds(at.target, at.attacker);
        // An edge is dropped only when the opposite direction succeeds alone.
        if (!fwd && rev) continue;
        out.attacks.push_back(at);
    }
    return out;
}

std::vector<Extension> conflict_free(const Framework& af, const ArgumentSet& args,
                                     const KnowledgeBase& kb, const EnumLimits& limits) {
    const std::size_t n = af.argument_count;
    if (n > limits.max_enum_args) {
        throw LimitError("extension-limit: " + std::to_string(n) + " arguments exceed the " +
                         std::to_string(limits.max_enum_args) +
                         " supported for exhaustive extension enumeration; reduce the knowledge base");
    }
    // Any directed edge makes the pair conflicting.
    std::vector<std::uint32_t> conflict(n, 0);
    for (const Attack& at : af.attacks) {
        conflict[at.attacker] |= std::uint32_t{1} << at.target;
        conflict[at.target] |= std::uint32_t{1} << at.attacker;
    }

    std::vector<std::uint32_t> found;
    auto emit = [&](std::uint32_t mask) {
        found.push_back(mask);
        if (found.size() > limits.max_extensions) {
            throw LimitError("extension-limit: more than " +
                             std::to_string(limits.max_extensions) +
                             " conflict-free extensions; raise --max-extensions or reduce the knowledge base");
        }
    };
    // Iterative enumeration: walk positions 0..n-1, at each either skip or,
    // when compatible, take the argument.
    struct Frame {
        std::size_t pos;
        std::uint32_t mask;
    };
    std::vector<Frame> todo{{0, 0}};
    while (!todo.empty()) {
        Frame f = todo.back();
        todo.pop_back();
        if (f.pos == n) {
            emit(f.mask);
            continue;
        }
        // Taking the branch that skips f.pos last keeps emission order stable.
        bool compatible = (conflict[f.pos] & f.mask) == 0;
        todo.push_back({f.pos + 1, f.mask});
        if (compatible) todo.push_back({f.pos + 1, f.mask | (std::uint32_t{1} << f.pos)});
    }

    std::vector<Extension> out;
    out.reserve(found.size());
    for (std::uint32_t mask : found) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint32_t{1} << i)) members.push_back(i);
        }
        out.push_back(finish_extension(std::move(members), args, kb));
    }
    std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

std::vector<Extension> max_goal(const std::vector<Extension>& family) {
    if (family.empty()) return {};
    std::size_t best = 0;
    for (const Extension& e : family) best = std::max(best, e.top_goals.size());
    std::vector<Extension> winners;
    for (const Extension& e : family) {
        if (e.top_goals.size() == best) winners.push_back(e);
    }
    // Inclusion-maximal member sets among the count winners.
    std::vector<Extension> out;
    for (const Extension& e : winners) {
        bool dominated = std::any_of(winners.begin(), winners.end(), [&](const Extension& o) {
            if (o.members.size() <= e.members.size()) return false;
            return std::includes(o.members.begin(), o.members.end(), e.members.begin(),
                                 e.members.end());
        });
        if (!dominated) out.push_back(e);
    }
    return out;
}

std::vector<Extension> max_util(const std::vector<Extension>& family) {
    if (family.empty()) return {};
    double best = family.front().pref_total;
    for (const Extension& e : family) best = std::max(best, e.pref_total);
    std::vector<Extension> out;
    for (const Extension& e : family) {
        if (approx_eq(e.pref_total, best)) out.push_back(e);
    }
    return out;
}

std::vector<Literal> comp_goals(const Extension& e, const ArgumentSet& args) {
    std::set<Literal> claims;
    for (std::size_t i : e.members) {
        const Argument& a = *args.args[i];
        claims.insert(a.claim);
        for (std::size_t s : a.sub_indices) claims.insert(args.args[s]->claim);
    }
    return {claims.begin(), claims.end()};
}

SelectionReport select(const KnowledgeBase& kb, const SelectOptions& opt) {
    SelectionReport report;
    report.args = build_all(kb, opt.build);
    report.diagnostics = report.args.diagnostics;

    Framework af = make_framework(report.args, kb);
    report.attacks_pre = af.attacks;
    Framework filtered = successful_filter(af, report.args, kb, opt.tiebreak);
    report.attacks_post = filtered.attacks;

    report.conflict_free_family = conflict_free(filtered, report.args, kb, opt.limits);
    report.goal_winners = max_goal(report.conflict_free_family);
    report.utility_winners = max_util(report.goal_winners);
    for (const Extension& e : report.utility_winners) {
        report.compatible_goals.push_back(comp_goals(e, report.args));
    }
    return report;
}

} // namespace goalsel
