#include "goalsel/strength.hpp"

#include <set>

namespace goalsel {

StrengthVector logical_strength(Interval claim) {
    StrengthVector s;
    s.lo = (claim.l + claim.u) / 2.0;
    s.pr = 1.0 - (claim.u - claim.l);
    s.co = s.pr * s.lo;
    return s;
}

StrengthVector logical_strength(const Argument& a) {
    return logical_strength(a.claim_interval);
}

double cost(const Argument& a) {
    double total = 0.0;
    for (const auto& [res, amount] : a.needs_total) total += amount;
    return total;
}

UtilityValue utility(const Argument& a, const KnowledgeBase& kb) {
    UtilityValue u;
    // Each distinct goal atom in the support counts once, whatever its sign
    // and however many sub-arguments mention it.
    std::set<std::string> atoms;
    for (const Literal& lit : a.support_literals) {
        if (kb.find_goal(lit.atom)) atoms.insert(lit.atom);
    }
    for (const std::string& atom : atoms) u.pref_sum += kb.pref(atom);
    u.comb = logical_strength(a).co;
    u.cost = cost(a);
    u.value = u.pref_sum + u.comb - u.cost;
    return u;
}

Ordering prefer_vectors(const StrengthVector& a, const StrengthVector& b, TieBreak tb) {
    if (definitely_gt(a.co, b.co)) return Ordering::a_preferred;
    if (definitely_gt(b.co, a.co)) return Ordering::b_preferred;

    auto by_pr = [&]() -> Ordering {
        if (approx_eq(a.lo, b.lo)) {
            if (definitely_gt(a.pr, b.pr)) return Ordering::a_preferred;
            if (definitely_gt(b.pr, a.pr)) return Ordering::b_preferred;
        }
        return Ordering::tie;
    };
    auto by_lo = [&]() -> Ordering {
        if (approx_eq(a.pr, b.pr)) {
            if (definitely_gt(a.lo, b.lo)) return Ordering::a_preferred;
            if (definitely_gt(b.lo, a.lo)) return Ordering::b_preferred;
        }
        return Ordering::tie;
    };

    Ordering first = tb == TieBreak::precision_first ? by_pr() : by_lo();
    if (first != Ordering::tie) return first;
    return tb == TieBreak::precision_first ? by_lo() : by_pr();
}

Ordering prefer_logical(const Argument& a, const Argument& b, TieBreak tb) {
    return prefer_vectors(logical_strength(a), logical_strength(b), tb);
}

Ordering prefer_utility(const Argument& a, const Argument& b, const KnowledgeBase& kb) {
    double ua = utility(a, kb).value;
    double ub = utility(b, kb).value;
    if (definitely_gt(ua, ub)) return Ordering::a_preferred;
    if (definitely_gt(ub, ua)) return Ordering::b_preferred;
    return Ordering::tie;
}

} // namespace goalsel
