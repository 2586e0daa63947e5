#include "goalsel/postulates.hpp"

#include <algorithm>
#include <set>

namespace goalsel {

namespace {

std::vector<Literal> member_claims(const Extension& e, const ArgumentSet& args) {
    std::set<Literal> claims;
    for (std::size_t i : e.members) claims.insert(args.args[i]->claim);
    return {claims.begin(), claims.end()};
}

Verdict consistency(const std::vector<Literal>& lits, const std::string& where) {
    Verdict v;
    std::set<Literal> seen(lits.begin(), lits.end());
    for (const Literal& lit : lits) {
        if (!lit.positive) continue; // report each complementary pair once
        if (seen.count(lit.negated())) {
            v.pass = false;
            v.witnesses.push_back(where + ": complementary pair '" + lit.str() + "' / '" +
                                  lit.negated().str() + "'");
        }
    }
    return v;
}

} // namespace

Projections support_projections(const Extension& e, const ArgumentSet& args) {
    std::set<Literal> beliefs;
    std::set<Literal> actions;
    std::set<Literal> goals;
    for (std::size_t i : e.members) {
        const Argument& a = *args.args[i];
        beliefs.insert(a.body_beliefs.begin(), a.body_beliefs.end());
        actions.insert(a.body_actions.begin(), a.body_actions.end());
        goals.insert(a.body_goals.begin(), a.body_goals.end());
    }
    Projections p;
    p.beliefs.assign(beliefs.begin(), beliefs.end());
    p.actions.assign(actions.begin(), actions.end());
    p.goals.assign(goals.begin(), goals.end());
    return p;
}

DirectCheck check_direct_consistency(const Extension& e, const ArgumentSet& args) {
    DirectCheck check;
    Projections p = support_projections(e, args);
    check.beliefs = consistency(p.beliefs, "beliefs");
    check.actions = consistency(p.actions, "actions");
    check.goals = consistency(p.goals, "goals");
    for (std::size_t x = 0; x < e.members.size(); ++x) {
        for (std::size_t y = x + 1; y < e.members.size(); ++y) {
            const Argument& a = *args.args[e.members[x]];
            const Argument& b = *args.args[e.members[y]];
            if (a.claim == b.claim && a.support_elements != b.support_elements) {
                check.superfluity.pass = false;
                check.superfluity.witnesses.push_back(
                    "superfluous pair: " + a.id + " and " + b.id + " both claim '" +
                    a.claim.str() + "' through different support");
            }
        }
    }
    return check;
}

std::vector<Literal> closure_pr(std::vector<Literal> literals,
                                const std::vector<PlanRule>& rules) {
    std::set<Literal> closed(literals.begin(), literals.end());
    bool grew = true;
    while (grew) {
        grew = false;
        for (const PlanRule& r : rules) {
            if (closed.count(r.head)) continue;
            auto contains_all = [&](const std::vector<Literal>& body) {
                return std::all_of(body.begin(), body.end(),
                                   [&](const Literal& lit) { return closed.count(lit) > 0; });
            };
            if (contains_all(r.beliefs) && contains_all(r.goals) && contains_all(r.actions)) {
                closed.insert(r.head);
                grew = true;
            }
        }
    }
    return {closed.begin(), closed.end()};
}

Verdict check_closure(const Extension& e, const ArgumentSet& args, const KnowledgeBase& kb) {
    Verdict v;
    std::vector<Literal> concs = member_claims(e, args);
    std::vector<Literal> closed = closure_pr(concs, kb.rules);
    std::set<Literal> have(concs.begin(), concs.end());
    for (const Literal& lit : closed) {
        if (!have.count(lit)) {
            v.pass = false;
            v.witnesses.push_back("derivable head '" + lit.str() +
                                  "' is missing from the conclusions");
        }
    }
    return v;
}

Verdict check_indirect_consistency(const Extension& e, const ArgumentSet& args,
                                   const KnowledgeBase& kb) {
    std::vector<Literal> closed = closure_pr(member_claims(e, args), kb.rules);
    return consistency(closed, "closed conclusions");
}

bool PostulateReport::pass() const {
    if (!output_closure.pass || !output_consistency.pass) return false;
    return std::all_of(per_extension.begin(), per_extension.end(),
                       [](const ExtensionCheck& c) { return c.pass(); });
}

PostulateReport verify_extensions(const std::vector<Extension>& family,
                                  const ArgumentSet& args, const KnowledgeBase& kb) {
    PostulateReport report;
    for (const Extension& e : family) {
        ExtensionCheck check;
        check.direct = check_direct_consistency(e, args);
        check.closure = check_closure(e, args, kb);
        check.indirect = check_indirect_consistency(e, args, kb);
        report.per_extension.push_back(std::move(check));
        report.conclusions.push_back(member_claims(e, args));
    }

    if (!report.conclusions.empty()) {
        std::set<Literal> acc(report.conclusions.front().begin(),
                              report.conclusions.front().end());
        for (const auto& concs : report.conclusions) {
            std::set<Literal> next;
            for (const Literal& lit : concs) {
                if (acc.count(lit)) next.insert(lit);
            }
            acc = std::move(next);
        }
        report.output.assign(acc.begin(), acc.end());
    }

    std::vector<Literal> closed_output = closure_pr(report.output, kb.rules);
    std::set<Literal> have(report.output.begin(), report.output.end());
    for (const Literal& lit : closed_output) {
        if (!have.count(lit)) {
            report.output_closure.pass = false;
            report.output_closure.witnesses.push_back(
                "derivable head '" + lit.str() + "' is missing from the shared output");
        }
    }
    report.output_consistency = consistency(closed_output, "closed output");
    return report;
}

} // namespace goalsel
