#ifndef GOALSEL_POSTULATES_HPP
#define GOALSEL_POSTULATES_HPP

#include <string>
#include <vector>

#include "goalsel/arguments.hpp"
#include "goalsel/kb.hpp"
#include "goalsel/semantics.hpp"

namespace goalsel {

// Literals an extension leans on, collected from the rule bodies across all
// member argument trees and partitioned by base.
struct Projections {
    std::vector<Literal> beliefs;
    std::vector<Literal> actions;
    std::vector<Literal> goals;
};

Projections support_projections(const Extension& e, const ArgumentSet& args);

struct Verdict {
    bool pass = true;
    std::vector<std::string> witnesses;
};

// Direct consistency: no complementary pair inside any of the three
// projections, and no two members claiming the same goal through different
// support.
struct DirectCheck {
    Verdict beliefs;
    Verdict actions;
    Verdict goals;
    Verdict superfluity;
    bool pass() const {
        return beliefs.pass && actions.pass && goals.pass && superfluity.pass;
    }
};

DirectCheck check_direct_consistency(const Extension& e, const ArgumentSet& args);

// Deductive closure of a literal set under the plan rules: a rule fires once
// its whole body (beliefs, goals, actions) is contained, adding its head.
std::vector<Literal> closure_pr(std::vector<Literal> literals,
                                const std::vector<PlanRule>& rules);

// Closure postulate: the member claims, closed under the plan rules, derive
// no goal literal beyond themselves. Witnesses list the missing heads.
Verdict check_closure(const Extension& e, const ArgumentSet& args, const KnowledgeBase& kb);

// Indirect consistency: the closure of the member claims contains no
// complementary pair.
Verdict check_indirect_consistency(const Extension& e, const ArgumentSet& args,
                                   const KnowledgeBase& kb);

struct ExtensionCheck {
    DirectCheck direct;
    Verdict closure;
    Verdict indirect;
    bool pass() const { return direct.pass() && closure.pass && indirect.pass; }
};

// Family-level report: per-extension verdicts plus the checks on the shared
// output (the intersection of the member claims across extensions).
struct PostulateReport {
    std::vector<ExtensionCheck> per_extension;
    std::vector<std::vector<Literal>> conclusions; // CONCS per extension
    std::vector<Literal> output;                   // intersection
    Verdict output_closure;
    Verdict output_consistency;

    bool pass() const;
};

PostulateReport verify_extensions(const std::vector<Extension>& family,
                                  const ArgumentSet& args, const KnowledgeBase& kb);

} // namespace goalsel

#endif
