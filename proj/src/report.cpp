#include "goalsel/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "goalsel/strength.hpp"

namespace goalsel {

namespace {

using nlohmann::ordered_json;

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ordered_json argument_entry(const Argument& a, const KnowledgeBase& kb) {
    StrengthVector s = logical_strength(a);
    UtilityValue u = utility(a, kb);
    ordered_json subs = ordered_json::array();
    // sub_indices are sorted, so ids come out deterministically.
    ordered_json needs = ordered_json::object();
    for (const auto& [res, amount] : a.needs_total) needs[res] = amount;
    ordered_json entry{{"id", a.id},
                       {"rule", a.rule_id},
                       {"claim", a.claim.str()},
                       {"interval", {{"l", a.claim_interval.l}, {"u", a.claim_interval.u}}},
                       {"strength", {{"co", s.co}, {"pr", s.pr}, {"lo", s.lo}}},
                       {"utility",
                        {{"value", u.value},
                         {"pref_sum", u.pref_sum},
                         {"comb", u.comb},
                         {"cost", u.cost}}},
                       {"needs", needs},
                       {"subs", subs}};
    for (std::size_t i : a.sub_indices) entry["subs"].push_back("A" + std::to_string(i + 1));
    return entry;
}

ordered_json attack_entry(const Attack& at, const SelectionReport& r) {
    ordered_json types = ordered_json::array();
    for (AttackType t : at.types) types.push_back(std::string(attack_type_name(t)));
    return ordered_json{{"attacker", r.args.args[at.attacker]->id},
                        {"target", r.args.args[at.target]->id},
                        {"types", types}};
}

ordered_json attack_array(const std::vector<Attack>& attacks, const SelectionReport& r) {
    ordered_json arr = ordered_json::array();
    for (const Attack& at : attacks) arr.push_back(attack_entry(at, r));
    return arr;
}

ordered_json extension_entry(const Extension& e, const SelectionReport& r) {
    ordered_json members = ordered_json::array();
    for (std::size_t i : e.members) members.push_back(r.args.args[i]->id);
    ordered_json tops = ordered_json::array();
    for (const std::string& g : e.top_goals) tops.push_back(g);
    return ordered_json{{"members", members}, {"top_goals", tops}, {"pref_total", e.pref_total}};
}

ordered_json extension_array(const std::vector<Extension>& family, const SelectionReport& r) {
    ordered_json arr = ordered_json::array();
    for (const Extension& e : family) arr.push_back(extension_entry(e, r));
    return arr;
}

std::string member_list(const Extension& e, const SelectionReport& r) {
    std::string out = "{";
    const char* sep = "";
    for (std::size_t i : e.members) {
        out += sep;
        out += r.args.args[i]->id;
        sep = ",";
    }
    return out + "}";
}

std::string attack_line(const Attack& at, const SelectionReport& r) {
    std::string out = r.args.args[at.attacker]->id + "(" + r.args.args[at.attacker]->claim.str() +
                      ") -> " + r.args.args[at.target]->id + "(" +
                      r.args.args[at.target]->claim.str() + ") [";
    const char* sep = "";
    for (AttackType t : at.types) {
        out += sep;
        out += std::string(attack_type_name(t));
        sep = ",";
    }
    return out + "]";
}

ordered_json diagnostics_array(const SelectionReport& r) {
    ordered_json arr = ordered_json::array();
    for (const std::string& d : r.diagnostics) arr.push_back(d);
    return arr;
}

ordered_json verdict_entry(const Verdict& v) {
    ordered_json witnesses = ordered_json::array();
    for (const std::string& w : v.witnesses) witnesses.push_back(w);
    return ordered_json{{"pass", v.pass}, {"witnesses", witnesses}};
}

} // namespace

std::string arguments_json(const SelectionReport& r, const KnowledgeBase& kb) {
    ordered_json doc;
    doc["arguments"] = ordered_json::array();
    for (const auto& a : r.args.args) doc["arguments"].push_back(argument_entry(*a, kb));
    doc["diagnostics"] = diagnostics_array(r);
    return doc.dump(2) + "\n";
}

std::string arguments_text(const SelectionReport& r, const KnowledgeBase& kb) {
    std::ostringstream out;
    out << r.args.size() << " argument(s)\n";
    for (const auto& a : r.args.args) {
        StrengthVector s = logical_strength(*a);
        UtilityValue u = utility(*a, kb);
        out << "  " << a->id << "  " << a->claim.str() << "  [" << fmt_g(a->claim_interval.l)
            << "," << fmt_g(a->claim_interval.u) << "]"
            << "  <co=" << fmt_g(s.co) << ",pr=" << fmt_g(s.pr) << ",lo=" << fmt_g(s.lo) << ">"
            << "  utility=" << fmt_g(u.value) << "  rule=" << a->rule_id;
        if (!a->sub_indices.empty()) {
            out << "  subs=[";
            const char* sep = "";
            for (std::size_t i : a->sub_indices) {
                out << sep << "A" << (i + 1);
                sep = ",";
            }
            out << "]";
        }
        out << "\n";
    }
    for (const std::string& d : r.diagnostics) out << "  note: " << d << "\n";
    return out.str();
}

std::string attacks_json(const SelectionReport& r) {
    ordered_json doc;
    doc["pre_filter"] = attack_array(r.attacks_pre, r);
    doc["post_filter"] = attack_array(r.attacks_post, r);
    return doc.dump(2) + "\n";
}

std::string attacks_text(const SelectionReport& r) {
    std::ostringstream out;
    out << "pre-filter (" << r.attacks_pre.size() << ")\n";
    for (const Attack& at : r.attacks_pre) out << "  " << attack_line(at, r) << "\n";
    out << "post-filter (" << r.attacks_post.size() << ")\n";
    for (const Attack& at : r.attacks_post) out << "  " << attack_line(at, r) << "\n";
    return out.str();
}

std::string selection_json(const SelectionReport& r, const KnowledgeBase& kb) {
    ordered_json doc;
    doc["arguments"] = ordered_json::array();
    for (const auto& a : r.args.args) doc["arguments"].push_back(argument_entry(*a, kb));
    doc["attacks"] = {{"pre_filter", attack_array(r.attacks_pre, r)},
                      {"post_filter", attack_array(r.attacks_post, r)}};
    doc["extensions"] = {{"conflict_free", extension_array(r.conflict_free_family, r)},
                         {"max_goal", extension_array(r.goal_winners, r)},
                         {"max_util", extension_array(r.utility_winners, r)}};
    doc["selection"] = ordered_json::array();
    for (std::size_t i = 0; i < r.utility_winners.size(); ++i) {
        ordered_json goals = ordered_json::array();
        for (const Literal& lit : r.compatible_goals[i]) goals.push_back(lit.str());
        doc["selection"].push_back({{"extension", extension_entry(r.utility_winners[i], r)["members"]},
                                    {"compatible_goals", goals}});
    }
    doc["diagnostics"] = diagnostics_array(r);
    return doc.dump(2) + "\n";
}

std::string selection_text(const SelectionReport& r, const KnowledgeBase& kb) {
    std::ostringstream out;
    out << arguments_text(r, kb);
    out << attacks_text(r);
    out << "conflict-free extensions (" << r.conflict_free_family.size() << ")\n";
    for (const Extension& e : r.conflict_free_family) out << "  " << member_list(e, r) << "\n";
    out << "goal-maximal (" << r.goal_winners.size() << ")\n";
    for (const Extension& e : r.goal_winners) {
        out << "  " << member_list(e, r) << "  top goals: ";
        const char* sep = "";
        for (const std::string& g : e.top_goals) {
            out << sep << g;
            sep = ", ";
        }
        out << "\n";
    }
    out << "preference-maximal (" << r.utility_winners.size() << ")\n";
    for (std::size_t i = 0; i < r.utility_winners.size(); ++i) {
        out << "  " << member_list(r.utility_winners[i], r) << "  pref total "
            << fmt_g(r.utility_winners[i].pref_total) << "  compatible goals: ";
        const char* sep = "";
        for (const Literal& lit : r.compatible_goals[i]) {
            out << sep << lit.str();
            sep = ", ";
        }
        out << "\n";
    }
    return out.str();
}

std::string postulates_json(const PostulateReport& p, const SelectionReport& r) {
    ordered_json doc;
    doc["extensions"] = ordered_json::array();
    for (std::size_t i = 0; i < p.per_extension.size(); ++i) {
        const ExtensionCheck& c = p.per_extension[i];
        ordered_json concs = ordered_json::array();
        for (const Literal& lit : p.conclusions[i]) concs.push_back(lit.str());
        doc["extensions"].push_back(
            {{"members", extension_entry(r.conflict_free_family[i], r)["members"]},
             {"conclusions", concs},
             {"belief_consistency", verdict_entry(c.direct.beliefs)},
             {"action_consistency", verdict_entry(c.direct.actions)},
             {"goal_consistency", verdict_entry(c.direct.goals)},
             {"superfluity_free", verdict_entry(c.direct.superfluity)},
             {"closure", verdict_entry(c.closure)},
             {"indirect_consistency", verdict_entry(c.indirect)}});
    }
    ordered_json output = ordered_json::array();
    for (const Literal& lit : p.output) output.push_back(lit.str());
    doc["output"] = {{"literals", output},
                     {"closure", verdict_entry(p.output_closure)},
                     {"consistency", verdict_entry(p.output_consistency)}};
    doc["pass"] = p.pass();
    return doc.dump(2) + "\n";
}

std::string postulates_text(const PostulateReport& p, const SelectionReport& r) {
    std::ostringstream out;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < p.per_extension.size(); ++i) {
        const ExtensionCheck& c = p.per_extension[i];
        if (c.pass()) continue;
        ++failures;
        out << "FAIL " << member_list(r.conflict_free_family[i], r) << "\n";
        auto dump = [&](const Verdict& v) {
            for (const std::string& w : v.witnesses) out << "    " << w << "\n";
        };
        dump(c.direct.beliefs);
        dump(c.direct.actions);
        dump(c.direct.goals);
        dump(c.direct.superfluity);
        dump(c.closure);
        dump(c.indirect);
    }
    for (const std::string& w : p.output_closure.witnesses) out << "    " << w << "\n";
    for (const std::string& w : p.output_consistency.witnesses) out << "    " << w << "\n";
    out << p.per_extension.size() << " extension(s) checked, " << failures << " failure(s), output "
        << (p.output_closure.pass && p.output_consistency.pass ? "ok" : "FAILED") << "\n";
    return out.str();
}

std::string export_dot(const SelectionReport& r) {
    std::ostringstream out;
    out << "digraph framework {\n";
    out << "  rankdir=LR;\n";
    for (const auto& a : r.args.args) {
        StrengthVector s = logical_strength(*a);
        out << "  \"" << a->id << "\" [label=\"" << a->id << "\\n\u27e8" << fmt_g(s.co) << ","
            << fmt_g(s.pr) << "," << fmt_g(s.lo) << "\u27e9\"];\n";
    }
    for (const Attack& at : r.attacks_post) {
        out << "  \"" << r.args.args[at.attacker]->id << "\" -> \""
            << r.args.args[at.target]->id << "\";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace goalsel
