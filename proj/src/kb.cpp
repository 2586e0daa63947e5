#include "goalsel/kb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "goalsel/errors.hpp"

namespace goalsel {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool valid_atom(std::string_view s) {
    if (s.empty()) return false;
    auto head = [](char c) { return (c >= 'a' && c <= 'z') || c == '_'; };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(s.front())) return false;
    return std::all_of(s.begin() + 1, s.end(), tail);
}

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError("expected a number for " + where);
    return j.get<double>();
}

Interval parse_interval(const json& j, const std::string& where) {
    if (!j.contains("l") || !j.contains("u")) {
        throw ParseError("missing interval bounds 'l'/'u' in " + where);
    }
    double l = require_number(j.at("l"), where + ".l");
    double u = require_number(j.at("u"), where + ".u");
    return Interval::checked(l, u);
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end()) {
            throw ParseError("unknown key '" + key + "' in " + where);
        }
    }
}

std::vector<Literal> parse_literal_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError("expected an array of literals for " + where);
    std::vector<Literal> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError("expected literal strings in " + where);
        out.push_back(Literal::parse(item.get<std::string>()));
    }
    return out;
}

std::vector<ProbFact> parse_facts(const json& j, const std::string& section) {
    if (!j.is_array()) throw ParseError("expected an array for '" + section + "'");
    std::vector<ProbFact> out;
    for (const auto& item : j) {
        if (!item.is_object()) throw ParseError("expected objects in '" + section + "'");
        reject_unknown_keys(item, {"lit", "l", "u"}, section + " entry");
        if (!item.contains("lit") || !item.at("lit").is_string()) {
            throw ParseError("missing or non-string 'lit' in " + section + " entry");
        }
        ProbFact f;
        f.lit = Literal::parse(item.at("lit").get<std::string>());
        f.interval = parse_interval(item, section + " entry '" + f.lit.str() + "'");
        out.push_back(std::move(f));
    }
    return out;
}

struct AtomLocation {
    Base base;
};

void declare_atom(std::map<std::string, Base>& atoms, const std::string& atom, Base base) {
    auto [it, inserted] = atoms.emplace(atom, base);
    if (!inserted && it->second != base) {
        throw ValidationError("base-overlap: atom '" + atom + "' declared in both " +
                              std::string(base_name(it->second)) + " and " +
                              std::string(base_name(base)));
    }
}

void check_cycles(const KnowledgeBase& kb) {
    // Goal dependency graph on atoms: rule head -> each body goal.
    std::map<std::string, std::set<std::string>> edges;
    for (const PlanRule& r : kb.rules) {
        for (const Literal& g : r.goals) edges[r.head.atom].insert(g.atom);
    }
    enum class Color { white, grey, black };
    std::map<std::string, Color> color;
    std::vector<std::string> path;

    // Iterative DFS with an explicit stack so deep chains cannot overflow.
    struct Frame {
        std::string node;
        std::vector<std::string> next;
        std::size_t i = 0;
    };
    for (const auto& [start, _] : edges) {
        if (color[start] != Color::white) continue;
        std::vector<Frame> stack;
        auto push = [&](const std::string& n) {
            color[n] = Color::grey;
            path.push_back(n);
            Frame f;
            f.node = n;
            if (auto it = edges.find(n); it != edges.end()) {
                f.next.assign(it->second.begin(), it->second.end());
            }
            stack.push_back(std::move(f));
        };
        push(start);
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.i == f.next.size()) {
                color[f.node] = Color::black;
                path.pop_back();
                stack.pop_back();
                continue;
            }
            const std::string& n = f.next[f.i++];
            Color c = color.count(n) ? color[n] : Color::white;
            if (c == Color::grey) {
                std::string cycle;
                auto at = std::find(path.begin(), path.end(), n);
                for (auto it = at; it != path.end(); ++it) cycle += *it + " -> ";
                cycle += n;
                throw ValidationError("cyclic-goal-dependency: " + cycle);
            }
            if (c == Color::white) push(n);
        }
    }
}

void validate(const KnowledgeBase& kb) {
    std::map<std::string, Base> atoms;

    auto check_fact_section = [&](const std::vector<ProbFact>& facts, Base base) {
        std::set<Literal> seen;
        for (const ProbFact& f : facts) {
            declare_atom(atoms, f.lit.atom, base);
            if (!seen.insert(f.lit).second) {
                throw ValidationError("duplicate-literal: fact on '" + f.lit.str() +
                                      "' declared twice in " + std::string(base_name(base)));
            }
        }
    };
    check_fact_section(kb.beliefs, Base::belief);
    check_fact_section(kb.actions, Base::action);

    std::set<std::string> goal_names;
    for (const GoalDecl& g : kb.goals) {
        declare_atom(atoms, g.name, Base::goal);
        if (!goal_names.insert(g.name).second) {
            throw ValidationError("duplicate-name: goal '" + g.name + "' declared twice");
        }
        if (g.pref < 0.0 || g.pref > 1.0) {
            throw ValidationError("preference-out-of-range: goal '" + g.name + "' has pref " +
                                  std::to_string(g.pref));
        }
    }
    std::set<std::string> res_names;
    for (const ResourceDecl& r : kb.resources) {
        declare_atom(atoms, r.name, Base::resource);
        if (!res_names.insert(r.name).second) {
            throw ValidationError("duplicate-name: resource '" + r.name + "' declared twice");
        }
        if (r.amount < 0.0) {
            throw ValidationError("negative-amount: resource '" + r.name + "' has amount " +
                                  std::to_string(r.amount));
        }
    }

    std::set<std::string> rule_ids;
    for (const PlanRule& r : kb.rules) {
        if (!valid_atom(r.id)) {
            throw ValidationError("bad-token: rule id '" + r.id + "'");
        }
        if (!rule_ids.insert(r.id).second) {
            throw ValidationError("duplicate-id: rule '" + r.id + "' declared twice");
        }
        auto require_base = [&](const Literal& lit, Base base, const char* part) {
            auto it = atoms.find(lit.atom);
            if (it == atoms.end() || it->second != base) {
                throw ValidationError("undeclared-atom: rule '" + r.id + "' " + part + " '" +
                                      lit.str() + "' is not a declared " +
                                      std::string(base_name(base)) + " atom");
            }
        };
        require_base(r.head, Base::goal, "head");
        for (const Literal& b : r.beliefs) require_base(b, Base::belief, "body belief");
        for (const Literal& g : r.goals) require_base(g, Base::goal, "body goal");
        for (const Literal& a : r.actions) require_base(a, Base::action, "body action");
        if (r.beliefs.empty() && r.goals.empty() && r.actions.empty()) {
            throw ValidationError("empty-rule-body: rule '" + r.id + "'");
        }
        for (const Literal& g : r.goals) {
            if (g.atom == r.head.atom) {
                throw ValidationError("cyclic-goal-dependency: rule '" + r.id +
                                      "' head atom '" + r.head.atom + "' occurs in its own body");
            }
        }
        for (const auto& [res, amount] : r.needs) {
            if (!res_names.count(res)) {
                throw ValidationError("undeclared-atom: rule '" + r.id + "' needs unknown resource '" +
                                      res + "'");
            }
            if (amount < 0.0) {
                throw ValidationError("negative-amount: rule '" + r.id + "' needs " +
                                      std::to_string(amount) + " of '" + res + "'");
            }
        }
    }

    check_cycles(kb);

    for (const GoalDecl& g : kb.goals) {
        if (!g.pursued) continue;
        bool has_rule = std::any_of(kb.rules.begin(), kb.rules.end(), [&](const PlanRule& r) {
            return r.head == Literal{g.name, true};
        });
        if (!has_rule) {
            throw ValidationError("pursued-goal-without-rule: goal '" + g.name + "'");
        }
    }
}

void sort_canonical(KnowledgeBase& kb) {
    auto lit_less = [](const ProbFact& a, const ProbFact& b) { return a.lit < b.lit; };
    std::sort(kb.beliefs.begin(), kb.beliefs.end(), lit_less);
    std::sort(kb.actions.begin(), kb.actions.end(), lit_less);
    std::sort(kb.goals.begin(), kb.goals.end(),
              [](const GoalDecl& a, const GoalDecl& b) { return a.name < b.name; });
    std::sort(kb.resources.begin(), kb.resources.end(),
              [](const ResourceDecl& a, const ResourceDecl& b) { return a.name < b.name; });
    std::sort(kb.rules.begin(), kb.rules.end(),
              [](const PlanRule& a, const PlanRule& b) { return a.id < b.id; });
    for (PlanRule& r : kb.rules) {
        std::sort(r.beliefs.begin(), r.beliefs.end());
        std::sort(r.goals.begin(), r.goals.end());
        std::sort(r.actions.begin(), r.actions.end());
    }
}

} // namespace

std::string_view base_name(Base b) {
    switch (b) {
    case Base::belief: return "beliefs";
    case Base::action: return "actions";
    case Base::goal: return "goals";
    case Base::resource: return "resources";
    }
    return "?";
}

Literal Literal::parse(std::string_view text) {
    Literal lit;
    if (!text.empty() && text.front() == '~') {
        lit.positive = false;
        text.remove_prefix(1);
    }
    if (!valid_atom(text)) {
        throw ValidationError("bad-token: '" + std::string(text) +
                              "' does not match [a-z_][a-z0-9_]*");
    }
    lit.atom = std::string(text);
    return lit;
}

double KnowledgeBase::available_res(const std::string& name) const {
    for (const ResourceDecl& r : resources) {
        if (r.name == name) return r.amount;
    }
    throw ValidationError("undeclared-atom: unknown resource '" + name + "'");
}

double KnowledgeBase::pref(const std::string& goal) const {
    if (const GoalDecl* g = find_goal(goal)) return g->pref;
    throw ValidationError("undeclared-atom: unknown goal '" + goal + "'");
}

std::optional<Base> KnowledgeBase::base_of(const std::string& atom) const {
    for (const ProbFact& f : beliefs) {
        if (f.lit.atom == atom) return Base::belief;
    }
    for (const ProbFact& f : actions) {
        if (f.lit.atom == atom) return Base::action;
    }
    if (find_goal(atom)) return Base::goal;
    for (const ResourceDecl& r : resources) {
        if (r.name == atom) return Base::resource;
    }
    return std::nullopt;
}

const ProbFact* KnowledgeBase::find_fact(Base base, const Literal& lit) const {
    const std::vector<ProbFact>& facts = base == Base::belief ? beliefs : actions;
    for (const ProbFact& f : facts) {
        if (f.lit == lit) return &f;
    }
    return nullptr;
}

const GoalDecl* KnowledgeBase::find_goal(const std::string& name) const {
    for (const GoalDecl& g : goals) {
        if (g.name == name) return &g;
    }
    return nullptr;
}

void canonicalize_and_validate(KnowledgeBase& kb) {
    sort_canonical(kb);
    validate(kb);
}

KnowledgeBase load_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("agent spec must be a JSON object");
    reject_unknown_keys(doc, {"beliefs", "actions", "goals", "resources", "rules"}, "agent spec");

    KnowledgeBase kb;
    if (doc.contains("beliefs")) kb.beliefs = parse_facts(doc.at("beliefs"), "beliefs");
    if (doc.contains("actions")) kb.actions = parse_facts(doc.at("actions"), "actions");

    if (doc.contains("goals")) {
        const json& section = doc.at("goals");
        if (!section.is_array()) throw ParseError("expected an array for 'goals'");
        for (const auto& item : section) {
            if (!item.is_object()) throw ParseError("expected objects in 'goals'");
            reject_unknown_keys(item, {"name", "pref", "pursued"}, "goal entry");
            if (!item.contains("name") || !item.at("name").is_string()) {
                throw ParseError("missing or non-string 'name' in goal entry");
            }
            GoalDecl g;
            g.name = item.at("name").get<std::string>();
            if (!valid_atom(g.name)) {
                throw ValidationError("bad-token: '" + g.name +
                                      "' does not match [a-z_][a-z0-9_]*");
            }
            if (item.contains("pref")) g.pref = require_number(item.at("pref"), "goal pref");
            if (item.contains("pursued")) {
                if (!item.at("pursued").is_boolean()) {
                    throw ParseError("expected a boolean for goal 'pursued'");
                }
                g.pursued = item.at("pursued").get<bool>();
            }
            kb.goals.push_back(std::move(g));
        }
    }

    if (doc.contains("resources")) {
        const json& section = doc.at("resources");
        if (!section.is_array()) throw ParseError("expected an array for 'resources'");
        for (const auto& item : section) {
            if (!item.is_object()) throw ParseError("expected objects in 'resources'");
            reject_unknown_keys(item, {"name", "amount"}, "resource entry");
            if (!item.contains("name") || !item.at("name").is_string()) {
                throw ParseError("missing or non-string 'name' in resource entry");
            }
            ResourceDecl r;
            r.name = item.at("name").get<std::string>();
            if (!valid_atom(r.name)) {
                throw ValidationError("bad-token: '" + r.name +
                                      "' does not match [a-z_][a-z0-9_]*");
            }
            if (item.contains("amount")) {
                r.amount = require_number(item.at("amount"), "resource amount");
            }
            kb.resources.push_back(std::move(r));
        }
    }

    if (doc.contains("rules")) {
        const json& section = doc.at("rules");
        if (!section.is_array()) throw ParseError("expected an array for 'rules'");
        for (const auto& item : section) {
            if (!item.is_object()) throw ParseError("expected objects in 'rules'");
            reject_unknown_keys(item, {"id", "head", "beliefs", "goals", "actions", "l", "u", "needs"},
                                "rule entry");
            if (!item.contains("id") || !item.at("id").is_string()) {
                throw ParseError("missing or non-string 'id' in rule entry");
            }
            if (!item.contains("head") || !item.at("head").is_string()) {
                throw ParseError("missing or non-string 'head' in rule entry");
            }
            PlanRule r;
            r.id = item.at("id").get<std::string>();
            r.head = Literal::parse(item.at("head").get<std::string>());
            if (item.contains("beliefs")) r.beliefs = parse_literal_list(item.at("beliefs"), "rule beliefs");
            if (item.contains("goals")) r.goals = parse_literal_list(item.at("goals"), "rule goals");
            if (item.contains("actions")) r.actions = parse_literal_list(item.at("actions"), "rule actions");
            r.interval = parse_interval(item, "rule '" + r.id + "'");
            if (item.contains("needs")) {
                const json& needs = item.at("needs");
                if (!needs.is_object()) throw ParseError("expected an object for rule 'needs'");
                for (const auto& [res, amount] : needs.items()) {
                    r.needs[res] = require_number(amount, "rule need '" + res + "'");
                }
            }
            kb.rules.push_back(std::move(r));
        }
    }

    canonicalize_and_validate(kb);
    return kb;
}

KnowledgeBase load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spec(buf.str());
}

std::string serialize(const KnowledgeBase& kb) {
    ordered_json doc;
    auto facts = [](const std::vector<ProbFact>& fs) {
        ordered_json arr = ordered_json::array();
        for (const ProbFact& f : fs) {
            arr.push_back({{"lit", f.lit.str()}, {"l", f.interval.l}, {"u", f.interval.u}});
        }
        return arr;
    };
    doc["beliefs"] = facts(kb.beliefs);
    doc["actions"] = facts(kb.actions);
    doc["goals"] = ordered_json::array();
    for (const GoalDecl& g : kb.goals) {
        doc["goals"].push_back({{"name", g.name}, {"pref", g.pref}, {"pursued", g.pursued}});
    }
    doc["resources"] = ordered_json::array();
    for (const ResourceDecl& r : kb.resources) {
        doc["resources"].push_back({{"name", r.name}, {"amount", r.amount}});
    }
    doc["rules"] = ordered_json::array();
    for (const PlanRule& r : kb.rules) {
        auto lit_array = [](const std::vector<Literal>& ls) {
            ordered_json arr = ordered_json::array();
            for (const Literal& l : ls) arr.push_back(l.str());
            return arr;
        };
        ordered_json needs = ordered_json::object();
        for (const auto& [res, amount] : r.needs) needs[res] = amount;
        doc["rules"].push_back({{"id", r.id},
                                {"head", r.head.str()},
                                {"beliefs", lit_array(r.beliefs)},
                                {"goals", lit_array(r.goals)},
                                {"actions", lit_array(r.actions)},
                                {"l", r.interval.l},
                                {"u", r.interval.u},
                                {"needs", needs}});
    }
    return doc.dump(2) + "\n";
}

} // namespace goalsel
