#ifndef GOALSEL_REPORT_HPP
#define GOALSEL_REPORT_HPP

#include <string>

#include "goalsel/postulates.hpp"
#include "goalsel/semantics.hpp"

namespace goalsel {

// Deterministic renderings: identical inputs produce byte-identical output.

std::string arguments_json(const SelectionReport& r, const KnowledgeBase& kb);
std::string arguments_text(const SelectionReport& r, const KnowledgeBase& kb);

std::string attacks_json(const SelectionReport& r);
std::string attacks_text(const SelectionReport& r);

std::string selection_json(const SelectionReport& r, const KnowledgeBase& kb);
std::string selection_text(const SelectionReport& r, const KnowledgeBase& kb);

std::string postulates_json(const PostulateReport& p, const SelectionReport& r);
std::string postulates_text(const PostulateReport& p, const SelectionReport& r);

// Graphviz digraph of the filtered framework; nodes carry the strength
// vector as "id\n<co,pr,lo>".
std::string export_dot(const SelectionReport& r);

} // namespace goalsel

#endif
