#ifndef GOALSEL_STRENGTH_HPP
#define GOALSEL_STRENGTH_HPP

#include "goalsel/arguments.hpp"
#include "goalsel/kb.hpp"

namespace goalsel {

// Absolute tolerance for every scalar comparison in preferences and ties.
inline constexpr double kCompareTol = 1e-9;

inline bool approx_eq(double a, double b) {
    return a - b <= kCompareTol && b - a <= kCompareTol;
}
inline bool definitely_gt(double a, double b) {
    return a - b > kCompareTol;
}

// Logical strength of a claim interval [l, u]:
//   lo = (l + u) / 2    location: central estimate
//   pr = 1 - (u - l)    precision: complement of the width
//   co = pr * lo        combined degree of certainty
struct StrengthVector {
    double co = 0.0;
    double pr = 0.0;
    double lo = 0.0;
};

StrengthVector logical_strength(Interval claim);
StrengthVector logical_strength(const Argument& a);

// Scalar plan cost: the sum of every aggregated resource need.
double cost(const Argument& a);

// UTILITY(A) = sum of preferences over the distinct goal atoms in the
// argument's support, plus the combined strength co, minus the cost.
struct UtilityValue {
    double value = 0.0;
    double pref_sum = 0.0;
    double comb = 0.0;
    double cost = 0.0;
};

UtilityValue utility(const Argument& a, const KnowledgeBase& kb);

enum class Ordering { a_preferred, b_preferred, tie };

// Which of the two co-equal tie-break clauses is tried first.
enum class TieBreak { precision_first, location_first };

// Preferred-argument order over strength vectors:
//   co decides; on a co tie, equal-lo pairs are decided by pr and equal-pr
//   pairs by lo; a co tie where pr and lo both differ stays a tie.
Ordering prefer_vectors(const StrengthVector& a, const StrengthVector& b,
                        TieBreak tb = TieBreak::precision_first);

Ordering prefer_logical(const Argument& a, const Argument& b,
                        TieBreak tb = TieBreak::precision_first);

// Utility order: strictly greater value wins, within tolerance it is a tie.
Ordering prefer_utility(const Argument& a, const Argument& b, const KnowledgeBase& kb);

} // namespace goalsel

#endif
