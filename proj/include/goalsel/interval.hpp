#ifndef GOALSEL_INTERVAL_HPP
#define GOALSEL_INTERVAL_HPP

#include <span>

namespace goalsel {

// Closed probability interval [l, u] with 0 <= l <= u <= 1.
struct Interval {
    double l = 0.0;
    double u = 0.0;

    double width() const { return u - l; }
    bool operator==(const Interval&) const = default;

    // Throws ValidationError unless 0 <= l <= u <= 1; values off by at most
    // 1e-12 (representation error from upstream arithmetic) are clamped.
    static Interval checked(double l, double u);
};

// Conjunction of premise probabilities without an independence assumption:
// the tightest interval consistent with any joint distribution,
//   l = max(0, sum(l_i) - (n - 1)),  u = min(u_i).
// Commutative; [1,1] is the identity. Throws std::invalid_argument on an
// empty list.
Interval conjoin(std::span<const Interval> premises);

// Propagation through an uncertain rule: given the rule's conditional
// interval and the combined premise interval, the conclusion lies in
//   [l * l', 1 - l' + u * l']
// where [l,u] is the rule and [l',u'] the premise. Output is always a valid
// interval for valid inputs.
Interval modus_ponens(Interval rule, Interval premise);

} // namespace goalsel

#endif
