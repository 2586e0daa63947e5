#include "goalsel/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "goalsel/errors.hpp"

namespace goalsel {

namespace {

constexpr double kRepresentationSlack = 1e-12;

double clamp01(double v) {
    if (v < 0.0 && v >= -kRepresentationSlack) return 0.0;
    if (v > 1.0 && v <= 1.0 + kRepresentationSlack) return 1.0;
    return v;
}

} // namespace

Interval Interval::checked(double l, double u) {
    l = clamp01(l);
    u = clamp01(u);
    if (!(l >= 0.0 && u <= 1.0 && l <= u + kRepresentationSlack)) {
        throw ValidationError("interval-out-of-range: [" + std::to_string(l) +
                              ", " + std::to_string(u) + "] is not a probability interval");
    }
    if (l > u) l = u;
    return Interval{l, u};
}

Interval conjoin(std::span<const Interval> premises) {
    if (premises.empty()) {
        throw std::invalid_argument("conjoin requires at least one premise interval");
    }
    double sum_l = 0.0;
    double min_u = 1.0;
    for (const Interval& p : premises) {
        sum_l += p.l;
        min_u = std::min(min_u, p.u);
    }
    double l = sum_l - (static_cast<double>(premises.size()) - 1.0);
    if (l < 0.0) l = 0.0;
    return Interval::checked(l, min_u);
}

Interval modus_ponens(Interval rule, Interval premise) {
    double l = rule.l * premise.l;
    double u = 1.0 - premise.l + rule.u * premise.l;
    return Interval::checked(l, u);
}

} // namespace goalsel
