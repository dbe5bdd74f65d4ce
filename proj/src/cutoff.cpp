#include "dbo/cutoff.hpp"

#include <cmath>

namespace dbo {

namespace {
// On the blend region, chi = exp(-s^2/(1-s^2)) with s = |xi| - 1 in (0,1);
// this is the stated exp(1 - 1/(1-s^2)) rewritten.
double blend(double s) { return std::exp(-s * s / (1.0 - s * s)); }
} // namespace

double CutoffFunction::value(double xi) const {
    const double t = std::abs(xi);
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
    const double s = t - 1.0;
    if (s >= 1.0 - 1e-9) return 0.0;
    return blend(s);
}

double CutoffFunction::deriv(double xi) const {
    const double t = std::abs(xi);
    if (t <= 1.0 || t >= 2.0) return 0.0;
    const double s = t - 1.0;
    if (s >= 1.0 - 1e-9) return 0.0;
    const double om = 1.0 - s * s;
    const double dphi = -2.0 * s / (om * om); // d/ds of -s^2/(1-s^2)
    return blend(s) * dphi * (xi > 0.0 ? 1.0 : -1.0);
}

double CutoffFunction::deriv2(double xi) const {
    const double t = std::abs(xi);
    if (t <= 1.0 || t >= 2.0) return 0.0;
    const double s = t - 1.0;
    if (s >= 1.0 - 1e-9) return 0.0;
    const double om = 1.0 - s * s;
    const double dphi = -2.0 * s / (om * om);
    const double d2phi = -2.0 / (om * om) - 8.0 * s * s / (om * om * om);
    return blend(s) * (dphi * dphi + d2phi);
}

double CutoffFunction::deriv_sup() const {
    double m = 0.0;
    for (int i = 0; i <= 20000; ++i) {
        const double xi = 1.0 + i * (1.0 / 20000.0);
        m = std::max(m, std::abs(deriv(xi)));
    }
    return m;
}

} // namespace dbo
