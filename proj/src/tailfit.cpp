#include "dbo/tailfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dbo/fitting.hpp"

namespace dbo {

namespace {

double median_of(std::vector<double> v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
}

} // namespace

TailFitReport tail_exponent_fit(const PhysicalField& u, const TailWindowPolicy& policy) {
    const double L = u.grid->half_length;
    TailFitReport rep;
    rep.x1 = policy.x1 > 0.0 ? policy.x1 : L / 8.0;
    rep.x2 = policy.x2 > 0.0 ? policy.x2 : L / 2.0;
    rep.wraparound_margin = L - rep.x2;
    if (rep.x2 > 0.5 * L + 1e-12) throw std::invalid_argument("window breaches wrap-around guard");
    if (!(rep.x1 > 0.0 && rep.x2 > rep.x1)) throw std::invalid_argument("bad fit window");

    double umax = 0.0;
    for (double v : u.samples) umax = std::max(umax, std::abs(v));
    const double floor_val =
        policy.noise_floor_factor * std::numeric_limits<double>::epsilon() * umax;

    // Parity projections about x = 0. The box tail is a sum of a leading
    // power of one parity and contaminants of mostly opposite parity;
    // fitting the dominant projection suppresses the cross terms.
    const int n = u.grid->n_points;
    std::vector<double> xs, even, odd;
    for (int j = 0; j < n; ++j) {
        const double x = u.grid->x(j);
        if (x < rep.x1 || x > rep.x2) continue;
        const int jm = static_cast<int>(std::llround((-x + L) / u.grid->dx));
        if (jm < 0 || jm >= n) continue;
        xs.push_back(x);
        even.push_back(0.5 * (u.samples[j] + u.samples[jm]));
        odd.push_back(0.5 * (u.samples[j] - u.samples[jm]));
    }
    if (xs.size() < 8) {
        rep.rejected = true;
        rep.reason = "window too small";
        return rep;
    }

    std::vector<double> even_mag(even.size()), odd_mag(odd.size());
    for (size_t i = 0; i < even.size(); ++i) {
        even_mag[i] = std::abs(even[i]);
        odd_mag[i] = std::abs(odd[i]);
    }
    const double med_even = median_of(even_mag);
    const double med_odd = median_of(odd_mag);
    const std::vector<double>& mag = (med_even >= med_odd) ? even_mag : odd_mag;
    const double med = std::max(med_even, med_odd);

    if (med < floor_val) {
        rep.rejected = true;
        rep.reason = "amplitude below noise floor in window";
        return rep;
    }

    // a projection may cross zero inside the window; such points are
    // log-fit outliers, not tail information
    std::vector<double> fx, fy;
    for (size_t i = 0; i < mag.size(); ++i) {
        if (mag[i] < 1e-3 * med) continue;
        fx.push_back(xs[i]);
        fy.push_back(mag[i]);
    }
    if (fx.size() < 8) {
        rep.rejected = true;
        rep.reason = "window too noisy";
        return rep;
    }
    const LineFit f = loglog_fit(fx, fy);
    rep.exponent = f.slope;
    rep.residual = f.rms_residual;
    return rep;
}

} // namespace dbo
