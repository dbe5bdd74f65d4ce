#include "dbo/smoothing.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/fitting.hpp"
#include "dbo/norms.hpp"

namespace dbo {

SpectralField spectral_critical_profile(GridPtr g, double s, double eps) {
    return SpectralField::from_profile(g, [s, eps](double xi) {
        return cplx(std::pow(1.0 + xi * xi, -0.5 * (s + 0.5 + eps)), 0.0);
    });
}

SmoothingFitReport smoothing_rate_fit(const SemigroupSpec& spec, double s, double lambda,
                                      const SpectralField& profile, double t_lo, double t_hi,
                                      int n_times) {
    if (!(lambda >= 0.0 && lambda < spec.a + 1.0))
        throw std::invalid_argument("lambda must lie in [0, a+1)");
    if (!(t_hi > t_lo && t_lo > 0.0)) throw std::invalid_argument("bad time window");

    // reject profiles whose spectral tail is lighter than criticality: the
    // H^{s+lambda} mass then converges and no rate is observable. A tail
    // sunk to the transform's roundoff floor counts as light.
    {
        const auto& g = *profile.grid;
        const double xi_top = std::abs(g.frequencies.front());
        double peak = 0.0;
        for (const cplx& c : profile.coefficients) peak = std::max(peak, std::abs(c));
        std::vector<double> xs, ys;
        int sunk = 0, in_band = 0;
        for (int i = 0; i < g.n_points; ++i) {
            const double xi = g.frequencies[i];
            if (xi < 0.25 * xi_top || xi > 0.9 * xi_top) continue;
            ++in_band;
            const double mag = std::abs(profile.coefficients[i]);
            if (!(mag > 1e-13 * peak)) {
                ++sunk;
                continue;
            }
            xs.push_back(std::sqrt(1.0 + xi * xi));
            ys.push_back(mag);
        }
        bool too_light = xs.size() < 4 || sunk > in_band / 2;
        if (!too_light) {
            const LineFit tail = loglog_fit(xs, ys);
            too_light = tail.slope < -(s + lambda + 0.5) - 0.25;
        }
        if (too_light)
            throw std::invalid_argument("rate unobservable: profile tail lighter than critical");
    }

    SmoothingFitReport rep;
    rep.a = spec.a;
    rep.s = s;
    rep.lambda = lambda;
    rep.expected_slope = -lambda / (1.0 + spec.a);
    for (int i = 0; i < n_times; ++i) {
        const double t = t_lo * std::pow(t_hi / t_lo, double(i) / (n_times - 1));
        const SpectralField ut = linear_evolve(profile, spec, t);
        rep.times.push_back(t);
        rep.norms.push_back(sobolev_norm(ut, s + lambda));
    }
    if (lambda == 0.0) {
        // no smoothing requested; report the (near-zero) slope directly
        const LineFit f = loglog_fit(rep.times, rep.norms);
        rep.fitted_slope = f.slope;
        rep.residual = f.rms_residual;
        return rep;
    }
    const LineFit f = loglog_fit(rep.times, rep.norms);
    rep.fitted_slope = f.slope;
    rep.residual = f.rms_residual;
    return rep;
}

} // namespace dbo
