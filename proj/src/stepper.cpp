#include "dbo/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dbo/norms.hpp"
#include "dbo/transform.hpp"

namespace dbo {

TimeStepperSpec::TimeStepperSpec(double dt_, double dealias) : dt(dt_), dealias_fraction(dealias) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(dealias_fraction > 0.5 && dealias_fraction <= 1.0))
        throw std::invalid_argument("dealias_fraction must lie in (1/2, 1]");
}

namespace {

void apply_mask(SpectralField& F, double fraction) {
    const int n = F.grid->n_points;
    const int k_keep = static_cast<int>(std::floor(fraction * (n / 2)));
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        if (std::abs(k) > k_keep) F.coefficients[i] = cplx(0.0, 0.0);
    }
}

} // namespace

SpectralField nonlinear_flux(const SpectralField& u_hat, const TimeStepperSpec& stepper) {
    SpectralField masked = u_hat;
    apply_mask(masked, stepper.dealias_fraction);
    PhysicalField u = inverse_transform(masked);
    for (double& v : u.samples) v *= v;
    SpectralField w = forward_transform(u);
    apply_mask(w, stepper.dealias_fraction);
    for (size_t i = 0; i < w.coefficients.size(); ++i) {
        const double xi = w.grid->frequencies[i];
        w.coefficients[i] *= cplx(0.0, -0.5 * xi);
    }
    return w;
}

SpectralField nonlinear_step(const SpectralField& u_hat, const SemigroupSpec& spec,
                             const TimeStepperSpec& stepper) {
    const double dt = stepper.dt;
    const SpectralField n0 = nonlinear_flux(u_hat, stepper);

    SpectralField predictor = u_hat;
    for (size_t i = 0; i < predictor.coefficients.size(); ++i) {
        const double xi = predictor.grid->frequencies[i];
        predictor.coefficients[i] =
            spec.psi(xi, dt) * (u_hat.coefficients[i] + dt * n0.coefficients[i]);
    }
    const SpectralField n1 = nonlinear_flux(predictor, stepper);

    SpectralField out = u_hat;
    for (size_t i = 0; i < out.coefficients.size(); ++i) {
        const double xi = out.grid->frequencies[i];
        const cplx prop = spec.psi(xi, dt);
        out.coefficients[i] = prop * u_hat.coefficients[i] +
                              0.5 * dt * (prop * n0.coefficients[i] + n1.coefficients[i]);
    }
    return out;
}

PhysicalField nonlinear_step(const PhysicalField& u, const SemigroupSpec& spec,
                             const TimeStepperSpec& stepper) {
    return inverse_transform(nonlinear_step(forward_transform(u), spec, stepper));
}

namespace {

double h1_norm(const SpectralField& u) {
    double acc = 0.0;
    for (size_t i = 0; i < u.coefficients.size(); ++i) {
        const double xi = u.grid->frequencies[i];
        acc += (1.0 + xi * xi) * std::norm(u.coefficients[i]);
    }
    return std::sqrt(acc * u.grid->dxi() / (2.0 * M_PI));
}

double dissipation_rate(const SpectralField& u, double a) {
    double acc = 0.0;
    for (size_t i = 0; i < u.coefficients.size(); ++i) {
        const double xi = u.grid->frequencies[i];
        acc += std::pow(std::abs(xi), 1.0 + a) * std::norm(u.coefficients[i]);
    }
    return 2.0 * acc * u.grid->dxi() / (2.0 * M_PI);
}

bool finite(const SpectralField& u) {
    for (const cplx& c : u.coefficients)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

} // namespace

MarchResult march(const PhysicalField& phi, const SemigroupSpec& spec,
                  const TimeStepperSpec& stepper, const MarchOptions& opts) {
    if (!(opts.T > 0.0)) throw std::invalid_argument("T must be positive");
    MarchResult res;

    std::vector<double> wanted = opts.snapshot_times;
    wanted.push_back(0.0);
    wanted.push_back(opts.T);
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    SpectralField u = forward_transform(phi);
    const double h1_0 = h1_norm(u);
    const long n_steps = std::lround(opts.T / stepper.dt);
    const double dt = stepper.dt;

    auto record = [&](double t, const SpectralField& cur) {
        if (opts.record_series) {
            res.series.times.push_back(t);
            res.series.l2_norm.push_back(l2_norm(cur));
            const cplx zm = cur.zero_mode();
            res.series.mean_re.push_back(zm.real());
            res.series.mean_im.push_back(zm.imag());
            res.series.first_moment.push_back(spectral_first_moment(cur));
            res.series.dissipation_rate.push_back(dissipation_rate(cur, spec.a));
            // d/dt of the box moment splits into the (exactly computable)
            // linear pairing and the flux pairing
            SpectralField lin = cur;
            for (size_t i = 0; i < lin.coefficients.size(); ++i) {
                const double xi = lin.grid->frequencies[i];
                const cplx m_lin(std::pow(std::abs(xi), 1.0 + spec.a), std::abs(xi) * xi);
                lin.coefficients[i] *= -m_lin;
            }
            res.series.moment_rate_linear.push_back(spectral_first_moment(lin));
            res.series.moment_rate_flux.push_back(
                spectral_first_moment(nonlinear_flux(cur, stepper)));
        }
    };

    size_t next_snap = 0;
    auto snap_if_due = [&](double t, const SpectralField& cur) {
        while (next_snap < wanted.size() && wanted[next_snap] <= t + 0.25 * dt) {
            res.snapshot_times.push_back(wanted[next_snap]);
            res.snapshots.push_back(inverse_transform(cur));
            ++next_snap;
        }
    };

    try {
        record(0.0, u);
    } catch (const std::invalid_argument&) {
        res.aborted = true;
        res.last_valid_time = 0.0;
        res.guard_reason = "non-finite values";
        return res;
    }
    snap_if_due(0.0, u);

    for (long s = 1; s <= n_steps; ++s) {
        // overflow inside the quadratic flux surfaces as a transform error;
        // the guard owns that case
        try {
            u = nonlinear_step(u, spec, stepper);
        } catch (const std::invalid_argument&) {
            res.aborted = true;
            res.last_valid_time = (s - 1) * dt;
            res.guard_reason = "non-finite values";
            return res;
        }
        const double t = s * dt;
        if (!finite(u) || h1_norm(u) > opts.h1_blowup_factor * std::max(h1_0, 1e-300)) {
            res.aborted = true;
            res.last_valid_time = (s - 1) * dt;
            res.guard_reason = finite(u) ? "h1 blow-up guard" : "non-finite values";
            return res;
        }
        record(t, u);
        snap_if_due(t, u);
    }
    res.last_valid_time = n_steps * dt;
    return res;
}

} // namespace dbo
