#include "dbo/conserved.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/norms.hpp"
#include "dbo/transform.hpp"

namespace dbo {

double linear_moment_rate(const SpectralField& u_hat, const SemigroupSpec& spec) {
    SpectralField lin = u_hat;
    for (size_t i = 0; i < lin.coefficients.size(); ++i) {
        const double xi = lin.grid->frequencies[i];
        const cplx m_lin(std::pow(std::abs(xi), 1.0 + spec.a), std::abs(xi) * xi);
        lin.coefficients[i] *= -m_lin;
    }
    return spectral_first_moment(lin);
}

DiagnosticsSeries conserved_quantities(const MarchResult& run,
                                       const std::vector<double>& s_list,
                                       const std::vector<double>& r_list, double trunc_radius) {
    const StepSeries& st = run.series;
    if (st.times.size() < 2)
        throw std::invalid_argument("conserved_quantities needs a recorded step series");

    DiagnosticsSeries out;
    out.times = st.times;
    out.l2_norm = st.l2_norm;
    out.mean_re = st.mean_re;
    out.mean_im = st.mean_im;
    out.first_moment = st.first_moment;
    out.weighted_truncation_radius = trunc_radius;

    const size_t n = st.times.size();
    out.dissipation_residual.assign(n, 0.0);
    out.moment_residual.assign(n, 0.0);
    out.moment_residual_raw.assign(n, 0.0);
    out.moment_truncation.assign(n, 0.0);

    for (size_t i = 0; i + 1 < n; ++i) {
        const double dt = st.times[i + 1] - st.times[i];
        if (!(dt > 0.0)) continue;

        // d/dt ||u||^2 against the spectral dissipation rate (trapezoid)
        const double dE = (st.l2_norm[i + 1] * st.l2_norm[i + 1] -
                           st.l2_norm[i] * st.l2_norm[i]) / dt;
        const double rate = -0.5 * (st.dissipation_rate[i] + st.dissipation_rate[i + 1]);
        out.dissipation_residual[i] = std::abs(dE - rate);

        const double dM = (st.first_moment[i + 1] - st.first_moment[i]) / dt;
        const double half_l2 =
            0.25 * (st.l2_norm[i] * st.l2_norm[i] + st.l2_norm[i + 1] * st.l2_norm[i + 1]);
        out.moment_residual_raw[i] = std::abs(dM - half_l2);

        const double box_rate = 0.5 * (st.moment_rate_linear[i] + st.moment_rate_flux[i] +
                                       st.moment_rate_linear[i + 1] + st.moment_rate_flux[i + 1]);
        out.moment_residual[i] = std::abs(dM - box_rate);
        out.moment_truncation[i] = std::abs(box_rate - half_l2);
    }
    // carry the last interval's residuals to the final slot for plotting
    if (n >= 2) {
        out.dissipation_residual[n - 1] = out.dissipation_residual[n - 2];
        out.moment_residual[n - 1] = out.moment_residual[n - 2];
        out.moment_residual_raw[n - 1] = out.moment_residual_raw[n - 2];
        out.moment_truncation[n - 1] = out.moment_truncation[n - 2];
    }

    // optional norms on the stored snapshots
    if (!s_list.empty() || !r_list.empty()) {
        for (double s : s_list) out.hs_norms[s] = {};
        for (double r : r_list) out.weighted_norms[r] = {};
        for (const PhysicalField& snap : run.snapshots) {
            if (!s_list.empty()) {
                const SpectralField sh = forward_transform(snap);
                for (double s : s_list) out.hs_norms[s].push_back(sobolev_norm(sh, s));
            }
            for (double r : r_list)
                out.weighted_norms[r].push_back(weighted_norm(
                    snap, r, trunc_radius > 0.0 ? trunc_radius : snap.grid->half_length));
        }
    }
    return out;
}

ConservationChecks conservation_checks(const DiagnosticsSeries& series) {
    ConservationChecks c;
    const size_t n = series.times.size();
    const double m0 = std::hypot(series.mean_re[0], series.mean_im[0]);
    for (size_t i = 0; i < n; ++i) {
        const double drift = std::hypot(series.mean_re[i] - series.mean_re[0],
                                        series.mean_im[i] - series.mean_im[0]);
        c.mean_drift_rel = std::max(c.mean_drift_rel, m0 > 0.0 ? drift / m0 : drift);
        if (i > 0 && series.l2_norm[i] > series.l2_norm[i - 1]) c.l2_monotone = false;
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        c.max_moment_residual = std::max(c.max_moment_residual, series.moment_residual[i]);
        c.max_moment_residual_raw =
            std::max(c.max_moment_residual_raw, series.moment_residual_raw[i]);
        c.max_dissipation_residual =
            std::max(c.max_dissipation_residual, series.dissipation_residual[i]);
    }
    return c;
}

} // namespace dbo
