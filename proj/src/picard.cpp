#include "dbo/picard.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/norms.hpp"
#include "dbo/transform.hpp"

namespace dbo {

PicardResult picard_crosscheck(const PhysicalField& phi, const SemigroupSpec& spec, double T,
                               int iterations, int nodes) {
    if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
    if (nodes < 3) throw std::invalid_argument("need at least 3 tau nodes");
    const double h = T / (nodes - 1);
    const TimeStepperSpec flux_spec(h); // dealias mask shared with the marching scheme

    const SpectralField phi_hat = forward_transform(phi);
    const int n = phi_hat.grid->n_points;

    // U(t_i) phi, precomputed per node
    std::vector<SpectralField> lin;
    lin.reserve(nodes);
    for (int i = 0; i < nodes; ++i) lin.push_back(linear_evolve(phi_hat, spec, i * h));

    std::vector<SpectralField> u = lin; // zeroth iterate
    PicardResult res;

    for (int it = 0; it < iterations; ++it) {
        // z_hat at every node for the current iterate (flux = -z_hat)
        std::vector<SpectralField> flux;
        flux.reserve(nodes);
        for (int i = 0; i < nodes; ++i) flux.push_back(nonlinear_flux(u[i], flux_spec));

        std::vector<SpectralField> next;
        next.reserve(nodes);
        double dist = 0.0;
        for (int i = 0; i < nodes; ++i) {
            SpectralField acc = lin[i];
            if (i > 0) {
                // trapezoid over tau in [0, t_i] of U(t_i - tau) N(u(tau))
                for (int j = 0; j <= i; ++j) {
                    const double w = (j == 0 || j == i) ? 0.5 * h : h;
                    const double dt_prop = (i - j) * h;
                    for (int m = 0; m < n; ++m) {
                        const double xi = acc.grid->frequencies[m];
                        acc.coefficients[m] +=
                            w * spec.psi(xi, dt_prop) * flux[j].coefficients[m];
                    }
                }
            }
            dist = std::max(dist, l2_norm(acc - u[i]));
            next.push_back(std::move(acc));
        }
        res.iterate_distances.push_back(dist);
        u = std::move(next);
        if (res.iterate_distances.size() >= 2 &&
            res.iterate_distances.back() > res.iterate_distances[res.iterate_distances.size() - 2])
            throw std::runtime_error("outside contraction regime");
    }
    res.contracted = res.iterate_distances.size() < 2 ||
                     res.iterate_distances.back() <= res.iterate_distances.front();

    res.solution = inverse_transform(u[nodes - 1]);

    // marching cross-check at the same dealias setting
    MarchOptions opts;
    opts.T = T;
    const MarchResult m1 = march(phi, spec, TimeStepperSpec(h), opts);
    const MarchResult m2 = march(phi, spec, TimeStepperSpec(0.5 * h), opts);
    const PhysicalField& at_T1 = m1.snapshots.back();
    const PhysicalField& at_T2 = m2.snapshots.back();
    res.marching_self_error = l2_norm(at_T1 - at_T2);
    res.discrepancy_vs_marching = l2_norm(res.solution - at_T1);
    return res;
}

} // namespace dbo
