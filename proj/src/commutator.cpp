#include "dbo/commutator.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/multiplier.hpp"
#include "dbo/norms.hpp"
#include "dbo/samples.hpp"
#include "dbo/transform.hpp"

namespace dbo {

PhysicalField commutator_apply(double gamma, const PhysicalField& phi, const PhysicalField& f) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0,1)");
    if (!same_grid(phi.grid, f.grid)) throw std::invalid_argument("mismatched grids");
    const PhysicalField df = frac_deriv(f, gamma);
    return frac_deriv(pointwise(phi, f), gamma) - pointwise(phi, df);
}

namespace {

double ratio_for(double gamma, const PhysicalField& phi, const PhysicalField& f) {
    const double num = l2_norm(commutator_apply(gamma, phi, f));
    const double den = sobolev_norm(phi, 2.0) * l2_norm(f);
    return den > 0.0 ? num / den : 0.0;
}

} // namespace

CommutatorAuditReport commutator_bound_audit(double gamma, int n_samples, uint64_t seed,
                                             int n_coarse, int n_fine, double half_length) {
    CommutatorAuditReport rep;
    rep.gamma = gamma;
    rep.n_samples = n_samples;

    auto gc = make_grid(n_coarse, half_length);
    auto gf = make_grid(n_fine, half_length);
    // products of band-limited factors must stay resolved on the coarse grid
    const int k_max = n_coarse / 8;

    SampleRng rng(seed);
    for (int s = 0; s < n_samples; ++s) {
        auto [phi_c, phi_f] = band_limited_pair(gc, gf, k_max, rng);
        auto [f_c, f_f] = band_limited_pair(gc, gf, k_max, rng);
        rep.max_ratio_coarse = std::max(rep.max_ratio_coarse, ratio_for(gamma, phi_c, f_c));
        rep.max_ratio_fine = std::max(rep.max_ratio_fine, ratio_for(gamma, phi_f, f_f));
    }
    rep.refinement_spread =
        std::abs(rep.max_ratio_fine - rep.max_ratio_coarse) / rep.max_ratio_coarse;
    return rep;
}

} // namespace dbo
