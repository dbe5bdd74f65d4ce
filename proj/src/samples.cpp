#include "dbo/samples.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/norms.hpp"
#include "dbo/transform.hpp"

namespace dbo {

uint64_t SampleRng::next_u64() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SampleRng::uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

double SampleRng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double SampleRng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

namespace {

// Hermitian coefficient draw for modes 1..k_max with a smooth taper.
std::vector<cplx> draw_modes(int k_max, SampleRng& rng) {
    std::vector<cplx> c(k_max + 1, cplx(0.0, 0.0));
    for (int k = 1; k <= k_max; ++k) {
        const double taper = std::exp(-2.0 * (double(k) / k_max) * (double(k) / k_max));
        c[k] = taper * cplx(rng.normal(), rng.normal());
    }
    return c;
}

PhysicalField realize(GridPtr g, const std::vector<cplx>& modes) {
    SpectralField F = SpectralField::zero(g);
    const int n = g->n_points;
    const int k_max = static_cast<int>(modes.size()) - 1;
    if (k_max >= n / 2) throw std::invalid_argument("band limit exceeds grid");
    // continuum coefficient c_k corresponds to u_hat(xi_k) = 2L * c_k
    for (int k = 1; k <= k_max; ++k) {
        F.coefficients[g->mode_index(k)] = 2.0 * g->half_length * modes[k];
        F.coefficients[g->mode_index(-k)] = 2.0 * g->half_length * std::conj(modes[k]);
    }
    PhysicalField f = inverse_transform(F);
    const double nrm = l2_norm(f);
    if (nrm > 0.0) f = (1.0 / nrm) * f;
    return f;
}

} // namespace

PhysicalField random_band_limited(GridPtr g, int k_max, SampleRng& rng) {
    return realize(std::move(g), draw_modes(k_max, rng));
}

PhysicalField random_gaussian_bump(GridPtr g, SampleRng& rng) {
    const double L = g->half_length;
    const double a = rng.uniform(0.5, 1.5);
    const double c = rng.uniform(-L / 8.0, L / 8.0);
    const double w = rng.uniform(0.5, 2.0);
    return PhysicalField::from_function(
        g, [=](double x) { return a * std::exp(-(x - c) * (x - c) / (2.0 * w * w)); });
}

std::pair<PhysicalField, PhysicalField> band_limited_pair(GridPtr coarse, GridPtr fine, int k_max,
                                                          SampleRng& rng) {
    if (coarse->half_length != fine->half_length)
        throw std::invalid_argument("pair requires a shared box");
    const auto modes = draw_modes(k_max, rng);
    return {realize(coarse, modes), realize(fine, modes)};
}

} // namespace dbo
