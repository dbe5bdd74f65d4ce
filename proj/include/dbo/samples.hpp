#ifndef DBO_SAMPLES_HPP
#define DBO_SAMPLES_HPP

#include <cstdint>
#include <vector>

#include "dbo/field.hpp"

namespace dbo {

/// Deterministic generator (xorshift-free splitmix/mt19937_64 raw draws
/// mapped explicitly) so that identical seeds give identical fields on
/// every platform.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next_u64();
    double uniform();                 // [0, 1)
    double uniform(double a, double b);
    double normal();                  // Box-Muller

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Random band-limited field: real field with random coefficients on
/// modes 1 <= |k| <= k_max, tapered, unit L^2 norm.
PhysicalField random_band_limited(GridPtr g, int k_max, SampleRng& rng);

/// Random Gaussian bump a * exp(-(x-c)^2 / (2 w^2)) with moderate ranges;
/// decays well inside the box.
PhysicalField random_gaussian_bump(GridPtr g, SampleRng& rng);

/// Same continuum band-limited function realized on two grids (shared
/// spectral draw); used by refinement-stability audits.
std::pair<PhysicalField, PhysicalField> band_limited_pair(GridPtr coarse, GridPtr fine, int k_max,
                                                          SampleRng& rng);

} // namespace dbo

#endif
