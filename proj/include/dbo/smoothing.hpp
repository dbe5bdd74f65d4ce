#ifndef DBO_SMOOTHING_HPP
#define DBO_SMOOTHING_HPP

#include <vector>

#include "dbo/field.hpp"
#include "dbo/semigroup.hpp"

namespace dbo {

struct SmoothingFitReport {
    double a = 0.0;
    double s = 0.0;
    double lambda = 0.0;
    double fitted_slope = 0.0;
    double expected_slope = 0.0; // -lambda/(1+a)
    double residual = 0.0;
    std::vector<double> times;
    std::vector<double> norms;
};

/// Log-log slope of ||U(t) phi||_{H^{s+lambda}} over the window for the
/// spectrally critical profile phi_hat = <xi>^{-s-1/2-eps}. Profiles whose
/// tail decays faster than criticality are rejected with
/// std::invalid_argument("rate unobservable").
SmoothingFitReport smoothing_rate_fit(const SemigroupSpec& spec, double s, double lambda,
                                      const SpectralField& profile, double t_lo, double t_hi,
                                      int n_times = 12);

/// The critical profile <xi>^{-s-1/2-eps} on a grid.
SpectralField spectral_critical_profile(GridPtr g, double s, double eps = 0.01);

} // namespace dbo

#endif
