#ifndef DBO_STEIN_PROFILE_HPP
#define DBO_STEIN_PROFILE_HPP

#include <string>
#include <vector>

namespace dbo {

/// D^theta(|xi|^p chi(xi)) evaluated at eta > 0 by singular quadrature
/// against the analytic profile (chi the shipped bump). Requires
/// p > -1/2 and theta in (0,1).
double dstein_cutoff_profile(double p, double theta, double eta);

struct AsymptoticsFitReport {
    std::string regime;       // "small-eta" or "large-eta"
    double fitted_slope = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    double residual = 0.0;    // RMS of the log-log regression
};

struct ShellSequence {
    std::vector<double> eps;            // shrinking inner radii (dyadic)
    std::vector<double> truncated_norm; // ||D^theta g||_{L^2(eps < |eta| < 2)}
    bool monotone = true;
};

struct SteinAsymptoticsReport {
    AsymptoticsFitReport small_eta;
    AsymptoticsFitReport large_eta;
    bool log_case = false;   // gamma == theta: small-eta fit vs sqrt(-ln eta)
    bool in_l2 = true;       // truncated-norm verdict
    bool non_monotone_flag = false;
    ShellSequence shells;
    std::vector<double> small_etas, small_values; // raw probe samples
    std::vector<double> large_etas, large_values;
};

/// Probes D^theta(|xi|^gamma chi) on the given eta grids; gamma > 0,
/// theta in (0,1). Empty grids select the default windows
/// [1e-6, 1e-4] and [10, 1000].
SteinAsymptoticsReport stein_asymptotics_probe(double gamma, double theta,
                                               std::vector<double> small_etas = {},
                                               std::vector<double> large_etas = {});

struct EnvelopeReport {
    std::vector<double> eta;
    std::vector<double> measured;
    std::vector<double> bound; // (gamma1^2/(2(1-gamma)))^{1/2} eta^{-1/2}
    bool holds = false;
    bool diverging = false;
};

/// D^gamma(|xi|^{gamma-1/2} chi) against its closed-form lower envelope;
/// gamma in (0, 1/2).
EnvelopeReport nonmembership_envelope(double gamma, const std::vector<double>& etas);

} // namespace dbo

#endif
