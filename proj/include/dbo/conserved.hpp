#ifndef DBO_CONSERVED_HPP
#define DBO_CONSERVED_HPP

#include <map>
#include <string>
#include <vector>

#include "dbo/stepper.hpp"

namespace dbo {

struct DiagnosticsSeries {
    std::vector<double> times;
    std::vector<double> l2_norm;
    std::map<double, std::vector<double>> hs_norms;       // keyed by s
    std::map<double, std::vector<double>> weighted_norms; // keyed by r
    double weighted_truncation_radius = 0.0;
    std::vector<double> mean_re;
    std::vector<double> mean_im;
    std::vector<double> first_moment;
    std::vector<double> dissipation_residual;
    std::vector<double> moment_residual;     // vs the discrete box identity
    std::vector<double> moment_residual_raw; // vs 1/2 ||u||^2 alone
    std::vector<double> moment_truncation;   // linear-part box term, reported
};

struct ConservationChecks {
    double mean_drift_rel = 0.0; // max |u_hat(0,t) - u_hat(0,0)| / |u_hat(0,0)|
    bool l2_monotone = true;
    double max_moment_residual = 0.0;
    double max_moment_residual_raw = 0.0;
    double max_dissipation_residual = 0.0;
};

/// Per-step rate at which the box first moment is fed by the linear
/// operators; on the line this pairing vanishes, on a periodic box it is
/// an exactly computable O(1/L) truncation term and is reported rather
/// than hidden.
double linear_moment_rate(const SpectralField& u_hat, const SemigroupSpec& spec);

/// Post-processes a recorded march into the diagnostics series. Residuals
/// difference consecutive steps against the trapezoid of the stated rates.
DiagnosticsSeries conserved_quantities(const MarchResult& run,
                                       const std::vector<double>& s_list = {},
                                       const std::vector<double>& r_list = {},
                                       double trunc_radius = 0.0);

ConservationChecks conservation_checks(const DiagnosticsSeries& series);

} // namespace dbo

#endif
