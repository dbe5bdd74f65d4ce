#ifndef DBO_STEPPER_HPP
#define DBO_STEPPER_HPP

#include <string>
#include <vector>

#include "dbo/field.hpp"
#include "dbo/semigroup.hpp"

namespace dbo {

/// Exact-linear exponential two-stage scheme (predictor + trapezoidal
/// corrector) with 2/3-rule dealiasing of the quadratic flux.
struct TimeStepperSpec {
    double dt = 1e-3;
    double dealias_fraction = 2.0 / 3.0;

    TimeStepperSpec(double dt_, double dealias = 2.0 / 3.0);
    TimeStepperSpec() = default;
};

/// Dealiased flux N(u_hat) = -(i xi / 2) (u^2)^hat; its zero mode vanishes
/// identically.
SpectralField nonlinear_flux(const SpectralField& u_hat, const TimeStepperSpec& stepper);

/// One step: u* = psi(dt)(u + dt N(u)),
///           u_{n+1} = psi(dt) u + (dt/2)(psi(dt) N(u) + N(u*)).
SpectralField nonlinear_step(const SpectralField& u_hat, const SemigroupSpec& spec,
                             const TimeStepperSpec& stepper);
PhysicalField nonlinear_step(const PhysicalField& u, const SemigroupSpec& spec,
                             const TimeStepperSpec& stepper);

struct StepSeries {
    std::vector<double> times;
    std::vector<double> l2_norm;
    std::vector<double> mean_re;
    std::vector<double> mean_im;
    std::vector<double> first_moment;
    std::vector<double> dissipation_rate;    // 2 (1/2pi) int |xi|^{1+a} |u_hat|^2 dxi
    std::vector<double> moment_rate_linear;  // box pairing of the linear terms
    std::vector<double> moment_rate_flux;    // box pairing of the dealiased flux
};

struct MarchResult {
    std::vector<double> snapshot_times;
    std::vector<PhysicalField> snapshots;
    StepSeries series;       // recorded every step when requested
    bool aborted = false;
    double last_valid_time = 0.0;
    std::string guard_reason;
};

struct MarchOptions {
    double T = 1.0;
    std::vector<double> snapshot_times; // always includes 0 and T on success
    bool record_series = false;
    double h1_blowup_factor = 1e6;
};

/// Time-marches phi to T; aborts on non-finite values or on the H^1 norm
/// exceeding h1_blowup_factor times its initial value.
MarchResult march(const PhysicalField& phi, const SemigroupSpec& spec,
                  const TimeStepperSpec& stepper, const MarchOptions& opts);

} // namespace dbo

#endif
