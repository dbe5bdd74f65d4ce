#ifndef DBO_PICARD_HPP
#define DBO_PICARD_HPP

#include <vector>

#include "dbo/stepper.hpp"

namespace dbo {

struct PicardResult {
    PhysicalField solution;              // converged iterate at t = T
    std::vector<double> iterate_distances;
    bool contracted = false;
    double discrepancy_vs_marching = 0.0;
    double marching_self_error = 0.0;    // ||u_dt - u_{dt/2}|| at T
};

/// Fixed-point iteration of u = U(t) phi - int_0^t U(t - tau) z(tau) dtau
/// on a trapezoidal tau-grid, cross-checked against the time-marching
/// scheme at t = T. Iterate divergence raises a runtime_error
/// ("outside contraction regime").
PicardResult picard_crosscheck(const PhysicalField& phi, const SemigroupSpec& spec, double T,
                               int iterations, int nodes = 64);

} // namespace dbo

#endif
