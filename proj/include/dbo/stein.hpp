#ifndef DBO_STEIN_HPP
#define DBO_STEIN_HPP

#include "dbo/sampled.hpp"

namespace dbo {

/// Quadrature layout for D^b f(x) = (int |f(x)-f(y)|^2 / |x-y|^{1+2b} dy)^{1/2}.
/// The symmetric neighborhood |y-x| <= inner_halfwidth is handled by a
/// closed form from the local quadratic fit of f; the integral is then
/// carried on a geometric mesh out to outer_cutoff, and the remaining
/// tail is bounded analytically with sup|f|.
struct SteinQuadratureSpec {
    double inner_halfwidth = 0.0;
    double outer_cutoff = 0.0;
    int nodes_per_decade = 32;

    static SteinQuadratureSpec defaults_for(const SampledFunction& f);
    void validate(double sample_spacing) const;
};

struct SteinResult {
    SampledFunction values;    // D^b f at the sample nodes
    double error_estimate = 0.0; // sup-norm bound combining tail + inner remainder
};

/// b in (0,1); f is treated as zero outside its sampled interval.
SteinResult stein_derivative(const SampledFunction& f, double b, const SteinQuadratureSpec& q);

SteinResult stein_derivative(const SampledFunction& f, double b);

} // namespace dbo

#endif
