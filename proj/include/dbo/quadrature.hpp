#ifndef DBO_QUADRATURE_HPP
#define DBO_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace dbo {

/// Gauss-Legendre rule on a single cell [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order = 8);

/// Cell boundaries geometrically graded toward `a`: the first cell starts
/// at distance h0 from `a`, subsequent boundaries grow by 10^{1/cpd}.
std::vector<double> graded_breakpoints(double a, double b, double h0, int cells_per_decade);

/// Integrates f over [a, b] with grading toward one or both endpoints.
/// h0 is the closest approach to a graded endpoint.
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        bool grade_left, bool grade_right, double h0, int cells_per_decade,
                        int gl_order = 8);

/// Composite integral of |xi|^{2s} exp(-c |xi|^{1+a}) over the half line,
/// truncated where the exponent reaches `exp_cut` (default e^-60).
double halfline_power_exp_integral(double two_s, double c, double a, double exp_cut = 60.0);

} // namespace dbo

#endif
