#ifndef DBO_KERNEL_BOUNDS_HPP
#define DBO_KERNEL_BOUNDS_HPP

#include <vector>

#include "dbo/fitting.hpp"

namespace dbo {

struct KernelBoundReport {
    double a = 0.0;
    double param = 0.0; // lambda or sigma
    double t = 0.0;
    double measured = 0.0;
    double closed_form = 0.0;
    double rel_err = 0.0;
};

/// Grid-searched sup_xi |xi^{2 lambda} psi(xi,t)| against
/// ((a+1)e/(2 lambda))^{-2 lambda/(a+1)} t^{-2 lambda/(a+1)}; the search is
/// refined around the interior maximizer (2 lambda/((1+a) t))^{1/(1+a)}.
KernelBoundReport verify_sup_bound(double a, double lambda, double t);
std::vector<KernelBoundReport> verify_sup_bound(double a, double lambda,
                                                const std::vector<double>& ts);

/// Quadrature of || |xi|^sigma e^{-t |xi|^{1+a}} ||_{L^2} against
/// c_{sigma,a} t^{-(2 sigma+1)/(2(1+a))}, with c_{sigma,a}^2 obtained by an
/// independent quadrature of the substituted integral.
KernelBoundReport verify_l2_bound(double a, double sigma, double t);
std::vector<KernelBoundReport> verify_l2_bound(double a, double sigma,
                                               const std::vector<double>& ts);

/// Log-log slope of the measured L^2 norm over the t-grid.
LineFit l2_bound_exponent_fit(double a, double sigma, const std::vector<double>& ts);

} // namespace dbo

#endif
