#include "dbo/kernel_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/quadrature.hpp"

namespace dbo {

namespace {

double golden_max(const std::function<double(double)>& f, double lo, double hi, int iters) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return std::max(fc, fd);
}

} // namespace

KernelBoundReport verify_sup_bound(double a, double lambda, double t) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("a must lie in (0,1]");

    auto phi = [&](double xi) {
        return std::pow(xi, 2.0 * lambda) * std::exp(-t * std::pow(xi, 1.0 + a));
    };
    const double xi0 = std::pow(2.0 * lambda / ((1.0 + a) * t), 1.0 / (1.0 + a));

    // coarse scan over a wide bracket, then golden-section refinement
    double best = 0.0;
    const double lo = xi0 / 16.0, hi = xi0 * 16.0;
    double best_xi = xi0;
    for (int i = 0; i <= 512; ++i) {
        const double xi = lo * std::pow(hi / lo, i / 512.0);
        const double v = phi(xi);
        if (v > best) {
            best = v;
            best_xi = xi;
        }
    }
    best = std::max(best, golden_max(phi, best_xi / 2.0, best_xi * 2.0, 120));

    KernelBoundReport rep;
    rep.a = a;
    rep.param = lambda;
    rep.t = t;
    rep.measured = best;
    rep.closed_form = std::pow((a + 1.0) * M_E / (2.0 * lambda), -2.0 * lambda / (a + 1.0)) *
                      std::pow(t, -2.0 * lambda / (a + 1.0));
    rep.rel_err = std::abs(rep.measured - rep.closed_form) / rep.closed_form;
    return rep;
}

std::vector<KernelBoundReport> verify_sup_bound(double a, double lambda,
                                                const std::vector<double>& ts) {
    std::vector<KernelBoundReport> out;
    out.reserve(ts.size());
    for (double t : ts) out.push_back(verify_sup_bound(a, lambda, t));
    return out;
}

KernelBoundReport verify_l2_bound(double a, double sigma, double t) {
    if (sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("a must lie in (0,1]");

    // direct route: integral over xi at this t (both half lines)
    const double direct_sq = 2.0 * halfline_power_exp_integral(2.0 * sigma, 2.0 * t, a);

    // scaling route: c_{sigma,a}^2 = int w^{2 sigma} e^{-2|w|^{1+a}} dw
    const double c_sq = 2.0 * halfline_power_exp_integral(2.0 * sigma, 2.0, a);
    const double expo = -(2.0 * sigma + 1.0) / (2.0 * (1.0 + a));

    KernelBoundReport rep;
    rep.a = a;
    rep.param = sigma;
    rep.t = t;
    rep.measured = std::sqrt(direct_sq);
    rep.closed_form = std::sqrt(c_sq) * std::pow(t, expo);
    rep.rel_err = std::abs(rep.measured - rep.closed_form) / rep.closed_form;
    return rep;
}

std::vector<KernelBoundReport> verify_l2_bound(double a, double sigma,
                                               const std::vector<double>& ts) {
    std::vector<KernelBoundReport> out;
    out.reserve(ts.size());
    for (double t : ts) out.push_back(verify_l2_bound(a, sigma, t));
    return out;
}

LineFit l2_bound_exponent_fit(double a, double sigma, const std::vector<double>& ts) {
    std::vector<double> norms;
    norms.reserve(ts.size());
    for (double t : ts) norms.push_back(verify_l2_bound(a, sigma, t).measured);
    return loglog_fit(ts, norms);
}

} // namespace dbo
