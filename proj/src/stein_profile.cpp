#include "dbo/stein_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dbo/cutoff.hpp"
#include "dbo/fitting.hpp"
#include "dbo/quadrature.hpp"

namespace dbo {

namespace {

constexpr double kZeroSliver = 1e-12; // closest mesh approach to the |xi|^p kink
constexpr int kCellsPerDecade = 32;

struct Profile {
    double p;
    CutoffFunction chi;

    double g(double xi) const {
        const double t = std::abs(xi);
        if (t >= 2.0 || t == 0.0) return (t == 0.0 && p == 0.0) ? 1.0 : 0.0;
        return std::pow(t, p) * chi.value(xi);
    }
    double g1(double eta) const { // d/deta for eta > 0
        return p * std::pow(eta, p - 1.0) * chi.value(eta) + std::pow(eta, p) * chi.deriv(eta);
    }
    double g2(double eta) const {
        return p * (p - 1.0) * std::pow(eta, p - 2.0) * chi.value(eta) +
               2.0 * p * std::pow(eta, p - 1.0) * chi.deriv(eta) +
               std::pow(eta, p) * chi.deriv2(eta);
    }
};

// Integrates f over [lo, hi] with per-end grading scales; h0 <= 0 means no
// grading at that end.
double seg_integrate(const std::function<double(double)>& f, double lo, double hi, double h0_lo,
                     double h0_hi) {
    if (!(hi > lo)) return 0.0;
    if (h0_lo > 0.0 && h0_hi > 0.0) {
        const double mid = 0.5 * (lo + hi);
        return integrate_graded(f, lo, mid, true, false, h0_lo, kCellsPerDecade, 4) +
               integrate_graded(f, mid, hi, false, true, h0_hi, kCellsPerDecade, 4);
    }
    if (h0_lo > 0.0) return integrate_graded(f, lo, hi, true, false, h0_lo, kCellsPerDecade, 4);
    if (h0_hi > 0.0) return integrate_graded(f, lo, hi, false, true, h0_hi, kCellsPerDecade, 4);
    return integrate_graded(f, lo, hi, false, false, 0.25 * (hi - lo), kCellsPerDecade, 4);
}

// Contribution of y in (0, kZeroSliver) (or its mirror image) where the
// mesh does not reach; the weight is frozen at |y - eta| ~ eta.
double zero_sliver(const Profile& pr, double geta, double theta, double eta) {
    const double p = pr.p;
    const double i2 = std::pow(kZeroSliver, 2.0 * p + 1.0) / (2.0 * p + 1.0);
    const double i1 = std::pow(kZeroSliver, p + 1.0) / (p + 1.0);
    const double w = std::pow(eta, -1.0 - 2.0 * theta);
    return std::max(0.0, (i2 - 2.0 * geta * i1 + kZeroSliver * geta * geta) * w);
}

} // namespace

double dstein_cutoff_profile(double p, double theta, double eta) {
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0,1)");
    if (!(p > -0.5)) throw std::invalid_argument("profile power must exceed -1/2");
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");

    Profile pr{p, CutoffFunction{}};
    const double geta = pr.g(eta);
    auto integrand = [&](double y) {
        const double d = pr.g(y) - geta;
        return d * d * std::pow(std::abs(y - eta), -1.0 - 2.0 * theta);
    };

    double acc = 0.0;

    if (eta >= 2.0) {
        // g vanishes at eta; only y in [-2,2] contributes, no singularity.
        acc += seg_integrate(integrand, -2.0, -1.0, 0.0, 0.0);
        acc += seg_integrate(integrand, -1.0, 0.0, 0.0, kZeroSliver);
        acc += seg_integrate(integrand, 0.0, 1.0, kZeroSliver, 0.0);
        acc += seg_integrate(integrand, 1.0, 2.0, 0.0, 0.0);
        acc += 2.0 * zero_sliver(pr, 0.0, theta, eta);
        return std::sqrt(acc);
    }

    const double h = 1e-3 * std::min(eta, 0.1);

    // local quadratic model on |y - eta| <= h
    const double d1 = pr.g1(eta);
    const double d2 = pr.g2(eta);
    acc += d1 * d1 * std::pow(h, 2.0 - 2.0 * theta) / (1.0 - theta);
    acc += d2 * d2 * std::pow(h, 4.0 - 2.0 * theta) / (2.0 * (4.0 - 2.0 * theta));

    // exact tail where g == 0 and the integrand is g(eta)^2 |y-eta|^{-1-2theta}
    if (geta != 0.0)
        acc += geta * geta *
               (std::pow(2.0 - eta, -2.0 * theta) + std::pow(2.0 + eta, -2.0 * theta)) /
               (2.0 * theta);

    // remaining segments of [-2, 2] with breakpoints at the chi kinks, the
    // profile kink at 0, and the excluded neighborhood of eta
    std::vector<double> brk = {-2.0, -1.0, 0.0, 1.0, 2.0, eta - h, eta + h};
    std::sort(brk.begin(), brk.end());
    for (size_t i = 0; i + 1 < brk.size(); ++i) {
        double lo = brk[i], hi = brk[i + 1];
        if (hi - lo < 1e-300) continue;
        if (lo >= eta - h && hi <= eta + h) continue; // excluded core
        double h_lo = 0.0, h_hi = 0.0;
        if (lo == 0.0) h_lo = kZeroSliver;
        if (hi == 0.0) h_hi = kZeroSliver;
        if (lo == eta + h) h_lo = 0.5 * h;
        if (hi == eta - h) h_hi = 0.5 * h;
        acc += seg_integrate(integrand, lo, hi, h_lo, h_hi);
    }
    acc += 2.0 * zero_sliver(pr, geta, theta, eta);

    return std::sqrt(acc);
}

namespace {

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < n; ++i) v[i] = std::exp(a + (b - a) * i / (n - 1));
    return v;
}

} // namespace

SteinAsymptoticsReport stein_asymptotics_probe(double gamma, double theta,
                                               std::vector<double> small_etas,
                                               std::vector<double> large_etas) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0,1)");
    if (small_etas.empty()) small_etas = logspace(1e-6, 1e-4, 16);
    if (large_etas.empty()) large_etas = logspace(10.0, 1000.0, 16);

    SteinAsymptoticsReport rep;
    rep.log_case = (gamma == theta);

    std::vector<double> small_vals, large_vals;
    for (double e : small_etas) small_vals.push_back(dstein_cutoff_profile(gamma, theta, e));
    for (double e : large_etas) large_vals.push_back(dstein_cutoff_profile(gamma, theta, e));
    rep.small_etas = small_etas;
    rep.small_values = small_vals;
    rep.large_etas = large_etas;
    rep.large_values = large_vals;

    if (rep.log_case) {
        // fitted against sqrt(-ln eta): report the proportionality constant
        std::vector<double> xs;
        for (double e : small_etas) xs.push_back(std::sqrt(-std::log(e)));
        const LineFit f = linear_fit(xs, small_vals);
        rep.small_eta = {"small-eta", f.slope, small_etas.front(), small_etas.back(),
                         f.rms_residual};
    } else {
        const LineFit f = loglog_fit(small_etas, small_vals);
        rep.small_eta = {"small-eta", f.slope, small_etas.front(), small_etas.back(),
                         f.rms_residual};
    }
    {
        const LineFit f = loglog_fit(large_etas, large_vals);
        rep.large_eta = {"large-eta", f.slope, large_etas.front(), large_etas.back(),
                         f.rms_residual};
    }

    // truncated L^2 norms over (eps, 2] with dyadic eps; divergence is read
    // off the growth of the shell sequence
    const int k_lo = 1, k_hi = 14;
    std::vector<double> shell_mass(k_hi + 1, 0.0); // mass on (2^{-k-1}, 2^{-k}]
    for (int k = k_lo; k <= k_hi; ++k) {
        const double lo = std::pow(2.0, -(k + 1)), hi = std::pow(2.0, -k);
        auto f = [&](double e) {
            const double v = dstein_cutoff_profile(gamma, theta, e);
            return v * v;
        };
        shell_mass[k] = 2.0 * integrate_graded(f, lo, hi, false, false, 0.0, 8, 4);
    }
    double base = 0.0;
    {
        auto f = [&](double e) {
            const double v = dstein_cutoff_profile(gamma, theta, e);
            return v * v;
        };
        base = 2.0 * integrate_graded(f, 0.5, 2.0, false, false, 0.0, 8, 4);
    }
    double cum = base;
    for (int k = k_lo; k <= k_hi; ++k) {
        cum += shell_mass[k];
        rep.shells.eps.push_back(std::pow(2.0, -(k + 1)));
        rep.shells.truncated_norm.push_back(std::sqrt(cum));
    }
    for (size_t i = 1; i < rep.shells.truncated_norm.size(); ++i)
        if (rep.shells.truncated_norm[i] < rep.shells.truncated_norm[i - 1])
            rep.shells.monotone = false;

    // geometric decay of the innermost shells <=> summable tail
    const double r1 = shell_mass[k_hi] / shell_mass[k_hi - 1];
    const double r2 = shell_mass[k_hi - 1] / shell_mass[k_hi - 2];
    const double ratio = 0.5 * (r1 + r2);
    const bool divergent = ratio >= 0.97;
    rep.in_l2 = !divergent;
    rep.non_monotone_flag = divergent && !rep.shells.monotone;

    return rep;
}

EnvelopeReport nonmembership_envelope(double gamma, const std::vector<double>& etas) {
    if (!(gamma > 0.0 && gamma < 0.5))
        throw std::invalid_argument("envelope requires gamma in (0, 1/2)");
    EnvelopeReport rep;
    const double gamma1 = gamma - 0.5;
    const double c = std::sqrt(gamma1 * gamma1 / (2.0 * (1.0 - gamma)));
    rep.holds = true;
    for (double e : etas) {
        if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("envelope etas must lie in (0,1)");
        const double v = dstein_cutoff_profile(gamma1, gamma, e);
        const double b = c / std::sqrt(e);
        rep.eta.push_back(e);
        rep.measured.push_back(v);
        rep.bound.push_back(b);
        if (v < b) rep.holds = false;
    }
    // divergence of the truncated norms: the squared values grow ~ 1/eta
    double lo_val = dstein_cutoff_profile(gamma1, gamma, 1e-6);
    double hi_val = dstein_cutoff_profile(gamma1, gamma, 1e-3);
    rep.diverging = lo_val > 10.0 * hi_val;
    return rep;
}

} // namespace dbo
