#include "dbo/audits.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "dbo/cutoff.hpp"
#include "dbo/multiplier.hpp"
#include "dbo/norms.hpp"
#include "dbo/samples.hpp"
#include "dbo/sampled.hpp"
#include "dbo/stein.hpp"
#include "dbo/transform.hpp"

namespace dbo {

namespace {

double absx_weighted_l2(const PhysicalField& f, double nu) {
    double acc = 0.0;
    const double zero_tol = 1e-9 * f.grid->dx; // x(n/2) may miss 0 by an ulp
    for (int j = 0; j < f.grid->n_points; ++j) {
        const double x = f.grid->x(j);
        const bool at_zero = std::abs(x) < zero_tol;
        if (at_zero && nu < 0.0) continue; // zero weight at the singular node
        const double w = at_zero ? (nu == 0.0 ? 1.0 : 0.0) : std::pow(std::abs(x), 2.0 * nu);
        acc += w * f.samples[j] * f.samples[j];
    }
    return std::sqrt(acc * f.grid->dx);
}

PhysicalField weight_pointwise(const PhysicalField& f, double expo) {
    PhysicalField out = f;
    for (int j = 0; j < f.grid->n_points; ++j) {
        const double x = f.grid->x(j);
        out.samples[j] *= std::pow(1.0 + x * x, 0.5 * expo);
    }
    return out;
}

// Family shared by the ratio audits: alternates Gaussian bumps and
// band-limited draws (the latter realized jointly on both grids).
struct FamilyPair {
    PhysicalField coarse;
    PhysicalField fine;
};

std::vector<FamilyPair> make_family(GridPtr gc, GridPtr gf, int n_samples, SampleRng& rng) {
    std::vector<FamilyPair> fam;
    fam.reserve(n_samples);
    for (int s = 0; s < n_samples; ++s) {
        if (s % 2 == 0) {
            auto [c, f] = band_limited_pair(gc, gf, gc->n_points / 8, rng);
            fam.push_back({std::move(c), std::move(f)});
        } else {
            const double L = gc->half_length;
            const double a = rng.uniform(0.5, 1.5);
            const double ce = rng.uniform(-L / 8.0, L / 8.0);
            const double w = rng.uniform(0.5, 2.0);
            auto fun = [=](double x) {
                return a * std::exp(-(x - ce) * (x - ce) / (2.0 * w * w));
            };
            fam.push_back({PhysicalField::from_function(gc, fun),
                           PhysicalField::from_function(gf, fun)});
        }
    }
    return fam;
}

} // namespace

RatioReport weighted_hilbert_audit(double nu, int n_samples, uint64_t seed, int n_grid, int n_fine,
                                   double half_length) {
    if (!(std::abs(nu) < 0.5)) throw std::invalid_argument("nu outside (-1/2,1/2)");
    auto gc = make_grid(n_grid, half_length);
    auto gf = make_grid(n_fine, half_length);
    SampleRng rng(seed);
    auto fam = make_family(gc, gf, n_samples, rng);

    RatioReport rep;
    rep.parameter = nu;
    rep.n_samples = n_samples;
    rep.min_ratio = 1e300;
    auto ratio = [&](const PhysicalField& f) {
        const double den = absx_weighted_l2(f, nu);
        return den > 0.0 ? absx_weighted_l2(hilbert(f), nu) / den : 0.0;
    };
    for (const auto& pr : fam) {
        const double rc = ratio(pr.coarse);
        rep.max_ratio = std::max(rep.max_ratio, rc);
        rep.min_ratio = std::min(rep.min_ratio, rc);
        rep.max_ratio_refined = std::max(rep.max_ratio_refined, ratio(pr.fine));
    }
    rep.refinement_spread = std::abs(rep.max_ratio_refined - rep.max_ratio) / rep.max_ratio;
    return rep;
}

std::optional<double> interpolation_ratio(double beta, double delta, double nu,
                                          const PhysicalField& f) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0,1)");
    if (!(delta > 0.0) || !(nu > 0.0)) throw std::invalid_argument("delta, nu must be positive");
    const double wnorm = l2_norm(weight_pointwise(f, nu));
    const double jnorm = sobolev_norm(f, delta);
    if (wnorm == 0.0 || jnorm == 0.0) return std::nullopt; // skip by convention
    const PhysicalField wf = weight_pointwise(f, (1.0 - beta) * nu);
    const double lhs = sobolev_norm(wf, beta * delta);
    return lhs / (std::pow(wnorm, 1.0 - beta) * std::pow(jnorm, beta));
}

RatioReport interpolation_audit(double beta, double delta, double nu, int n_samples, uint64_t seed,
                                int n_grid, int n_fine, double half_length) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0,1)");
    if (!(delta > 0.0) || !(nu > 0.0)) throw std::invalid_argument("delta, nu must be positive");
    auto gc = make_grid(n_grid, half_length);
    auto gf = make_grid(n_fine, half_length);
    SampleRng rng(seed);
    auto fam = make_family(gc, gf, n_samples, rng);

    RatioReport rep;
    rep.parameter = beta;
    rep.n_samples = n_samples;
    rep.min_ratio = 1e300;
    for (const auto& pr : fam) {
        const auto rc = interpolation_ratio(beta, delta, nu, pr.coarse);
        if (!rc) {
            ++rep.n_skipped;
            continue;
        }
        rep.max_ratio = std::max(rep.max_ratio, *rc);
        rep.min_ratio = std::min(rep.min_ratio, *rc);
        const auto rf = interpolation_ratio(beta, delta, nu, pr.fine);
        rep.max_ratio_refined = std::max(rep.max_ratio_refined, rf.value_or(0.0));
    }
    rep.refinement_spread = std::abs(rep.max_ratio_refined - rep.max_ratio) / rep.max_ratio;
    return rep;
}

EquivalenceReport equivalence_audit(double b, int n_samples, uint64_t seed, int n_grid, int n_fine,
                                    double half_length) {
    if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("b must lie in (0,1)");
    auto gc = make_grid(n_grid, half_length);
    auto gf = make_grid(n_fine, half_length);
    SampleRng rng(seed);
    auto fam = make_family(gc, gf, n_samples, rng);

    EquivalenceReport rep;
    rep.b = b;
    rep.n_samples = n_samples;
    rep.lower = rep.lower_refined = 1e300;
    auto ratio = [&](const PhysicalField& f) {
        const SampledFunction s = SampledFunction::from_physical(f);
        const SteinResult d = stein_derivative(s, b);
        double dnorm2 = 0.0;
        for (double v : d.values.values) dnorm2 += v * v;
        dnorm2 *= s.spacing;
        const double num = l2_norm(f) + std::sqrt(dnorm2);
        return num / sobolev_norm(f, b);
    };
    for (const auto& pr : fam) {
        const double rc = ratio(pr.coarse);
        rep.lower = std::min(rep.lower, rc);
        rep.upper = std::max(rep.upper, rc);
        const double rf = ratio(pr.fine);
        rep.lower_refined = std::min(rep.lower_refined, rf);
        rep.upper_refined = std::max(rep.upper_refined, rf);
    }
    return rep;
}

LeibnizBoundReport leibniz_bound_audit(double b, int n_grid, int n_fine) {
    if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("b must lie in (0,1)");
    CutoffFunction chi;
    const double denom = 1.0 + chi.deriv_sup(); // ||chi||_inf = 1
    auto constant_on = [&](int n) {
        SampledFunction s = SampledFunction::on_interval(
            -8.0, 8.0, n, [&](double x) { return chi.value(x); });
        const SteinResult d = stein_derivative(s, b);
        double sup = 0.0;
        for (double v : d.values.values) sup = std::max(sup, v);
        return sup / denom;
    };
    LeibnizBoundReport rep;
    rep.b = b;
    rep.constant = constant_on(n_grid);
    rep.constant_refined = constant_on(n_fine);
    rep.spread = std::abs(rep.constant_refined - rep.constant) / rep.constant;
    return rep;
}

SubadditivityReport subadditivity_audit(double b, int n_samples, uint64_t seed, int n_grid,
                                        double half_length) {
    if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("b must lie in (0,1)");
    auto g = make_grid(n_grid, half_length);
    SampleRng rng(seed);

    SubadditivityReport rep;
    rep.b = b;
    rep.n_samples = n_samples;
    rep.worst_margin = 1e300;

    auto stein_of = [&](const PhysicalField& f) {
        return stein_derivative(SampledFunction::from_physical(f), b);
    };
    auto l2_of = [&](const std::vector<double>& v, double dx) {
        double acc = 0.0;
        for (double x : v) acc += x * x;
        return std::sqrt(acc * dx);
    };

    for (int s = 0; s < n_samples; ++s) {
        const PhysicalField f = random_gaussian_bump(g, rng);
        const PhysicalField h = random_gaussian_bump(g, rng);
        const PhysicalField fh = pointwise(f, h);

        const SteinResult dfh = stein_of(fh);
        const SteinResult df = stein_of(f);
        const SteinResult dh = stein_of(h);

        const double dx = g->dx;
        const double lhs = l2_of(dfh.values.values, dx);

        std::vector<double> t1(g->n_points), t2(g->n_points);
        for (int j = 0; j < g->n_points; ++j) {
            t1[j] = f.samples[j] * dh.values.values[j];
            t2[j] = h.samples[j] * df.values.values[j];
        }
        const double rhs = l2_of(t1, dx) + l2_of(t2, dx);

        const double slack =
            std::sqrt(2.0 * half_length) *
            (dfh.error_estimate + df.error_estimate + dh.error_estimate);
        const double margin = rhs + slack - lhs;
        if (margin < 0.0) ++rep.violations;
        rep.worst_margin = std::min(rep.worst_margin, margin);
    }
    return rep;
}

} // namespace dbo
