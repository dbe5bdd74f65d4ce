#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dbo/initial_data.hpp"
#include "dbo/kernel_bounds.hpp"
#include "dbo/norms.hpp"
#include "dbo/picard.hpp"
#include "dbo/semigroup.hpp"
#include "dbo/smoothing.hpp"
#include "dbo/stepper.hpp"
#include "dbo/transform.hpp"

using namespace dbo;

namespace {

double rel_l2_diff(const PhysicalField& a, const PhysicalField& b) {
    const double den = l2_norm(b);
    return den > 0.0 ? l2_norm(a - b) / den : l2_norm(a - b);
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
    return v;
}

} // namespace

TEST_CASE("semigroup symbol invariants") {
    SemigroupSpec spec(0.5);
    for (double t : {0.0, 0.1, 3.0}) {
        CHECK(spec.psi(0.0, t) == cplx(1.0, 0.0));
        for (double xi : {-7.3, -1.0, 0.4, 12.0}) {
            CHECK(std::abs(spec.psi(xi, t)) <= 1.0 + 1e-15);
            const cplx p = spec.psi(xi, t), m = spec.psi(-xi, t);
            CHECK(std::abs(p - std::conj(m)) <= 1e-15);
        }
    }
    CHECK_THROWS_AS(SemigroupSpec(0.0), std::invalid_argument);
    CHECK_THROWS_AS(SemigroupSpec(1.5), std::invalid_argument);
}

TEST_CASE("linear evolution: identity at t = 0, error for t < 0") {
    auto g = make_grid(512, 32.0 * M_PI);
    SemigroupSpec spec(0.5);
    auto phi = make_gaussian(g, 1.0, 1.0);
    CHECK(rel_l2_diff(linear_evolve(phi, spec, 0.0), phi) <= 1e-14);
    CHECK_THROWS_AS(linear_evolve(phi, spec, -0.1), std::invalid_argument);
}

TEST_CASE("semigroup law") {
    auto g = make_grid(1024, 32.0 * M_PI);
    SemigroupSpec spec(0.75);
    auto phi = make_gaussian(g, 1.0, 1.0);
    auto two_steps = linear_evolve(linear_evolve(phi, spec, 0.7), spec, 0.3);
    auto one_step = linear_evolve(phi, spec, 1.0);
    CHECK(rel_l2_diff(two_steps, one_step) <= 1e-12);
}

TEST_CASE("single cosine mode under the BOB-case symbol") {
    // a = 1: mode xi = 1 picks up e^{-t} and a phase shift t
    auto g = make_grid(256, 8.0 * M_PI);
    SemigroupSpec spec(1.0);
    auto phi = PhysicalField::from_function(g, [](double x) { return std::cos(x); });
    auto u = linear_evolve(phi, spec, 1.0);
    auto expected = PhysicalField::from_function(
        g, [](double x) { return std::exp(-1.0) * std::cos(x - 1.0); });
    CHECK(rel_l2_diff(u, expected) <= 1e-12);
    const double amp = std::abs(forward_transform(u).coefficients[g->mode_index(8)]) /
                       std::abs(forward_transform(phi).coefficients[g->mode_index(8)]);
    CHECK(amp == doctest::Approx(0.367879441).epsilon(1e-8));
}

TEST_CASE("kernel sup bound matches the closed form") {
    const KernelBoundReport r = verify_sup_bound(1.0, 1.0, 1.0);
    CHECK(r.closed_form == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(r.measured == doctest::Approx(0.3678794).epsilon(1e-6));
    CHECK(r.rel_err <= 1e-6);

    // scaling in t: ratio of sups equals 2^{-2 lambda/(a+1)}
    for (double a : {0.25, 0.75}) {
        for (double lam : {0.5, 2.0}) {
            const double s1 = verify_sup_bound(a, lam, 1.0).measured;
            const double s2 = verify_sup_bound(a, lam, 2.0).measured;
            CHECK(s2 / s1 ==
                  doctest::Approx(std::pow(2.0, -2.0 * lam / (a + 1.0))).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(verify_sup_bound(0.5, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(verify_sup_bound(0.5, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(verify_sup_bound(0.5, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("kernel L2 law: constant, power law, substitution invariance") {
    // c_{0,1}^2 = int e^{-2w^2} dw = sqrt(pi/2)
    const KernelBoundReport r = verify_l2_bound(1.0, 0.0, 1.0);
    CHECK(r.closed_form * r.closed_form == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-10));

    // direct quadrature against the substituted form
    for (double a : {0.25, 0.5, 1.0})
        for (double s : {0.0, 0.5, 1.0})
            for (double t : {0.1, 1.0, 10.0}) CHECK(verify_l2_bound(a, s, t).rel_err <= 1e-10);

    for (double a : {0.5, 1.0})
        for (double s : {0.0, 0.5, 1.0}) {
            const LineFit fit = l2_bound_exponent_fit(a, s, logspace(0.1, 10.0, 12));
            const double expected = -(2.0 * s + 1.0) / (2.0 * (1.0 + a));
            CHECK(std::abs(fit.slope - expected) <= 1e-3);
        }
    CHECK_THROWS_AS(verify_l2_bound(0.5, -0.5, 1.0), std::invalid_argument);
}

TEST_CASE("stepper: zero data is a fixed point; zero mode exact") {
    auto g = make_grid(512, 32.0 * M_PI);
    SemigroupSpec spec(0.5);
    TimeStepperSpec stepper(1e-2);
    auto z = SpectralField::zero(g);
    auto z1 = nonlinear_step(z, spec, stepper);
    for (const cplx& c : z1.coefficients) CHECK(std::abs(c) == 0.0);

    auto u = forward_transform(make_gaussian(g, 1.0, 1.0));
    const cplx zm0 = u.zero_mode();
    for (int s = 0; s < 50; ++s) u = nonlinear_step(u, spec, stepper);
    CHECK(std::abs(u.zero_mode() - zm0) <= 1e-12 * std::abs(zm0));
}

TEST_CASE("stepper validation") {
    CHECK_THROWS_AS(TimeStepperSpec(0.0), std::invalid_argument);
    CHECK_THROWS_AS(TimeStepperSpec(1e-3, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(TimeStepperSpec(1e-3, 1.2), std::invalid_argument);
}

TEST_CASE("self-convergence of the two-stage scheme is second order") {
    auto g = make_grid(2048, 64.0 * M_PI);
    SemigroupSpec spec(0.5);
    auto phi = make_gaussian(g, 1.0, 1.0);
    MarchOptions opts;
    opts.T = 1.0;
    auto u1 = march(phi, spec, TimeStepperSpec(2e-3), opts).snapshots.back();
    auto u2 = march(phi, spec, TimeStepperSpec(1e-3), opts).snapshots.back();
    auto u3 = march(phi, spec, TimeStepperSpec(5e-4), opts).snapshots.back();
    const double ratio = l2_norm(u1 - u2) / l2_norm(u2 - u3);
    CHECK(ratio >= 3.6);
    CHECK(ratio <= 4.4);
}

TEST_CASE("linear part of one step contracts the L2 norm exactly") {
    auto g = make_grid(512, 32.0 * M_PI);
    SemigroupSpec spec(0.5);
    auto u = forward_transform(make_gaussian(g, 1.0, 1.0));
    auto v = linear_evolve(u, spec, 1e-2);
    CHECK(l2_norm(v) <= l2_norm(u));
}

TEST_CASE("blow-up guard aborts with the last valid time") {
    auto g = make_grid(256, 32.0 * M_PI);
    SemigroupSpec spec(0.5);
    auto phi = make_gaussian(g, 1e200, 1.0); // squaring overflows immediately
    MarchOptions opts;
    opts.T = 0.01;
    const MarchResult res = march(phi, spec, TimeStepperSpec(1e-3), opts);
    CHECK(res.aborted);
    CHECK(res.guard_reason == "non-finite values");
    CHECK(res.last_valid_time == 0.0);
}

TEST_CASE("picard: zero data stays zero and trivially agrees with marching") {
    auto g = make_grid(256, 16.0 * M_PI);
    SemigroupSpec spec(0.5);
    const PicardResult res = picard_crosscheck(PhysicalField::zero(g), spec, 0.05, 4);
    CHECK(res.contracted);
    CHECK(res.discrepancy_vs_marching == 0.0);
    for (double v : res.solution.samples) CHECK(v == 0.0);
}

TEST_CASE("picard iterates contract and cross-validate the marching scheme") {
    auto g = make_grid(1024, 32.0 * M_PI);
    SemigroupSpec spec(0.5);
    auto phi = make_gaussian(g, 1.0, 1.0);
    const PicardResult res = picard_crosscheck(phi, spec, 0.05, 8);
    CHECK(res.contracted);
    REQUIRE(res.iterate_distances.size() >= 3);
    // one application of the Duhamel map already produces the dominant
    // correction; later iterates shrink monotonically
    for (size_t i = 1; i < res.iterate_distances.size(); ++i)
        CHECK(res.iterate_distances[i] < res.iterate_distances[i - 1]);
    CHECK(res.discrepancy_vs_marching <= 10.0 * res.marching_self_error);
}

TEST_CASE("picard reports leaving the contraction regime") {
    // large data over a long horizon: the Duhamel map expands and the
    // iterate distances grow
    auto g = make_grid(1024, 32.0 * M_PI);
    SemigroupSpec spec(0.5);
    CHECK_THROWS_WITH_AS(picard_crosscheck(make_gaussian(g, 50.0, 1.0), spec, 0.5, 8, 32),
                         "outside contraction regime", std::runtime_error);
}

TEST_CASE("smoothing rate fits recover -lambda/(1+a) on critical data") {
    auto g = make_grid(16384, 32.0 * M_PI);
    for (auto [a, lam] : {std::pair{0.5, 0.75}, {1.0, 1.0}, {0.25, 0.5}}) {
        SemigroupSpec spec(a);
        const SpectralField prof = spectral_critical_profile(g, 0.0, 0.01);
        const double t_lo = 1.0 / (2.0 * std::pow(100.0, 1.0 + a));
        const double t_hi = 1.0 / (2.0 * std::pow(10.0, 1.0 + a));
        const SmoothingFitReport rep = smoothing_rate_fit(spec, 0.0, lam, prof, t_lo, t_hi);
        const double rel =
            std::abs(rep.fitted_slope - rep.expected_slope) / std::abs(rep.expected_slope);
        CHECK(rel <= 0.05);
    }
}

TEST_CASE("smoothing fit with lambda = 0: norms non-increasing, no rate") {
    // the critical profile's H^0 mass converges only logarithmically, so
    // the fitted slope is small-negative rather than exactly 0
    auto g = make_grid(8192, 32.0 * M_PI);
    SemigroupSpec spec(0.5);
    const SpectralField prof = spectral_critical_profile(g, 0.0, 0.01);
    const SmoothingFitReport rep = smoothing_rate_fit(spec, 0.0, 0.0, prof, 0.01, 1.0);
    for (size_t i = 1; i < rep.norms.size(); ++i) CHECK(rep.norms[i] <= rep.norms[i - 1]);
    CHECK(rep.fitted_slope <= 0.0);
    CHECK(rep.fitted_slope >= -0.25);
}

TEST_CASE("smoothing fit rejects rapidly decaying profiles") {
    auto g = make_grid(4096, 32.0 * M_PI);
    SemigroupSpec spec(0.5);
    const SpectralField gauss = forward_transform(make_gaussian(g, 1.0, 1.0));
    CHECK_THROWS_WITH_AS(smoothing_rate_fit(spec, 0.0, 0.75, gauss, 0.01, 1.0),
                         doctest::Contains("rate unobservable"), std::invalid_argument);
    const SpectralField prof = spectral_critical_profile(g, 0.0, 0.01);
    CHECK_THROWS_AS(smoothing_rate_fit(spec, 0.0, 1.6, prof, 0.01, 1.0), std::invalid_argument);
}
