#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dbo/field.hpp"
#include "dbo/grid.hpp"
#include "dbo/multiplier.hpp"
#include "dbo/norms.hpp"
#include "dbo/samples.hpp"
#include "dbo/transform.hpp"

using namespace dbo;

namespace {

double rel_diff(const PhysicalField& a, const PhysicalField& b) {
    double num = 0.0, den = 0.0;
    for (size_t j = 0; j < a.samples.size(); ++j) {
        num += (a.samples[j] - b.samples[j]) * (a.samples[j] - b.samples[j]);
        den += b.samples[j] * b.samples[j];
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

} // namespace

TEST_CASE("grid construction and frequency layout") {
    auto g = make_grid(8, M_PI);
    CHECK(g->dx == doctest::Approx(M_PI / 4.0).epsilon(1e-15));
    CHECK(g->dxi() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g->frequencies.front() == doctest::Approx(-4.0));
    CHECK(g->frequencies.back() == doctest::Approx(3.0));
    CHECK(g->frequencies[g->zero_mode_index()] == 0.0);
    // dx * n = 2L exactly
    CHECK(g->dx * g->n_points == doctest::Approx(2.0 * M_PI).epsilon(1e-15));

    auto g2 = make_grid(1024, 64.0 * M_PI);
    CHECK(g2->dxi() == doctest::Approx(1.0 / 64.0).epsilon(1e-15));

    CHECK_THROWS_AS(make_grid(7, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(6, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(256, -1.0), std::invalid_argument);
}

TEST_CASE("constant maps to the zero mode with weight 2L") {
    auto g = make_grid(256, 32.0 * M_PI);
    auto f = PhysicalField::from_function(g, [](double) { return 1.0; });
    auto F = forward_transform(f);
    CHECK(F.zero_mode().real() == doctest::Approx(64.0 * M_PI).epsilon(1e-13));
    CHECK(F.zero_mode().imag() == doctest::Approx(0.0));
    double off = 0.0;
    for (int i = 0; i < g->n_points; ++i)
        if (i != g->zero_mode_index()) off = std::max(off, std::abs(F.coefficients[i]));
    CHECK(off <= 1e-10 * 64.0 * M_PI);
}

TEST_CASE("cosine concentrates at xi = +-1 with weight L") {
    auto g = make_grid(256, 16.0 * M_PI);
    auto f = PhysicalField::from_function(g, [](double x) { return std::cos(x); });
    auto F = forward_transform(f);
    const int ip = g->mode_index(16);  // xi = 16/16 = 1
    const int im = g->mode_index(-16);
    CHECK(F.coefficients[ip].real() == doctest::Approx(16.0 * M_PI).epsilon(1e-12));
    CHECK(F.coefficients[im].real() == doctest::Approx(16.0 * M_PI).epsilon(1e-12));
    double off = 0.0;
    for (int i = 0; i < g->n_points; ++i)
        if (i != ip && i != im) off = std::max(off, std::abs(F.coefficients[i]));
    CHECK(off <= 1e-10 * 16.0 * M_PI);
}

TEST_CASE("Gaussian transform matches the closed form") {
    auto g = make_grid(1024, 32.0 * M_PI);
    auto f = PhysicalField::from_function(g, [](double x) { return std::exp(-0.5 * x * x); });
    auto F = forward_transform(f);
    double max_err = 0.0;
    for (int i = 0; i < g->n_points; ++i) {
        const double xi = g->frequencies[i];
        const double expected = std::sqrt(2.0 * M_PI) * std::exp(-0.5 * xi * xi);
        max_err = std::max(max_err, std::abs(F.coefficients[i] - cplx(expected, 0.0)));
    }
    CHECK(max_err <= 1e-8);
}

TEST_CASE("round trip and Parseval") {
    auto g = make_grid(512, 24.0);
    SampleRng rng(7);
    auto f = random_band_limited(g, 60, rng);
    auto F = forward_transform(f);
    CHECK(rel_diff(inverse_transform(F), f) <= 1e-12);

    const double phys = l2_norm_sq(f);
    const double spec = l2_norm_sq(F);
    CHECK(std::abs(phys - spec) / phys <= 1e-12);
}

TEST_CASE("transform rejects bad input") {
    auto g = make_grid(64, 4.0);
    auto f = PhysicalField::zero(g);
    f.samples[3] = std::nan("");
    CHECK_THROWS_AS(forward_transform(f), std::invalid_argument);

    auto g2 = make_grid(128, 4.0);
    CHECK_THROWS_AS(PhysicalField(g2, std::vector<double>(64, 0.0)), std::invalid_argument);
    auto a = PhysicalField::zero(g);
    auto b = PhysicalField::zero(g2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("multiplier identity and composition") {
    auto g = make_grid(256, 10.0);
    SampleRng rng(11);
    auto f = random_band_limited(g, 40, rng);
    auto F = forward_transform(f);

    auto same = apply_multiplier(F, identity_symbol());
    for (int i = 0; i < g->n_points; ++i) CHECK(same.coefficients[i] == F.coefficients[i]);

    // D^1 D^1 = D^2
    auto d1 = apply_multiplier(apply_multiplier(F, frac_deriv_symbol(1.0)), frac_deriv_symbol(1.0));
    auto d2 = apply_multiplier(F, frac_deriv_symbol(2.0));
    double num = 0.0, den = 0.0;
    for (int i = 0; i < g->n_points; ++i) {
        num += std::norm(d1.coefficients[i] - d2.coefficients[i]);
        den += std::norm(d2.coefficients[i]);
    }
    CHECK(std::sqrt(num / den) <= 1e-12);

    // apply(m1) . apply(m2) = apply(m1 m2) on a mixed symbol pair
    auto m1 = bessel_symbol(0.7);
    auto m2 = hilbert_symbol();
    auto lhs = apply_multiplier(apply_multiplier(F, m1), m2);
    auto rhs = apply_multiplier(F, product(m1, m2));
    num = den = 0.0;
    for (int i = 0; i < g->n_points; ++i) {
        num += std::norm(lhs.coefficients[i] - rhs.coefficients[i]);
        den += std::norm(rhs.coefficients[i]);
    }
    CHECK(std::sqrt(num / den) <= 1e-14);
}

TEST_CASE("Hilbert transform of cos is sin; H^2 = -Id off the mean") {
    auto g = make_grid(256, 8.0 * M_PI);
    auto f = PhysicalField::from_function(g, [](double x) { return std::cos(x); });
    auto hf = hilbert(f);
    auto s = PhysicalField::from_function(g, [](double x) { return std::sin(x); });
    CHECK(rel_diff(hf, s) <= 1e-12);

    SampleRng rng(3);
    auto r = random_band_limited(g, 50, rng); // zero mean by construction
    auto hh = hilbert(hilbert(r));
    CHECK(rel_diff(hh, -1.0 * r) <= 1e-12);
}

TEST_CASE("fractional derivative scales single modes") {
    auto g = make_grid(64, 8.0 * M_PI);  // dxi = 1/8, mode 16 <-> xi = 2
    auto f = PhysicalField::from_function(g, [](double x) { return std::cos(2.0 * x); });
    auto df = frac_deriv(f, 0.5);
    auto expected = PhysicalField::from_function(
        g, [](double x) { return std::sqrt(2.0) * std::cos(2.0 * x); });
    CHECK(rel_diff(df, expected) <= 1e-12);

    CHECK_THROWS_AS(frac_deriv(f, -0.5), std::invalid_argument);
}

TEST_CASE("Bessel potential: identity at s = 0 and J^s J^{-s} = Id") {
    auto g = make_grid(128, 6.0);
    auto spike = PhysicalField::zero(g);
    spike.samples[64] = 1.0 / g->dx;
    CHECK(rel_diff(bessel(spike, 0.0), spike) <= 1e-12);

    SampleRng rng(5);
    auto f = random_band_limited(g, 20, rng);
    CHECK(rel_diff(bessel(bessel(f, 1.3), -1.3), f) <= 1e-12);
}

TEST_CASE("J^s norm equals the Sobolev norm") {
    auto g = make_grid(512, 16.0 * M_PI);
    auto f = PhysicalField::from_function(g, [](double x) { return std::exp(-0.5 * x * x); });
    for (double s : {0.0, 0.5, 1.5}) {
        const double via_j = l2_norm(bessel(f, s));
        const double via_hs = sobolev_norm(f, s);
        CHECK(via_j == doctest::Approx(via_hs).epsilon(1e-12));
    }
    CHECK(sobolev_norm(f, 0.0) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("Hermitian symbols preserve reality") {
    auto g = make_grid(256, 12.0);
    SampleRng rng(13);
    auto f = random_band_limited(g, 40, rng);
    auto F = forward_transform(f);
    for (const auto& m : {hilbert_symbol(), frac_deriv_symbol(0.7), bessel_symbol(-1.1),
                          ddx_symbol()}) {
        const double resid = inverse_imag_residual(apply_multiplier(F, m));
        CHECK(resid <= 1e-12);
    }
}

TEST_CASE("symbols singular at a grid frequency are rejected") {
    auto g = make_grid(64, 4.0);
    auto F = SpectralField::zero(g);
    MultiplierSymbol bad("inverse-power", [](double xi) {
        return cplx(std::pow(std::abs(xi), -0.5), 0.0);
    }, cplx(std::numeric_limits<double>::infinity(), 0.0));
    CHECK_THROWS_AS(apply_multiplier(F, bad), std::invalid_argument);
}
