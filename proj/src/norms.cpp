#include "dbo/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/transform.hpp"

namespace dbo {

double l2_norm_sq(const PhysicalField& u) {
    double s = 0.0;
    for (double v : u.samples) s += v * v;
    return s * u.grid->dx;
}

double l2_norm(const PhysicalField& u) { return std::sqrt(l2_norm_sq(u)); }

double l2_norm_sq(const SpectralField& u) {
    double s = 0.0;
    for (const cplx& c : u.coefficients) s += std::norm(c);
    return s * u.grid->dxi() / (2.0 * M_PI);
}

double l2_norm(const SpectralField& u) { return std::sqrt(l2_norm_sq(u)); }

double sobolev_norm(const SpectralField& u, double s) {
    double acc = 0.0;
    for (size_t i = 0; i < u.coefficients.size(); ++i) {
        const double xi = u.grid->frequencies[i];
        acc += std::pow(1.0 + xi * xi, s) * std::norm(u.coefficients[i]);
    }
    return std::sqrt(acc * u.grid->dxi() / (2.0 * M_PI));
}

double sobolev_norm(const PhysicalField& u, double s) {
    return sobolev_norm(forward_transform(u), s);
}

double weighted_norm(const PhysicalField& u, double r, double R) {
    if (R > u.grid->half_length) throw std::invalid_argument("truncation radius exceeds box");
    double acc = 0.0;
    for (int j = 0; j < u.grid->n_points; ++j) {
        const double x = u.grid->x(j);
        if (std::abs(x) > R) continue;
        acc += std::pow(1.0 + x * x, r) * u.samples[j] * u.samples[j];
    }
    return std::sqrt(acc * u.grid->dx);
}

double absx_weighted_norm(const PhysicalField& u, double r, double R) {
    if (R > u.grid->half_length) throw std::invalid_argument("truncation radius exceeds box");
    double acc = 0.0;
    for (int j = 0; j < u.grid->n_points; ++j) {
        const double x = u.grid->x(j);
        if (std::abs(x) > R) continue;
        acc += std::pow(std::abs(x), 2.0 * r) * u.samples[j] * u.samples[j];
    }
    return std::sqrt(acc * u.grid->dx);
}

double first_moment(const PhysicalField& u) {
    double acc = 0.0;
    for (int j = 0; j < u.grid->n_points; ++j) acc += u.grid->x(j) * u.samples[j];
    return acc * u.grid->dx;
}

double mean_integral(const PhysicalField& u) {
    double acc = 0.0;
    for (double v : u.samples) acc += v;
    return acc * u.grid->dx;
}

double spectral_first_moment(const SpectralField& u) {
    // sum_j x_j e^{i xi_k x_j} dx = -L dx (-1)^k (1 + i cot(pi k / n)), k != 0
    const int n = u.grid->n_points;
    const double L = u.grid->half_length;
    const double dx = u.grid->dx;
    cplx acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        cplx T;
        if (k == 0) {
            T = cplx(-L * dx, 0.0);
        } else {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double cot = 1.0 / std::tan(M_PI * k / n);
            T = -L * dx * sign * cplx(1.0, cot);
        }
        acc += u.coefficients[i] * T;
    }
    return (acc / (2.0 * L)).real();
}

} // namespace dbo
