#include "dbo/field.hpp"

#include <cmath>
#include <stdexcept>

namespace dbo {

namespace {
void require_grid(const GridPtr& g, size_t n) {
    if (!g) throw std::invalid_argument("field requires a grid");
    if (static_cast<size_t>(g->n_points) != n)
        throw std::invalid_argument("sample count does not match grid");
}
void require_same(const GridPtr& a, const GridPtr& b) {
    if (!same_grid(a, b)) throw std::invalid_argument("mismatched grids");
}
} // namespace

PhysicalField::PhysicalField(GridPtr g, std::vector<double> s)
    : grid(std::move(g)), samples(std::move(s)) {
    require_grid(grid, samples.size());
}

PhysicalField PhysicalField::zero(GridPtr g) {
    return PhysicalField(g, std::vector<double>(g->n_points, 0.0));
}

PhysicalField PhysicalField::from_function(GridPtr g, const std::function<double(double)>& f) {
    std::vector<double> s(g->n_points);
    for (int j = 0; j < g->n_points; ++j) s[j] = f(g->x(j));
    return PhysicalField(std::move(g), std::move(s));
}

bool PhysicalField::all_finite() const {
    for (double v : samples)
        if (!std::isfinite(v)) return false;
    return true;
}

SpectralField::SpectralField(GridPtr g, std::vector<cplx> c)
    : grid(std::move(g)), coefficients(std::move(c)) {
    require_grid(grid, coefficients.size());
}

SpectralField SpectralField::zero(GridPtr g) {
    return SpectralField(g, std::vector<cplx>(g->n_points, cplx(0.0, 0.0)));
}

SpectralField SpectralField::from_profile(GridPtr g, const std::function<cplx(double)>& profile) {
    std::vector<cplx> c(g->n_points);
    for (int i = 0; i < g->n_points; ++i) c[i] = profile(g->frequencies[i]);
    return SpectralField(std::move(g), std::move(c));
}

PhysicalField operator+(const PhysicalField& a, const PhysicalField& b) {
    require_same(a.grid, b.grid);
    PhysicalField out = a;
    for (size_t j = 0; j < out.samples.size(); ++j) out.samples[j] += b.samples[j];
    return out;
}

PhysicalField operator-(const PhysicalField& a, const PhysicalField& b) {
    require_same(a.grid, b.grid);
    PhysicalField out = a;
    for (size_t j = 0; j < out.samples.size(); ++j) out.samples[j] -= b.samples[j];
    return out;
}

PhysicalField operator*(double c, const PhysicalField& f) {
    PhysicalField out = f;
    for (double& v : out.samples) v *= c;
    return out;
}

PhysicalField pointwise(const PhysicalField& a, const PhysicalField& b) {
    require_same(a.grid, b.grid);
    PhysicalField out = a;
    for (size_t j = 0; j < out.samples.size(); ++j) out.samples[j] *= b.samples[j];
    return out;
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    require_same(a.grid, b.grid);
    SpectralField out = a;
    for (size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
    return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    require_same(a.grid, b.grid);
    SpectralField out = a;
    for (size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] -= b.coefficients[i];
    return out;
}

SpectralField operator*(double c, const SpectralField& f) {
    SpectralField out = f;
    for (cplx& v : out.coefficients) v *= c;
    return out;
}

} // namespace dbo
