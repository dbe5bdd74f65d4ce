#ifndef DBO_FIELD_HPP
#define DBO_FIELD_HPP

#include <complex>
#include <functional>
#include <vector>

#include "dbo/grid.hpp"

namespace dbo {

using cplx = std::complex<double>;

/// Real-space samples u(x_j) on a periodic grid.
struct PhysicalField {
    GridPtr grid;
    std::vector<double> samples;

    PhysicalField() = default;
    PhysicalField(GridPtr g, std::vector<double> s);

    static PhysicalField zero(GridPtr g);
    static PhysicalField from_function(GridPtr g, const std::function<double(double)>& f);

    bool all_finite() const;
};

/// Fourier coefficients under the convention
///   u_hat(xi) = integral e^{-i xi x} u(x) dx,
/// discretized as dx * sum_j u(x_j) e^{-i xi_k x_j}. Coefficients are
/// stored in the grid's monotone mode order (see Grid1D).
struct SpectralField {
    GridPtr grid;
    std::vector<cplx> coefficients;

    SpectralField() = default;
    SpectralField(GridPtr g, std::vector<cplx> c);

    static SpectralField zero(GridPtr g);
    /// Builds coefficients from a profile evaluated at each grid frequency.
    static SpectralField from_profile(GridPtr g, const std::function<cplx(double)>& profile);

    cplx zero_mode() const { return coefficients[grid->zero_mode_index()]; }
};

PhysicalField operator+(const PhysicalField& a, const PhysicalField& b);
PhysicalField operator-(const PhysicalField& a, const PhysicalField& b);
PhysicalField operator*(double c, const PhysicalField& f);
/// Pointwise product of samples.
PhysicalField pointwise(const PhysicalField& a, const PhysicalField& b);

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double c, const SpectralField& f);

} // namespace dbo

#endif
