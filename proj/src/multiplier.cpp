#include "dbo/multiplier.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/transform.hpp"

namespace dbo {

MultiplierSymbol identity_symbol() {
    return MultiplierSymbol("identity", [](double) { return cplx(1.0, 0.0); }, cplx(1.0, 0.0));
}

MultiplierSymbol hilbert_symbol() {
    return MultiplierSymbol(
        "hilbert", [](double xi) { return cplx(0.0, xi > 0.0 ? -1.0 : 1.0); }, cplx(0.0, 0.0));
}

MultiplierSymbol frac_deriv_symbol(double s) {
    if (s < 0.0) throw std::invalid_argument("frac_deriv requires s >= 0");
    const cplx at_zero = (s == 0.0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    return MultiplierSymbol(
        "frac_deriv(" + std::to_string(s) + ")",
        [s](double xi) { return cplx(std::pow(std::abs(xi), s), 0.0); }, at_zero);
}

MultiplierSymbol bessel_symbol(double s) {
    return MultiplierSymbol(
        "bessel(" + std::to_string(s) + ")",
        [s](double xi) { return cplx(std::pow(1.0 + xi * xi, 0.5 * s), 0.0); }, cplx(1.0, 0.0));
}

MultiplierSymbol ddx_symbol() {
    return MultiplierSymbol("ddx", [](double xi) { return cplx(0.0, xi); }, cplx(0.0, 0.0));
}

MultiplierSymbol product(const MultiplierSymbol& a, const MultiplierSymbol& b) {
    return MultiplierSymbol(a.name() + "*" + b.name(),
                            [a, b](double xi) { return a(xi) * b(xi); }, a(0.0) * b(0.0));
}

SpectralField apply_multiplier(const SpectralField& F, const MultiplierSymbol& m) {
    if (!F.grid) throw std::invalid_argument("field has no grid");
    std::vector<cplx> out(F.coefficients.size());
    for (size_t i = 0; i < out.size(); ++i) {
        const cplx v = m(F.grid->frequencies[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("symbol '" + m.name() + "' non-finite at grid frequency");
        out[i] = v * F.coefficients[i];
    }
    return SpectralField(F.grid, std::move(out));
}

PhysicalField apply_multiplier(const PhysicalField& f, const MultiplierSymbol& m) {
    return inverse_transform(apply_multiplier(forward_transform(f), m));
}

PhysicalField hilbert(const PhysicalField& f) { return apply_multiplier(f, hilbert_symbol()); }
PhysicalField frac_deriv(const PhysicalField& f, double s) {
    return apply_multiplier(f, frac_deriv_symbol(s));
}
PhysicalField bessel(const PhysicalField& f, double s) {
    return apply_multiplier(f, bessel_symbol(s));
}
PhysicalField ddx(const PhysicalField& f) { return apply_multiplier(f, ddx_symbol()); }

} // namespace dbo
