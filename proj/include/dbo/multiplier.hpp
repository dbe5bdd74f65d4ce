#ifndef DBO_MULTIPLIER_HPP
#define DBO_MULTIPLIER_HPP

#include <functional>
#include <string>

#include "dbo/field.hpp"

namespace dbo {

/// Fourier multiplier m(xi) with an explicitly declared value at xi = 0.
/// Shipped symbols: sgn(0) = 0, |0|^s = 0 for s > 0 and 1 for s = 0;
/// symbols singular at 0 are rejected at application time.
class MultiplierSymbol {
public:
    MultiplierSymbol(std::string name, std::function<cplx(double)> rule, cplx at_zero)
        : name_(std::move(name)), rule_(std::move(rule)), at_zero_(at_zero) {}

    cplx operator()(double xi) const { return xi == 0.0 ? at_zero_ : rule_(xi); }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::function<cplx(double)> rule_;
    cplx at_zero_;
};

MultiplierSymbol identity_symbol();
MultiplierSymbol hilbert_symbol();                 // -i sgn(xi)
MultiplierSymbol frac_deriv_symbol(double s);      // |xi|^s, s >= 0
MultiplierSymbol bessel_symbol(double s);          // (1+xi^2)^{s/2}
MultiplierSymbol ddx_symbol();                     // i xi
MultiplierSymbol product(const MultiplierSymbol& a, const MultiplierSymbol& b);

/// Pointwise multiplication of coefficients by m(xi_k). Throws if the
/// symbol is non-finite at any grid frequency.
SpectralField apply_multiplier(const SpectralField& F, const MultiplierSymbol& m);

PhysicalField apply_multiplier(const PhysicalField& f, const MultiplierSymbol& m);

PhysicalField hilbert(const PhysicalField& f);
PhysicalField frac_deriv(const PhysicalField& f, double s);
PhysicalField bessel(const PhysicalField& f, double s);
PhysicalField ddx(const PhysicalField& f);

} // namespace dbo

#endif
