#include "dbo/semigroup.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/transform.hpp"

namespace dbo {

SemigroupSpec::SemigroupSpec(double a_) : a(a_) {
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("dissipation parameter a must lie in (0,1]");
}

cplx SemigroupSpec::psi(double xi, double t) const {
    if (xi == 0.0) return cplx(1.0, 0.0);
    const double phase = -t * xi * std::abs(xi);
    const double damp = std::exp(-t * std::pow(std::abs(xi), 1.0 + a));
    return damp * cplx(std::cos(phase), std::sin(phase));
}

double SemigroupSpec::psi_abs(double xi, double t) const {
    return std::exp(-t * std::pow(std::abs(xi), 1.0 + a));
}

SpectralField linear_evolve(const SpectralField& phi_hat, const SemigroupSpec& spec, double t) {
    if (t < 0.0) throw std::invalid_argument("semigroup defined for t >= 0 only");
    SpectralField out = phi_hat;
    for (size_t i = 0; i < out.coefficients.size(); ++i)
        out.coefficients[i] *= spec.psi(out.grid->frequencies[i], t);
    return out;
}

PhysicalField linear_evolve(const PhysicalField& phi, const SemigroupSpec& spec, double t) {
    return inverse_transform(linear_evolve(forward_transform(phi), spec, t));
}

} // namespace dbo
