#ifndef DBO_SEMIGROUP_HPP
#define DBO_SEMIGROUP_HPP

#include "dbo/field.hpp"

namespace dbo {

/// Linear dBO semigroup symbol psi(xi,t) = exp(-i t xi |xi| - t |xi|^{1+a}),
/// a in (0,1] (dissipation order alpha = 1 + a).
struct SemigroupSpec {
    double a = 0.5;

    explicit SemigroupSpec(double a_);
    SemigroupSpec() = default;

    double alpha() const { return 1.0 + a; }
    cplx psi(double xi, double t) const;
    double psi_abs(double xi, double t) const; // e^{-t|xi|^{1+a}}
};

/// u_hat(xi, t) = psi(xi, t) phi_hat(xi); t >= 0.
SpectralField linear_evolve(const SpectralField& phi_hat, const SemigroupSpec& spec, double t);
PhysicalField linear_evolve(const PhysicalField& phi, const SemigroupSpec& spec, double t);

} // namespace dbo

#endif
