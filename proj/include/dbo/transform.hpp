#ifndef DBO_TRANSFORM_HPP
#define DBO_TRANSFORM_HPP

#include "dbo/field.hpp"

namespace dbo {

/// Discrete surrogate of u_hat(xi) = integral e^{-i xi x} u(x) dx:
///   u_hat(xi_k) = dx * sum_j u(x_j) e^{-i xi_k x_j}.
/// Throws on non-finite samples.
SpectralField forward_transform(const PhysicalField& f);

/// Inverse of forward_transform; real part of
///   (1/2pi) * dxi * sum_k u_hat(xi_k) e^{+i xi_k x_j}.
PhysicalField inverse_transform(const SpectralField& F);

/// l2 norm of the imaginary residue of the inverse relative to the field
/// norm; a real-valued spectrum (Hermitian symmetric) gives ~1e-16.
double inverse_imag_residual(const SpectralField& F);

} // namespace dbo

#endif
