#ifndef DBO_NORMS_HPP
#define DBO_NORMS_HPP

#include "dbo/field.hpp"

namespace dbo {

/// ||u||_{L^2}^2 = sum_j u_j^2 dx.
double l2_norm_sq(const PhysicalField& u);
double l2_norm(const PhysicalField& u);

/// Parseval form (1/2pi) sum_k |u_hat_k|^2 dxi.
double l2_norm_sq(const SpectralField& u);
double l2_norm(const SpectralField& u);

/// ||u||_{H^s} = || <xi>^s u_hat ||_{L^2_xi} under the same quadrature.
double sobolev_norm(const SpectralField& u, double s);
double sobolev_norm(const PhysicalField& u, double s);

/// || <x>^r u ||_{L^2} restricted to |x| <= R. Throws if R > L.
double weighted_norm(const PhysicalField& u, double r, double R);

/// || |x|^r u ||_{L^2} restricted to |x| <= R (decay-barrier variant).
double absx_weighted_norm(const PhysicalField& u, double r, double R);

/// integral x u dx with the box coordinate x in [-L, L).
double first_moment(const PhysicalField& u);

/// Same moment evaluated spectrally by pairing u_hat with the exact DFT of
/// the sawtooth coordinate; agrees with first_moment to rounding.
double spectral_first_moment(const SpectralField& u);

/// integral u dx = u_hat(0).
double mean_integral(const PhysicalField& u);

} // namespace dbo

#endif
