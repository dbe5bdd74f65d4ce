#ifndef DBO_COMMUTATOR_HPP
#define DBO_COMMUTATOR_HPP

#include <cstdint>
#include <vector>

#include "dbo/field.hpp"

namespace dbo {

/// [D^gamma; phi] f = D^gamma(phi f) - phi D^gamma(f), gamma in (0,1).
PhysicalField commutator_apply(double gamma, const PhysicalField& phi, const PhysicalField& f);

struct CommutatorAuditReport {
    double gamma = 0.0;
    int n_samples = 0;
    double max_ratio_coarse = 0.0; // ||[D^g;phi]f|| / (||phi||_{H^2} ||f||)
    double max_ratio_fine = 0.0;
    double refinement_spread = 0.0; // |fine - coarse| / coarse
};

/// Ratio audit over random band-limited pairs, same draws realized on a
/// coarse and a fine grid (default 256 -> 1024, shared box).
CommutatorAuditReport commutator_bound_audit(double gamma, int n_samples, uint64_t seed,
                                             int n_coarse = 256, int n_fine = 1024,
                                             double half_length = 16.0 * M_PI);

} // namespace dbo

#endif
