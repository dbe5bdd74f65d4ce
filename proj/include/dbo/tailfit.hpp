#ifndef DBO_TAILFIT_HPP
#define DBO_TAILFIT_HPP

#include <string>

#include "dbo/field.hpp"

namespace dbo {

struct TailWindowPolicy {
    double x1 = 0.0;                   // 0 selects L/8
    double x2 = 0.0;                   // 0 selects L/2
    double noise_floor_factor = 10.0;  // reject below this multiple of machine noise
};

struct TailFitReport {
    double x1 = 0.0;
    double x2 = 0.0;
    double exponent = 0.0; // p in |u(x)| ~ C |x|^p
    double residual = 0.0;
    double wraparound_margin = 0.0; // L - x2
    bool rejected = false;
    std::string reason;
};

/// Log-log fit of the side-averaged |u| against |x| on [x1, x2]. The
/// window must respect the wrap-around guard x2 <= L/2; fits on windows
/// whose amplitude sits below the noise floor are rejected, not fitted.
TailFitReport tail_exponent_fit(const PhysicalField& u, const TailWindowPolicy& policy = {});

} // namespace dbo

#endif
