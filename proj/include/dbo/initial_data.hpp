#ifndef DBO_INITIAL_DATA_HPP
#define DBO_INITIAL_DATA_HPP

#include "dbo/field.hpp"

namespace dbo {

/// amplitude * exp(-x^2 / (2 width^2)); nonzero mean.
PhysicalField make_gaussian(GridPtr g, double amplitude = 1.0, double width = 1.0);

/// amplitude * x * exp(-x^2 / (2 width^2)); zero mean, nonzero first moment.
PhysicalField make_x_gaussian(GridPtr g, double amplitude = 1.0, double width = 1.0);

/// amplitude * (x^2 - width^2) * exp(-x^2 / (2 width^2)); zero mean and
/// zero first moment (phi_hat and its first derivative vanish at 0).
PhysicalField make_hermite2(GridPtr g, double amplitude = 1.0, double width = 1.0);

} // namespace dbo

#endif
