#ifndef DBO_FITTING_HPP
#define DBO_FITTING_HPP

#include <vector>

namespace dbo {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Least-squares line through (x_i, y_i).
LineFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Least-squares line through (ln x_i, ln y_i); requires positive data.
LineFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace dbo

#endif
