#include "dbo/initial_data.hpp"

#include <cmath>
#include <stdexcept>

namespace dbo {

namespace {
void check(double amplitude, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("width must be positive");
    if (!std::isfinite(amplitude)) throw std::invalid_argument("amplitude must be finite");
}
} // namespace

PhysicalField make_gaussian(GridPtr g, double amplitude, double width) {
    check(amplitude, width);
    return PhysicalField::from_function(g, [=](double x) {
        return amplitude * std::exp(-x * x / (2.0 * width * width));
    });
}

PhysicalField make_x_gaussian(GridPtr g, double amplitude, double width) {
    check(amplitude, width);
    return PhysicalField::from_function(g, [=](double x) {
        return amplitude * x * std::exp(-x * x / (2.0 * width * width));
    });
}

PhysicalField make_hermite2(GridPtr g, double amplitude, double width) {
    check(amplitude, width);
    return PhysicalField::from_function(g, [=](double x) {
        return amplitude * (x * x - width * width) * std::exp(-x * x / (2.0 * width * width));
    });
}

} // namespace dbo
