#ifndef DBO_SAMPLED_HPP
#define DBO_SAMPLED_HPP

#include <vector>

#include "dbo/field.hpp"

namespace dbo {

/// Uniform samples of a function on an interval, zero-extended outside.
/// Evaluation between nodes uses quadratic Lagrange interpolation on the
/// nearest three-node stencil.
struct SampledFunction {
    double x0 = 0.0;
    double spacing = 0.0;
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
    double x_at(int i) const { return x0 + i * spacing; }
    double x_max() const { return x_at(size() - 1); }

    double eval(double x) const;
    /// Central-difference derivatives at node i (the interpolating
    /// quadratic through nodes i-1, i, i+1).
    double deriv_at(int i) const;
    double deriv2_at(int i) const;

    double sup_abs() const;

    static SampledFunction from_physical(const PhysicalField& f);
    static SampledFunction on_interval(double a, double b, int n,
                                       const std::function<double(double)>& f);
};

} // namespace dbo

#endif
