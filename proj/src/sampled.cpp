#include "dbo/sampled.hpp"

#include <cmath>
#include <stdexcept>

namespace dbo {

double SampledFunction::eval(double x) const {
    const double u = (x - x0) / spacing;
    if (u < -0.5 || u > size() - 0.5) return 0.0;
    int m = static_cast<int>(std::lround(u));
    if (m < 1) m = 1;
    if (m > size() - 2) m = size() - 2;
    const double t = u - m; // in [-1, 1] around the stencil center
    const double fm = values[m - 1], f0 = values[m], fp = values[m + 1];
    return f0 + 0.5 * t * (fp - fm) + 0.5 * t * t * (fp - 2.0 * f0 + fm);
}

double SampledFunction::deriv_at(int i) const {
    if (i < 1) i = 1;
    if (i > size() - 2) i = size() - 2;
    return (values[i + 1] - values[i - 1]) / (2.0 * spacing);
}

double SampledFunction::deriv2_at(int i) const {
    if (i < 1) i = 1;
    if (i > size() - 2) i = size() - 2;
    return (values[i + 1] - 2.0 * values[i] + values[i - 1]) / (spacing * spacing);
}

double SampledFunction::sup_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

SampledFunction SampledFunction::from_physical(const PhysicalField& f) {
    SampledFunction s;
    s.x0 = -f.grid->half_length;
    s.spacing = f.grid->dx;
    s.values = f.samples;
    return s;
}

SampledFunction SampledFunction::on_interval(double a, double b, int n,
                                             const std::function<double(double)>& f) {
    if (n < 3 || !(b > a)) throw std::invalid_argument("bad sampling interval");
    SampledFunction s;
    s.x0 = a;
    s.spacing = (b - a) / (n - 1);
    s.values.resize(n);
    for (int i = 0; i < n; ++i) s.values[i] = f(s.x_at(i));
    return s;
}

} // namespace dbo
