#include "dbo/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace dbo {

namespace {

// Nodes/weights on [-1, 1].
const double gl4_x[] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                        0.8611363115940526};
const double gl4_w[] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                        0.3478548451374538};

const double gl8_x[] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                        -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                        0.7966664774136267,  0.9602898564975363};
const double gl8_w[] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                        0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                        0.2223810344533745, 0.1012285362903763};

} // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order) {
    const double* xs;
    const double* ws;
    int n;
    if (order <= 4) {
        xs = gl4_x; ws = gl4_w; n = 4;
    } else {
        xs = gl8_x; ws = gl8_w; n = 8;
    }
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += ws[i] * f(mid + half * xs[i]);
    return acc * half;
}

std::vector<double> graded_breakpoints(double a, double b, double h0, int cells_per_decade) {
    if (!(b > a)) throw std::invalid_argument("empty interval");
    if (!(h0 > 0.0)) throw std::invalid_argument("h0 must be positive");
    const double span = b - a;
    const double rho = std::pow(10.0, 1.0 / cells_per_decade);
    std::vector<double> pts;
    pts.push_back(a);
    double d = std::min(h0, span);
    while (d < span) {
        pts.push_back(a + d);
        d *= rho;
    }
    pts.push_back(b);
    return pts;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        bool grade_left, bool grade_right, double h0, int cells_per_decade,
                        int gl_order) {
    if (!(b > a)) return 0.0;
    double acc = 0.0;
    auto sum_cells = [&](const std::vector<double>& pts, bool mirror) {
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            double lo = pts[i], hi = pts[i + 1];
            if (mirror) {
                // breakpoints measured from b inward
                double nlo = a + b - hi, nhi = a + b - lo;
                lo = nlo; hi = nhi;
            }
            acc += gauss_legendre(f, lo, hi, gl_order);
        }
    };
    if (grade_left && grade_right) {
        const double mid = 0.5 * (a + b);
        sum_cells(graded_breakpoints(a, mid, h0, cells_per_decade), false);
        sum_cells(graded_breakpoints(a, mid, h0, cells_per_decade), true);
    } else if (grade_left) {
        sum_cells(graded_breakpoints(a, b, h0, cells_per_decade), false);
    } else if (grade_right) {
        sum_cells(graded_breakpoints(a, b, h0, cells_per_decade), true);
    } else {
        sum_cells(graded_breakpoints(a, b, (b - a) / 16.0, cells_per_decade), false);
    }
    return acc;
}

double halfline_power_exp_integral(double two_s, double c, double a, double exp_cut) {
    if (two_s < 0.0) throw std::invalid_argument("power must be >= 0");
    const double xi_max = std::pow(exp_cut / c, 1.0 / (1.0 + a));
    auto f = [&](double xi) { return std::pow(xi, two_s) * std::exp(-c * std::pow(xi, 1.0 + a)); };
    return integrate_graded(f, 0.0, xi_max, true, false, xi_max * 1e-12, 16, 8);
}

} // namespace dbo
