#ifndef DBO_GRID_HPP
#define DBO_GRID_HPP

#include <memory>
#include <vector>

namespace dbo {

/// Uniform periodic grid on [-L, L) with n_points samples.
///
/// Sample points are x_j = -L + j*dx, j = 0..n-1, dx = 2L/n.
/// Dual frequencies are stored monotone in the mode number k:
/// frequencies[i] = pi*(i - n/2)/L for i = 0..n-1, i.e. k = i - n/2
/// runs over [-n/2, n/2). The zero frequency sits at index n/2.
struct Grid1D {
    int n_points;
    double half_length;
    double dx;
    std::vector<double> frequencies;

    double x(int j) const { return -half_length + j * dx; }
    double dxi() const;
    int zero_mode_index() const { return n_points / 2; }
    /// Index of mode k in `frequencies` (k in [-n/2, n/2)).
    int mode_index(int k) const { return k + n_points / 2; }
};

using GridPtr = std::shared_ptr<const Grid1D>;

/// Builds a grid; throws std::invalid_argument on odd or small n_points
/// or non-positive half_length.
GridPtr make_grid(int n_points, double half_length);

/// Two grids are compatible when they discretize the same box identically.
bool same_grid(const Grid1D& a, const Grid1D& b);
bool same_grid(const GridPtr& a, const GridPtr& b);

} // namespace dbo

#endif
