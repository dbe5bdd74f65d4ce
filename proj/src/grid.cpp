#include "dbo/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace dbo {

double Grid1D::dxi() const { return M_PI / half_length; }

GridPtr make_grid(int n_points, double half_length) {
    if (n_points < 8) throw std::invalid_argument("n_points must be >= 8");
    if (n_points % 2 != 0) throw std::invalid_argument("n_points must be even");
    if (!(half_length > 0.0)) throw std::invalid_argument("half_length must be positive");

    auto g = std::make_shared<Grid1D>();
    g->n_points = n_points;
    g->half_length = half_length;
    g->dx = 2.0 * half_length / n_points;
    g->frequencies.resize(n_points);
    for (int i = 0; i < n_points; ++i)
        g->frequencies[i] = M_PI * (i - n_points / 2) / half_length;
    return g;
}

bool same_grid(const Grid1D& a, const Grid1D& b) {
    return a.n_points == b.n_points && a.half_length == b.half_length;
}

bool same_grid(const GridPtr& a, const GridPtr& b) {
    if (!a || !b) return false;
    return a == b || same_grid(*a, *b);
}

} // namespace dbo
