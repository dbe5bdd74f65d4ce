#ifndef DBO_CUTOFF_HPP
#define DBO_CUTOFF_HPP

namespace dbo {

/// Even bump with chi = 1 on (-1,1) and support in [-2,2], blended on
/// 1 <= |xi| <= 2 by the mollifier exp(1 - 1/(1 - (|xi|-1)^2)).
struct CutoffFunction {
    double value(double xi) const;
    double deriv(double xi) const;
    double deriv2(double xi) const;
    /// sup |chi'| computed once on a fine mesh.
    double deriv_sup() const;
};

} // namespace dbo

#endif
