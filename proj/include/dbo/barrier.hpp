#ifndef DBO_BARRIER_HPP
#define DBO_BARRIER_HPP

#include <string>
#include <vector>

#include "dbo/field.hpp"

namespace dbo {

/// Weighted-space index pair (s, r) with its admissibility class for a
/// given dissipation parameter: persistence holds for r < 3/2 + a in
/// general and up to r < 5/2 + a on the zero-mean subspace.
struct WeightSpec {
    double s = 0.0;
    double r = 0.0;
    bool zero_mean_class = false;
};

enum class WeightClass { AdmissibleGeneral, AdmissibleZeroMean, Barrier };

/// Throws when s < r (outside the theorem's hypothesis).
WeightClass classify_weight(const WeightSpec& w, double a);
std::string to_string(WeightClass c);

struct GrowthRow {
    double t = 0.0;
    double r = 0.0;
    double R = 0.0;
    double norm = 0.0; // || |x|^r u ||_{|x| <= R}
    std::string verdict;
};

struct GrowthTable {
    std::vector<GrowthRow> rows;
    double increment_threshold = 0.02; // relative growth that separates verdicts
};

/// Truncated weighted norms over increasing R; per (t, r) the last two
/// relative increments decide: both below 2% -> saturating, both at or
/// above -> diverging, otherwise borderline. R values must respect the
/// wrap-around guard R <= L/2.
GrowthTable decay_barrier_scan(const std::vector<double>& times,
                               const std::vector<PhysicalField>& snapshots,
                               const std::vector<double>& r_list,
                               const std::vector<double>& R_list);

} // namespace dbo

#endif
