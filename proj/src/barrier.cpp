#include "dbo/barrier.hpp"

#include <cmath>
#include <stdexcept>

#include "dbo/norms.hpp"

namespace dbo {

WeightClass classify_weight(const WeightSpec& w, double a) {
    if (!(w.r > 0.0)) throw std::invalid_argument("weight exponent r must be positive");
    if (w.s < w.r) throw std::invalid_argument("classification requires s >= r");
    if (w.r < 1.5 + a) return WeightClass::AdmissibleGeneral;
    if (w.zero_mean_class && w.r < 2.5 + a) return WeightClass::AdmissibleZeroMean;
    return WeightClass::Barrier;
}

std::string to_string(WeightClass c) {
    switch (c) {
        case WeightClass::AdmissibleGeneral: return "admissible-general";
        case WeightClass::AdmissibleZeroMean: return "admissible-zero-mean";
        default: return "barrier";
    }
}

GrowthTable decay_barrier_scan(const std::vector<double>& times,
                               const std::vector<PhysicalField>& snapshots,
                               const std::vector<double>& r_list,
                               const std::vector<double>& R_list) {
    if (times.size() != snapshots.size()) throw std::invalid_argument("times/snapshots mismatch");
    if (R_list.size() < 3) throw std::invalid_argument("need at least 3 truncation radii");
    for (size_t i = 1; i < R_list.size(); ++i)
        if (!(R_list[i] > R_list[i - 1])) throw std::invalid_argument("R-list must increase");

    GrowthTable table;
    for (size_t ti = 0; ti < snapshots.size(); ++ti) {
        const PhysicalField& u = snapshots[ti];
        if (R_list.back() > 0.5 * u.grid->half_length + 1e-12)
            throw std::invalid_argument("R-list breaches the wrap-around guard L/2");
        for (double r : r_list) {
            std::vector<double> norms;
            norms.reserve(R_list.size());
            for (double R : R_list) norms.push_back(absx_weighted_norm(u, r, R));

            const size_t m = norms.size();
            const double inc1 =
                norms[m - 2] > 0.0 ? (norms[m - 1] - norms[m - 2]) / norms[m - 1] : 0.0;
            const double inc2 =
                norms[m - 3] > 0.0 ? (norms[m - 2] - norms[m - 3]) / norms[m - 2] : 0.0;
            std::string verdict;
            if (inc1 < table.increment_threshold && inc2 < table.increment_threshold)
                verdict = "saturating";
            else if (inc1 >= table.increment_threshold && inc2 >= table.increment_threshold)
                verdict = "diverging";
            else
                verdict = "borderline";

            for (size_t Ri = 0; Ri < R_list.size(); ++Ri)
                table.rows.push_back({times[ti], r, R_list[Ri], norms[Ri], verdict});
        }
    }
    return table;
}

} // namespace dbo
