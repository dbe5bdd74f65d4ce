#ifndef DBO_AUDITS_HPP
#define DBO_AUDITS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dbo/field.hpp"

namespace dbo {

struct RatioReport {
    double parameter = 0.0;         // nu, or beta for interpolation
    int n_samples = 0;
    int n_skipped = 0;              // zero fields skipped by convention
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    double max_ratio_refined = 0.0; // same family on the refined grid
    double refinement_spread = 0.0;
};

/// || |x|^nu H f || / || |x|^nu f || over smooth decaying samples;
/// |nu| < 1/2 required. The x = 0 sample carries zero weight for nu < 0.
RatioReport weighted_hilbert_audit(double nu, int n_samples, uint64_t seed, int n_grid = 512,
                                   int n_fine = 1024, double half_length = 16.0 * M_PI);

/// || J^{beta delta} (<x>^{(1-beta)nu} f) || /
///   (||<x>^nu f||^{1-beta} ||J^delta f||^beta) for one sample; empty when
/// both sides vanish (skipped by convention).
std::optional<double> interpolation_ratio(double beta, double delta, double nu,
                                          const PhysicalField& f);

/// Max of interpolation_ratio over a sample family; parameters in the
/// proposition's ranges: beta in (0,1), delta > 0, nu > 0.
RatioReport interpolation_audit(double beta, double delta, double nu, int n_samples, uint64_t seed,
                                int n_grid = 512, int n_fine = 1024,
                                double half_length = 16.0 * M_PI);

struct EquivalenceReport {
    double b = 0.0;
    int n_samples = 0;
    double lower = 0.0; // min of (||f|| + ||D^b f||)/||J^b f||
    double upper = 0.0; // max of the same ratio
    double lower_refined = 0.0;
    double upper_refined = 0.0;
};

/// Two-sided audit of ||f||_2 + ||Stein^b f||_2 against ||J^b f||_2 over a
/// smooth decaying family.
EquivalenceReport equivalence_audit(double b, int n_samples, uint64_t seed, int n_grid = 1024,
                                    int n_fine = 2048, double half_length = 16.0 * M_PI);

struct LeibnizBoundReport {
    double b = 0.0;
    double constant = 0.0;         // sup_x Stein^b chi / (||chi||_inf + ||chi'||_inf)
    double constant_refined = 0.0;
    double spread = 0.0;
};

/// Pointwise bound Stein^b h <= C (||h||_inf + ||h'||_inf) for the shipped
/// bump, with C checked across two x-grids.
LeibnizBoundReport leibniz_bound_audit(double b, int n_grid = 2048, int n_fine = 4096);

struct SubadditivityReport {
    double b = 0.0;
    int n_samples = 0;
    int violations = 0;     // beyond quadrature slack
    double worst_margin = 0.0; // min of rhs + slack - lhs (>= 0 when clean)
};

/// ||Stein^b(fg)|| <= ||f Stein^b g|| + ||g Stein^b f|| over random smooth
/// pairs, with the quadrature error estimates as slack.
SubadditivityReport subadditivity_audit(double b, int n_samples, uint64_t seed, int n_grid = 512,
                                        double half_length = 12.0 * M_PI);

} // namespace dbo

#endif
