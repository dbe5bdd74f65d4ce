// Acceptance suite: every release gate runs at its pinned tolerance and
// prints one pass/fail line. Exit status is the number of failed gates.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dbo/audits.hpp"
#include "dbo/barrier.hpp"
#include "dbo/commutator.hpp"
#include "dbo/conserved.hpp"
#include "dbo/initial_data.hpp"
#include "dbo/kernel_bounds.hpp"
#include "dbo/labcli/config.hpp"
#include "dbo/labcli/scenarios.hpp"
#include "dbo/norms.hpp"
#include "dbo/picard.hpp"
#include "dbo/semigroup.hpp"
#include "dbo/smoothing.hpp"
#include "dbo/stein_profile.hpp"
#include "dbo/stepper.hpp"
#include "dbo/tailfit.hpp"

using namespace dbo;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %-22s %s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
    return v;
}

// 1. sup_xi xi^{2 lambda} e^{-t xi^{1+a}} vs ((a+1)e/(2 lambda))^{-2l/(a+1)} t^{-2l/(a+1)}
void criterion1() {
    double worst = 0.0;
    for (double a : {0.25, 0.5, 0.75, 1.0})
        for (double lam : {0.5, 1.0, 2.0})
            for (double t : {0.1, 1.0, 10.0})
                worst = std::max(worst, verify_sup_bound(a, lam, t).rel_err);
    std::ostringstream d;
    d << "max rel err " << worst << " (tol 1e-6)";
    report(1, "kernel sup bound", worst <= 1e-6, d.str());
}

// 2. fitted exponent of || |xi|^sigma e^{-t|xi|^{1+a}} || over t in [0.1, 10]
void criterion2() {
    double worst = 0.0;
    for (double a : {0.25, 0.5, 0.75, 1.0})
        for (double s : {0.0, 0.5, 1.0}) {
            const LineFit fit = l2_bound_exponent_fit(a, s, logspace(0.1, 10.0, 12));
            const double expected = -(2.0 * s + 1.0) / (2.0 * (1.0 + a));
            worst = std::max(worst, std::abs(fit.slope - expected));
        }
    std::ostringstream d;
    d << "max slope err " << worst << " (tol 1e-3)";
    report(2, "kernel L2 law", worst <= 1e-3, d.str());
}

// 3. smoothing slope -lambda/(1+a) on critical data, within 5%
void criterion3() {
    auto g = make_grid(16384, 32.0 * M_PI);
    double worst = 0.0;
    for (auto [a, lam] : {std::pair{0.5, 0.75}, {1.0, 1.0}, {0.25, 0.5}}) {
        const SemigroupSpec spec(a);
        const SpectralField prof = spectral_critical_profile(g, 0.0, 0.01);
        const double t_lo = 1.0 / (2.0 * std::pow(100.0, 1.0 + a));
        const double t_hi = 1.0 / (2.0 * std::pow(10.0, 1.0 + a));
        const SmoothingFitReport rep = smoothing_rate_fit(spec, 0.0, lam, prof, t_lo, t_hi);
        worst = std::max(worst, std::abs(rep.fitted_slope - rep.expected_slope) /
                                    std::abs(rep.expected_slope));
    }
    std::ostringstream d;
    d << "max slope rel err " << worst * 100.0 << "% (tol 5%)";
    report(3, "smoothing rate", worst <= 0.05, d.str());
}

// 4. conservation suite on the desk-scale nonlinear run
void criterion4() {
    auto g = make_grid(4096, 128.0 * M_PI);
    const SemigroupSpec spec(0.5);
    auto phi = make_gaussian(g, 1.0, 1.0);
    MarchOptions opts;
    opts.T = 1.0;
    opts.record_series = true;

    const MarchResult r1 = march(phi, spec, TimeStepperSpec(1e-3), opts);
    const ConservationChecks c1 = conservation_checks(conserved_quantities(r1));
    const MarchResult r2 = march(phi, spec, TimeStepperSpec(5e-4), opts);
    const ConservationChecks c2 = conservation_checks(conserved_quantities(r2));

    const double shrink = c1.max_moment_residual / c2.max_moment_residual;
    const bool pass = c1.mean_drift_rel <= 1e-12 && c1.l2_monotone &&
                      c1.max_moment_residual <= 1e-4 && shrink >= 3.5;
    std::ostringstream d;
    d << "mean drift " << c1.mean_drift_rel << ", L2 monotone " << (c1.l2_monotone ? "yes" : "no")
      << ", moment residual " << c1.max_moment_residual << " (tol 1e-4), shrink x" << shrink
      << " (need >= 3.5)";
    report(4, "conservation suite", pass, d.str());
}

// 5. Picard fixed point vs marching at T = 0.05; self-convergence order
void criterion5() {
    auto g = make_grid(4096, 128.0 * M_PI);
    const SemigroupSpec spec(0.5);
    auto phi = make_gaussian(g, 1.0, 1.0);

    const PicardResult pic = picard_crosscheck(phi, spec, 0.05, 8);
    const double ratio = pic.discrepancy_vs_marching / pic.marching_self_error;

    MarchOptions opts;
    opts.T = 1.0;
    const PhysicalField u1 = march(phi, spec, TimeStepperSpec(2e-3), opts).snapshots.back();
    const PhysicalField u2 = march(phi, spec, TimeStepperSpec(1e-3), opts).snapshots.back();
    const PhysicalField u3 = march(phi, spec, TimeStepperSpec(5e-4), opts).snapshots.back();
    const double order = std::log2(l2_norm(u1 - u2) / l2_norm(u2 - u3));

    const bool pass = pic.contracted && ratio <= 10.0 && order >= 1.8 && order <= 2.2;
    std::ostringstream d;
    d << "discrepancy/self-err " << ratio << " (tol 10), order " << order << " (range [1.8,2.2])";
    report(5, "solver cross-validation", pass, d.str());
}

// 6. Stein asymptotics and the membership dichotomy
void criterion6() {
    const SteinAsymptoticsReport rep = stein_asymptotics_probe(0.25, 0.75);
    const SteinAsymptoticsReport member = stein_asymptotics_probe(1.0, 0.5);
    const double small_err = std::abs(rep.small_eta.fitted_slope - (0.25 - 0.75));
    const double large_err = std::abs(rep.large_eta.fitted_slope - (-(0.5 + 0.75)));
    const bool pass = small_err <= 0.05 && large_err <= 0.05 && !rep.in_l2 && member.in_l2;
    std::ostringstream d;
    d << "small slope " << rep.small_eta.fitted_slope << " (want -0.5 +- 0.05), large slope "
      << rep.large_eta.fitted_slope << " (want -1.25 +- 0.05), theta=gamma+1/2 divergent "
      << (!rep.in_l2 ? "yes" : "no") << ", theta<gamma+1/2 bounded " << (member.in_l2 ? "yes" : "no");
    report(6, "Stein asymptotics", pass, d.str());
}

// 7. operator audits: commutator, weighted Hilbert, interpolation
void criterion7() {
    const CommutatorAuditReport comm = commutator_bound_audit(0.5, 200, 20240601);
    bool pass = comm.max_ratio_coarse > 0.0 && comm.max_ratio_coarse < 100.0 &&
                comm.refinement_spread <= 0.10;

    double wh_spread = 0.0;
    for (double nu : {0.0, 0.25, 0.4}) {
        const RatioReport r = weighted_hilbert_audit(nu, 100, 20240602);
        wh_spread = std::max(wh_spread, r.refinement_spread);
        pass = pass && r.max_ratio > 0.0 && r.max_ratio < 100.0;
    }
    pass = pass && wh_spread <= 0.10;

    double interp_spread = 0.0;
    for (auto [be, de, nu] : {std::tuple{0.5, 2.0, 2.0}, {0.25, 4.0, 1.0}, {0.5, 1.0, 1.0}}) {
        const RatioReport r = interpolation_audit(be, de, nu, 50, 20240603);
        interp_spread = std::max(interp_spread, r.refinement_spread);
        pass = pass && r.max_ratio > 0.0 && r.max_ratio < 100.0;
    }
    pass = pass && interp_spread <= 0.10;

    std::ostringstream d;
    d << "commutator ratio " << comm.max_ratio_coarse << " spread "
      << comm.refinement_spread * 100.0 << "%, WH spread " << wh_spread * 100.0
      << "%, interp spread " << interp_spread * 100.0 << "% (tol 10%)";
    report(7, "operator audits", pass, d.str());
}

// 8. decay barriers at desk scale, a = 0.5, n = 8192
void criterion8() {
    auto g = make_grid(8192, 128.0 * M_PI);
    const double L = g->half_length;
    const SemigroupSpec spec(0.5);
    const std::vector<double> R_list = {L / 16.0, L / 8.0, L / 4.0, L / 2.0};
    auto verdict = [](const GrowthTable& t, double r) {
        for (const auto& row : t.rows)
            if (row.r == r) return row.verdict;
        return std::string("missing");
    };

    const PhysicalField u = linear_evolve(make_gaussian(g, 1.0, 1.0), spec, 1.0);
    const TailFitReport mean_fit = tail_exponent_fit(u);
    const GrowthTable mean_scan = decay_barrier_scan({1.0}, {u}, {1.5, 2.25}, R_list);

    const PhysicalField ux = linear_evolve(make_x_gaussian(g, 1.0, 1.0), spec, 1.0);
    const TailFitReport mom_fit = tail_exponent_fit(ux);
    const GrowthTable mom_scan = decay_barrier_scan({1.0}, {ux}, {2.5, 3.25}, R_list);

    const bool pass = !mean_fit.rejected && std::abs(mean_fit.exponent + 2.5) <= 0.1 &&
                      verdict(mean_scan, 1.5) == "saturating" &&
                      verdict(mean_scan, 2.25) == "diverging" && !mom_fit.rejected &&
                      std::abs(mom_fit.exponent + 3.5) <= 0.15 &&
                      verdict(mom_scan, 2.5) == "saturating" &&
                      verdict(mom_scan, 3.25) == "diverging";
    std::ostringstream d;
    d << "tails " << mean_fit.exponent << " (want -2.5 +- 0.1) / " << mom_fit.exponent
      << " (want -3.5 +- 0.15); verdicts " << verdict(mean_scan, 1.5) << "/"
      << verdict(mean_scan, 2.25) << " and " << verdict(mom_scan, 2.5) << "/"
      << verdict(mom_scan, 3.25);
    report(8, "decay barriers", pass, d.str());
}

// 9. determinism: repeated preset runs with a fixed config+seed are
// byte-identical on every data output (the manifest carries wall-clock)
void criterion9() {
    auto run_into = [](const std::string& tag) {
        fs::path dir = fs::temp_directory_path() / ("dbolab_acceptance_" + tag);
        fs::remove_all(dir);
        fs::create_directories(dir);
        labcli::RunConfig cfg = labcli::parse_config_text(
            R"({"scenario":"kernel-bounds","a":0.5,"seed":7})");
        cfg.output_dir = dir.string();
        labcli::run_scenario(cfg);
        return dir;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const fs::path d1 = run_into("a");
    const fs::path d2 = run_into("b");
    bool pass = true;
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(d1)) {
        const std::string name = entry.path().filename().string();
        if (name == "manifest.json") continue;
        pass = pass && slurp(entry.path()) == slurp(d2 / name);
        ++compared;
    }
    pass = pass && compared >= 3;
    std::ostringstream d;
    d << compared << " output files byte-identical across reruns";
    report(9, "determinism", pass, d.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%s: %d/9 criteria passed\n", failures == 0 ? "OK" : "FAILED", 9 - failures);
    return failures;
}
