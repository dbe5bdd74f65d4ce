#include "dbo/labcli/scenarios.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dbo/audits.hpp"
#include "dbo/barrier.hpp"
#include "dbo/commutator.hpp"
#include "dbo/conserved.hpp"
#include "dbo/initial_data.hpp"
#include "dbo/kernel_bounds.hpp"
#include "dbo/labcli/manifest.hpp"
#include "dbo/labcli/report.hpp"
#include "dbo/labcli/snapshot.hpp"
#include "dbo/norms.hpp"
#include "dbo/picard.hpp"
#include "dbo/semigroup.hpp"
#include "dbo/smoothing.hpp"
#include "dbo/stein_profile.hpp"
#include "dbo/stepper.hpp"
#include "dbo/tailfit.hpp"
#include "dbo/transform.hpp"

namespace dbo::labcli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct GuardError {
    std::string reason;
    double last_valid_time;
};

PhysicalField build_initial_data(const RunConfig& cfg, const GridPtr& grid) {
    const auto& d = cfg.data;
    if (d.preset == "gaussian") return make_gaussian(grid, d.amplitude, d.width);
    if (d.preset == "x-gaussian" || d.preset == "x-times-gaussian")
        return make_x_gaussian(grid, d.amplitude, d.width);
    if (d.preset == "hermite2") return make_hermite2(grid, d.amplitude, d.width);
    if (d.preset == "zero") return PhysicalField::zero(grid);
    if (d.preset == "spectral-critical")
        return inverse_transform(spectral_critical_profile(grid, d.s, d.eps));
    if (d.preset == "custom") {
        PhysicalField f = read_snapshot(d.samples_file);
        if (!same_grid(f.grid, grid))
            throw SchemaError("custom samples file does not match the configured grid");
        if (!f.all_finite()) throw GuardError{"non-finite values in custom samples", 0.0};
        return f;
    }
    throw SchemaError("unknown data preset '" + d.preset + "'");
}

std::string snap_name(const fs::path& dir, int index) {
    return (dir / ("snapshot_" + std::to_string(index) + ".bin")).string();
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
    return v;
}

// ----------------------------------------------------------------- presets

void run_kernel_bounds(const RunConfig& cfg, const fs::path& dir, RunManifest& man) {
    const std::vector<double> lambdas = {0.5, 1.0, 2.0};
    const std::vector<double> sigmas = {0.0, 0.5, 1.0};
    const std::vector<double> ts = {0.1, 1.0, 10.0};

    CsvWriter sup_csv({"a", "lambda", "t", "measured", "closed_form", "rel_err"});
    double worst_sup = 0.0;
    for (double lam : lambdas)
        for (double t : ts) {
            const KernelBoundReport r = verify_sup_bound(cfg.a, lam, t);
            sup_csv.add_row(std::vector<double>{r.a, r.param, r.t, r.measured, r.closed_form,
                                                r.rel_err});
            worst_sup = std::max(worst_sup, r.rel_err);
        }
    sup_csv.write((dir / "kernel_sup.csv").string());
    man.add_check("kernel_sup_rel_err", worst_sup, "<=", 1e-6);

    CsvWriter l2_csv({"a", "sigma", "t", "measured", "closed_form", "rel_err"});
    ordered_json fits = ordered_json::array();
    double worst_l2 = 0.0, worst_slope = 0.0;
    for (double sg : sigmas) {
        for (double t : ts) {
            const KernelBoundReport r = verify_l2_bound(cfg.a, sg, t);
            l2_csv.add_row(std::vector<double>{r.a, r.param, r.t, r.measured, r.closed_form,
                                               r.rel_err});
            worst_l2 = std::max(worst_l2, r.rel_err);
        }
        const LineFit fit = l2_bound_exponent_fit(cfg.a, sg, logspace(0.1, 10.0, 12));
        const double expected = -(2.0 * sg + 1.0) / (2.0 * (1.0 + cfg.a));
        worst_slope = std::max(worst_slope, std::abs(fit.slope - expected));
        fits.push_back({{"sigma", sg},
                        {"fitted_slope", fit.slope},
                        {"expected_slope", expected},
                        {"rms_residual", fit.rms_residual}});
    }
    l2_csv.write((dir / "kernel_l2.csv").string());
    write_json_report((dir / "kernel_l2_fits.json").string(), fits, "kernel-l2-fits");
    man.add_check("kernel_l2_rel_err", worst_l2, "<=", 1e-6);
    man.add_check("kernel_l2_slope_err", worst_slope, "<=", 1e-3);
}

void run_smoothing_rates(const RunConfig& cfg, const fs::path& dir, RunManifest& man) {
    std::vector<std::pair<double, double>> pairs;
    if (!cfg.diagnostics.lambda_list.empty()) {
        for (double lam : cfg.diagnostics.lambda_list) pairs.emplace_back(cfg.a, lam);
    } else {
        pairs = {{0.5, 0.75}, {1.0, 1.0}, {0.25, 0.5}};
    }

    auto grid = make_grid(16384, 32.0 * M_PI);
    CsvWriter csv({"a", "lambda", "t", "h_norm"});
    ordered_json fits = ordered_json::array();
    double worst = 0.0;
    for (auto [a, lam] : pairs) {
        const SemigroupSpec spec(a);
        const SpectralField prof = spectral_critical_profile(grid, 0.0, cfg.data.eps);
        // window pinned so the active scale (2t)^{-1/(1+a)} spans [10, 100],
        // inside the grid's resolved power-law range
        const double t_lo = 1.0 / (2.0 * std::pow(100.0, 1.0 + a));
        const double t_hi = 1.0 / (2.0 * std::pow(10.0, 1.0 + a));
        const SmoothingFitReport rep = smoothing_rate_fit(spec, 0.0, lam, prof, t_lo, t_hi);
        for (size_t i = 0; i < rep.times.size(); ++i)
            csv.add_row(std::vector<double>{a, lam, rep.times[i], rep.norms[i]});
        const double rel = std::abs(rep.fitted_slope - rep.expected_slope) /
                           std::abs(rep.expected_slope);
        worst = std::max(worst, rel);
        fits.push_back({{"a", a},
                        {"lambda", lam},
                        {"fitted_slope", rep.fitted_slope},
                        {"expected_slope", rep.expected_slope},
                        {"residual", rep.residual}});
    }
    csv.write((dir / "smoothing.csv").string());
    write_json_report((dir / "smoothing_fits.json").string(), fits, "smoothing-fits");
    man.add_check("smoothing_slope_rel_err", worst, "<=", 0.05);
}

void run_conservation(const RunConfig& cfg, const fs::path& dir, RunManifest& man) {
    auto grid = make_grid(cfg.grid.n_points, cfg.grid.half_length);
    const PhysicalField phi = build_initial_data(cfg, grid);
    const SemigroupSpec spec(cfg.a);
    const TimeStepperSpec stepper(cfg.stepper.dt, cfg.stepper.dealias_fraction);

    MarchOptions opts;
    opts.T = cfg.stepper.T;
    opts.record_series = true;
    opts.snapshot_times = cfg.diagnostics.snapshot_times;
    const MarchResult run = march(phi, spec, stepper, opts);
    if (run.aborted) throw GuardError{run.guard_reason, run.last_valid_time};

    const double R = cfg.diagnostics.R_list.empty() ? cfg.grid.half_length / 2.0
                                                    : cfg.diagnostics.R_list.back();
    const DiagnosticsSeries series =
        conserved_quantities(run, cfg.diagnostics.s_list, cfg.diagnostics.r_list, R);
    CsvWriter csv({"time", "l2_norm", "mean_re", "mean_im", "first_moment",
                   "dissipation_residual", "moment_residual", "moment_residual_raw",
                   "moment_truncation"});
    for (size_t i = 0; i < series.times.size(); ++i)
        csv.add_row(std::vector<double>{series.times[i], series.l2_norm[i], series.mean_re[i],
                                        series.mean_im[i], series.first_moment[i],
                                        series.dissipation_residual[i], series.moment_residual[i],
                                        series.moment_residual_raw[i],
                                        series.moment_truncation[i]});
    csv.write((dir / "conservation.csv").string());

    if (!series.hs_norms.empty() || !series.weighted_norms.empty()) {
        CsvWriter norms({"time", "kind", "index", "radius", "norm"});
        for (size_t i = 0; i < run.snapshot_times.size(); ++i) {
            for (const auto& [s, vals] : series.hs_norms)
                norms.add_row(std::vector<std::string>{fmt17(run.snapshot_times[i]), "hs",
                                                       fmt17(s), fmt17(0.0), fmt17(vals[i])});
            for (const auto& [r, vals] : series.weighted_norms)
                norms.add_row(std::vector<std::string>{fmt17(run.snapshot_times[i]), "weighted",
                                                       fmt17(r), fmt17(R), fmt17(vals[i])});
        }
        norms.write((dir / "snapshot_norms.csv").string());
    }

    for (size_t i = 0; i < run.snapshots.size(); ++i)
        write_snapshot(snap_name(dir, static_cast<int>(i)), run.snapshots[i]);

    const ConservationChecks checks = conservation_checks(series);
    man.add_check("mean_mode_drift_rel", checks.mean_drift_rel, "<=", 1e-12);
    man.add_check("l2_monotone_violations", checks.l2_monotone ? 0.0 : 1.0, "<=", 0.0);
    man.add_check("first_moment_residual", checks.max_moment_residual, "<=", 1e-4);
}

void write_growth_table(const GrowthTable& table, const fs::path& path) {
    CsvWriter csv({"t", "r", "R", "norm", "verdict"});
    for (const auto& row : table.rows)
        csv.add_row(std::vector<std::string>{fmt17(row.t), fmt17(row.r), fmt17(row.R),
                                             fmt17(row.norm), row.verdict});
    csv.write(path.string());
}

std::string verdict_for(const GrowthTable& table, double t, double r) {
    for (const auto& row : table.rows)
        if (row.t == t && row.r == r) return row.verdict;
    return "missing";
}

void run_barrier(const RunConfig& cfg, const fs::path& dir, RunManifest& man, bool zero_mean) {
    auto grid = make_grid(cfg.grid.n_points, cfg.grid.half_length);
    const double L = cfg.grid.half_length;
    const SemigroupSpec spec(cfg.a);
    const double threshold = (zero_mean ? 2.5 : 1.5) + cfg.a;
    const double expected_exponent = zero_mean ? -(3.0 + cfg.a) : -(2.0 + cfg.a);
    const double exponent_tol = zero_mean ? 0.15 : 0.1;

    std::vector<double> r_list = cfg.diagnostics.r_list;
    if (r_list.empty()) r_list = {threshold - 0.5, threshold, threshold + 0.25};
    std::vector<double> R_list = cfg.diagnostics.R_list;
    if (R_list.empty()) R_list = {L / 16.0, L / 8.0, L / 4.0, L / 2.0};
    std::vector<double> times = cfg.diagnostics.snapshot_times;
    if (times.empty()) times = {1.0};

    if (cfg.data.preset == "hermite2") {
        // nonlinear run from zero-mean, zero-moment data: the first moment
        // is pumped by (1/2)||u||^2 and the solution grows the |x|^{-(3+a)}
        // tail of a nonzero-moment field. The truncated-norm divergence at
        // r = 5/2+a sits far beyond any box (the core dominates until
        // R ~ 1e9 at unit amplitude), so the checks pin the mechanism: the
        // moment growth rate and the generated tail exponent.
        const PhysicalField phi = build_initial_data(cfg, grid);
        MarchOptions opts;
        opts.T = cfg.stepper.T;
        opts.record_series = true;
        opts.snapshot_times = {cfg.stepper.T};
        const MarchResult run =
            march(phi, spec, TimeStepperSpec(cfg.stepper.dt, cfg.stepper.dealias_fraction), opts);
        if (run.aborted) throw GuardError{run.guard_reason, run.last_valid_time};

        const double m0 = run.series.first_moment.front();
        const double mT = run.series.first_moment.back();
        const double uT2 = run.series.l2_norm.back() * run.series.l2_norm.back();
        const double floor_growth = 0.5 * cfg.stepper.T * 0.5 * uT2;
        man.add_check("first_moment_growth_ratio", (mT - m0) / floor_growth, ">=", 1.0);

        const TailFitReport tail = tail_exponent_fit(run.snapshots.back());
        man.add_check("generated_tail_exponent", tail.exponent, "range", 0.0,
                      expected_exponent - 0.25, expected_exponent + 0.25);

        const GrowthTable table =
            decay_barrier_scan(run.snapshot_times, run.snapshots, r_list, R_list);
        write_growth_table(table, dir / "growth_table.csv");
        for (size_t i = 0; i < run.snapshots.size(); ++i)
            write_snapshot(snap_name(dir, static_cast<int>(i)), run.snapshots[i]);
        return;
    }

    const PhysicalField phi = build_initial_data(cfg, grid);
    std::vector<PhysicalField> snaps;
    snaps.reserve(times.size());
    for (double t : times) snaps.push_back(linear_evolve(phi, spec, t));

    const TailFitReport tail = tail_exponent_fit(snaps.back());
    ordered_json tail_json = {{"x1", tail.x1},
                              {"x2", tail.x2},
                              {"exponent", tail.exponent},
                              {"residual", tail.residual},
                              {"wraparound_margin", tail.wraparound_margin},
                              {"rejected", tail.rejected},
                              {"reason", tail.reason}};
    write_json_report((dir / "tail_fit.json").string(), tail_json, "tail-fit");
    man.add_check("tail_exponent", tail.exponent, "range", 0.0,
                  expected_exponent - exponent_tol, expected_exponent + exponent_tol);

    const GrowthTable table = decay_barrier_scan(times, snaps, r_list, R_list);
    write_growth_table(table, dir / "growth_table.csv");
    const double t_last = times.back();
    man.add_check("below_threshold_saturating",
                  verdict_for(table, t_last, r_list.front()) == "saturating" ? 1.0 : 0.0, ">=",
                  1.0);
    man.add_check("above_threshold_diverging",
                  verdict_for(table, t_last, r_list.back()) == "diverging" ? 1.0 : 0.0, ">=", 1.0);

    for (size_t i = 0; i < snaps.size(); ++i)
        write_snapshot(snap_name(dir, static_cast<int>(i)), snaps[i]);
}

void run_stein_asymptotics(const RunConfig& cfg, const fs::path& dir, RunManifest& man) {
    const SteinAsymptoticsReport rep = stein_asymptotics_probe(cfg.gamma, cfg.theta);

    CsvWriter shells({"eps", "truncated_norm"});
    for (size_t i = 0; i < rep.shells.eps.size(); ++i)
        shells.add_row(std::vector<double>{rep.shells.eps[i], rep.shells.truncated_norm[i]});
    shells.write((dir / "stein_shells.csv").string());

    CsvWriter values({"regime", "eta", "value"});
    for (size_t i = 0; i < rep.small_etas.size(); ++i)
        values.add_row(std::vector<std::string>{"small", fmt17(rep.small_etas[i]),
                                                fmt17(rep.small_values[i])});
    for (size_t i = 0; i < rep.large_etas.size(); ++i)
        values.add_row(std::vector<std::string>{"large", fmt17(rep.large_etas[i]),
                                                fmt17(rep.large_values[i])});
    values.write((dir / "stein_eta.csv").string());

    ordered_json body;
    body["gamma"] = cfg.gamma;
    body["theta"] = cfg.theta;
    body["log_case"] = rep.log_case;
    body["small_eta"] = {{"slope", rep.small_eta.fitted_slope},
                         {"window", {rep.small_eta.window_lo, rep.small_eta.window_hi}},
                         {"residual", rep.small_eta.residual}};
    body["large_eta"] = {{"slope", rep.large_eta.fitted_slope},
                         {"window", {rep.large_eta.window_lo, rep.large_eta.window_hi}},
                         {"residual", rep.large_eta.residual}};
    body["in_l2"] = rep.in_l2;
    body["non_monotone_flag"] = rep.non_monotone_flag;

    if (cfg.gamma < cfg.theta)
        man.add_check("small_eta_slope", rep.small_eta.fitted_slope, "range", 0.0,
                      (cfg.gamma - cfg.theta) - 0.05, (cfg.gamma - cfg.theta) + 0.05);
    man.add_check("large_eta_slope", rep.large_eta.fitted_slope, "range", 0.0,
                  -(0.5 + cfg.theta) - 0.05, -(0.5 + cfg.theta) + 0.05);
    const bool expect_divergent = cfg.theta >= cfg.gamma + 0.5;
    man.add_check("membership_verdict_matches",
                  (rep.in_l2 == !expect_divergent) ? 1.0 : 0.0, ">=", 1.0);

    // companion probes: a clean membership case and the non-membership
    // envelope at gamma = 0.25
    const SteinAsymptoticsReport member = stein_asymptotics_probe(1.0, 0.5);
    man.add_check("member_case_in_l2", member.in_l2 ? 1.0 : 0.0, ">=", 1.0);
    const EnvelopeReport env = nonmembership_envelope(0.25, logspace(1e-5, 0.5, 12));
    man.add_check("envelope_holds", env.holds ? 1.0 : 0.0, ">=", 1.0);
    man.add_check("envelope_diverging", env.diverging ? 1.0 : 0.0, ">=", 1.0);
    body["member_case_in_l2"] = member.in_l2;
    body["envelope_holds"] = env.holds;
    body["envelope_diverging"] = env.diverging;
    write_json_report((dir / "stein_fits.json").string(), body, "stein-asymptotics");
}

void run_inequality_audits(const RunConfig& cfg, const fs::path& dir, RunManifest& man) {
    ordered_json body;

    const CommutatorAuditReport comm = commutator_bound_audit(0.5, 200, cfg.seed);
    body["commutator"] = {{"gamma", comm.gamma},
                          {"max_ratio_coarse", comm.max_ratio_coarse},
                          {"max_ratio_fine", comm.max_ratio_fine},
                          {"refinement_spread", comm.refinement_spread}};
    man.add_check("commutator_refinement_spread", comm.refinement_spread, "<=", 0.10);

    ordered_json wh = ordered_json::array();
    double worst_wh_spread = 0.0;
    for (double nu : {0.0, 0.25, 0.4}) {
        const RatioReport r = weighted_hilbert_audit(nu, 100, cfg.seed + 17);
        wh.push_back({{"nu", nu},
                      {"max_ratio", r.max_ratio},
                      {"max_ratio_refined", r.max_ratio_refined},
                      {"refinement_spread", r.refinement_spread}});
        worst_wh_spread = std::max(worst_wh_spread, r.refinement_spread);
    }
    body["weighted_hilbert"] = wh;
    man.add_check("weighted_hilbert_spread", worst_wh_spread, "<=", 0.10);

    ordered_json interp = ordered_json::array();
    double worst_interp_spread = 0.0;
    const std::vector<std::array<double, 3>> triples = {
        {0.5, 2.0, 2.0}, {0.25, 4.0, 1.0}, {0.5, 1.0, 1.0}};
    for (const auto& tr : triples) {
        const RatioReport r = interpolation_audit(tr[0], tr[1], tr[2], 50, cfg.seed + 29);
        interp.push_back({{"beta", tr[0]},
                          {"delta", tr[1]},
                          {"nu", tr[2]},
                          {"max_ratio", r.max_ratio},
                          {"max_ratio_refined", r.max_ratio_refined},
                          {"refinement_spread", r.refinement_spread},
                          {"skipped", r.n_skipped}});
        worst_interp_spread = std::max(worst_interp_spread, r.refinement_spread);
    }
    body["interpolation"] = interp;
    man.add_check("interpolation_spread", worst_interp_spread, "<=", 0.10);

    ordered_json equiv = ordered_json::array();
    for (double b : {0.25, 0.5, 0.75}) {
        const EquivalenceReport r = equivalence_audit(b, 8, cfg.seed + 43);
        equiv.push_back({{"b", b},
                         {"lower", r.lower},
                         {"upper", r.upper},
                         {"lower_refined", r.lower_refined},
                         {"upper_refined", r.upper_refined}});
    }
    body["equivalence"] = equiv;

    const LeibnizBoundReport leib = leibniz_bound_audit(0.5);
    body["leibniz"] = {{"b", leib.b},
                       {"constant", leib.constant},
                       {"constant_refined", leib.constant_refined},
                       {"spread", leib.spread}};
    man.add_check("leibniz_constant_spread", leib.spread, "<=", 0.10);

    const SubadditivityReport sub = subadditivity_audit(0.5, 100, cfg.seed + 71);
    body["subadditivity"] = {{"b", sub.b},
                             {"violations", sub.violations},
                             {"worst_margin", sub.worst_margin}};
    man.add_check("subadditivity_violations", sub.violations, "<=", 0.0);

    write_json_report((dir / "audits.json").string(), body, "inequality-audits");
}

void run_picard(const RunConfig& cfg, const fs::path& dir, RunManifest& man) {
    auto grid = make_grid(cfg.grid.n_points, cfg.grid.half_length);
    const PhysicalField phi = build_initial_data(cfg, grid);
    const SemigroupSpec spec(cfg.a);

    const PicardResult pic = picard_crosscheck(phi, spec, 0.05, 8);

    // self-convergence order of the marching scheme on the configured horizon
    MarchOptions opts;
    opts.T = cfg.stepper.T;
    const double dt = cfg.stepper.dt;
    const PhysicalField u1 = march(phi, spec, TimeStepperSpec(dt), opts).snapshots.back();
    const PhysicalField u2 = march(phi, spec, TimeStepperSpec(dt / 2.0), opts).snapshots.back();
    const PhysicalField u3 = march(phi, spec, TimeStepperSpec(dt / 4.0), opts).snapshots.back();
    const double e1 = l2_norm(u1 - u2);
    const double e2 = l2_norm(u2 - u3);
    const double order = std::log2(e1 / e2);

    ordered_json body;
    body["iterate_distances"] = pic.iterate_distances;
    body["contracted"] = pic.contracted;
    body["discrepancy_vs_marching"] = pic.discrepancy_vs_marching;
    body["marching_self_error"] = pic.marching_self_error;
    body["self_convergence_order"] = order;
    write_json_report((dir / "picard.json").string(), body, "picard-crosscheck");

    man.add_check("picard_contracted", pic.contracted ? 1.0 : 0.0, ">=", 1.0);
    man.add_check("picard_discrepancy_ratio",
                  pic.discrepancy_vs_marching / std::max(pic.marching_self_error, 1e-300), "<=",
                  10.0);
    man.add_check("self_convergence_order", order, "range", 0.0, 1.8, 2.2);
}

} // namespace

int run_scenario(const RunConfig& cfg) {
    const fs::path dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + cfg.output_dir + "'");

    RunManifest man;
    man.config_echo = cfg.echo;
    const auto t0 = std::chrono::steady_clock::now();
    int code = kPass;
    try {
        if (cfg.scenario == "kernel-bounds") run_kernel_bounds(cfg, dir, man);
        else if (cfg.scenario == "smoothing-rates") run_smoothing_rates(cfg, dir, man);
        else if (cfg.scenario == "conservation") run_conservation(cfg, dir, man);
        else if (cfg.scenario == "mean-barrier") run_barrier(cfg, dir, man, false);
        else if (cfg.scenario == "moment-barrier") run_barrier(cfg, dir, man, true);
        else if (cfg.scenario == "stein-asymptotics") run_stein_asymptotics(cfg, dir, man);
        else if (cfg.scenario == "inequality-audits") run_inequality_audits(cfg, dir, man);
        else if (cfg.scenario == "picard-crosscheck") run_picard(cfg, dir, man);
        else throw SchemaError("unknown scenario '" + cfg.scenario + "'");
        man.status = man.all_pass() ? "pass" : "check-failure";
        code = man.all_pass() ? kPass : kCheckFailure;
    } catch (const GuardError& g) {
        man.status = "runtime-guard";
        man.guard_reason = g.reason;
        man.last_valid_time = g.last_valid_time;
        code = kRuntimeGuard;
    }
    man.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest((dir / "manifest.json").string(), man);
    return code;
}

int run_config_file(const std::string& path) {
    RunConfig cfg;
    try {
        cfg = load_config(path);
    } catch (const SchemaError& e) {
        // manifest still written: recover the output directory on a
        // best-effort basis from the raw text
        std::string out_dir = ".";
        try {
            std::ifstream in(path);
            std::ostringstream ss;
            ss << in.rdbuf();
            auto j = nlohmann::ordered_json::parse(ss.str(), nullptr, false);
            if (j.is_object() && j.contains("output_dir") && j["output_dir"].is_string())
                out_dir = j["output_dir"].get<std::string>();
            RunManifest man;
            man.config_echo = j.is_discarded() ? nlohmann::ordered_json(nullptr) : j;
            man.status = "schema-error";
            man.guard_reason = e.what();
            fs::create_directories(out_dir);
            write_manifest((fs::path(out_dir) / "manifest.json").string(), man);
        } catch (...) {
        }
        std::cerr << "schema error: " << e.what() << "\n";
        return kSchemaError;
    }
    try {
        return run_scenario(cfg);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kSchemaError;
    }
}

void print_presets() {
    std::cout << "kernel-bounds      sup and L2 decay laws of the semigroup kernel\n"
              << "smoothing-rates    H^{s+lambda} gain of U(t) on critical data\n"
              << "conservation       mean mode, L2 monotonicity, first-moment identity\n"
              << "mean-barrier       tail exponent and weighted-norm growth, nonzero mean\n"
              << "moment-barrier     same scan around the zero-mean threshold\n"
              << "stein-asymptotics  pointwise Stein-derivative asymptotics and membership\n"
              << "inequality-audits  commutator, weighted Hilbert, interpolation, Leibniz\n"
              << "picard-crosscheck  Duhamel fixed point vs time marching\n";
}

} // namespace dbo::labcli
