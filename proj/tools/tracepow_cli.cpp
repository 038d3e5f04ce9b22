// Command-line front end: experiment grids, single estimations, entanglement
// detection and bound evaluation, with CSV/JSON output.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tracepow/applications.hpp"
#include "tracepow/bounds.hpp"
#include "tracepow/scenarios.hpp"
#include "tracepow/serialization.hpp"

using namespace tracepow;

namespace {

constexpr int kExitBoundFailure = 2;

struct CommonOpts {
    std::vector<std::string> dists;
    int r = 16;
    int k = 32;
    double eps = 1e-3;
    int t = 0;  // 0 = derive from the rank formula
    std::uint64_t seed = 0;
    int repeats = 20;
    std::string format = "csv";
    std::string out;
    bool exact_oracle = false;
    std::string rank_formula = "effrank";
};

std::vector<DistributionKind> parse_kinds(const CommonOpts& opts) {
    std::vector<std::string> names = opts.dists;
    if (names.empty()) names = {"geometric", "arithmetic", "one_dominant", "identical"};
    std::vector<DistributionKind> kinds;
    for (const auto& name : names) {
        const auto tag = distribution_from_name(name);
        if (!tag) throw CLI::ValidationError("--dist", "unknown distribution '" + name + "'");
        DistributionKind kind;
        kind.tag = *tag;
        kind.r = opts.r;
        kind.seed = opts.seed;
        kinds.push_back(kind);
    }
    return kinds;
}

// "effrank", "appendixb" or "fixed:<n>".
std::pair<RankFormula, int> parse_rank_formula(const std::string& text) {
    if (text == "effrank") return {RankFormula::effective, 0};
    if (text == "appendixb") return {RankFormula::appendix_b, 0};
    if (text.rfind("fixed:", 0) == 0) {
        const int n = std::stoi(text.substr(6));
        if (n < 1) throw CLI::ValidationError("--rank-formula", "fixed order must be >= 1");
        return {RankFormula::fixed, n};
    }
    throw CLI::ValidationError("--rank-formula",
                               "expected effrank, appendixb or fixed:<n>, got '" + text + "'");
}

int write_report(const ScenarioReport& report, const CommonOpts& opts) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opts.out.empty()) {
        file.open(opts.out);
        if (!file) throw CLI::ValidationError("--out", "cannot open '" + opts.out + "'");
        out = &file;
    }
    if (opts.format == "json") {
        emit_json(report, *out);
    } else {
        emit_csv(report, *out);
    }
    return report.all_satisfied() ? 0 : kExitBoundFailure;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_grid_flags) {
    cmd->add_option("--dist", opts.dists,
                    "distributions: geometric, arithmetic, one_dominant, identical");
    cmd->add_option("--r", opts.r, "spectrum rank")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "master seed");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out, "output file (default: stdout)");
    if (with_grid_flags) {
        cmd->add_option("--repeats", opts.repeats, "seeds per grid point")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--rank-formula", opts.rank_formula,
                        "effrank, appendixb or fixed:<n>");
    }
}

int run_scenario1_command(const CommonOpts& opts, bool appendix_b) {
    auto [formula, fixed_t] = parse_rank_formula(opts.rank_formula);
    if (appendix_b) formula = RankFormula::appendix_b;
    const auto report = run_scenario1(parse_kinds(opts), kScenarioKs, kScenarioEpsilons,
                                      formula, fixed_t, opts.repeats, opts.seed);
    return write_report(report, opts);
}

int run_estimate_command(const CommonOpts& opts) {
    DistributionKind kind;
    kind.r = opts.r;
    kind.seed = opts.seed;
    if (!opts.dists.empty()) {
        const auto tag = distribution_from_name(opts.dists.front());
        if (!tag) throw CLI::ValidationError("--dist", "unknown distribution");
        kind.tag = *tag;
    }
    const Spectrum s = gen_spectrum(kind);

    EstimationConfig cfg;
    cfg.k = opts.k;
    cfg.epsilon = opts.eps;
    cfg.seed = opts.seed;
    cfg.exact_oracle = opts.exact_oracle;
    const auto [formula, fixed_t] = parse_rank_formula(opts.rank_formula);
    if (opts.t > 0) {
        cfg.t = opts.t;
    } else if (formula == RankFormula::fixed) {
        cfg.t = fixed_t;
    } else if (formula == RankFormula::appendix_b) {
        cfg.t = effective_rank_alt(cfg.k, cfg.epsilon, s.rank());
    } else {
        cfg.t = effective_rank(cfg.k, cfg.epsilon, s.rank());
    }

    const auto est = run_algorithm1(s, cfg);
    json payload = estimate_to_json(est);
    payload["spectrum"] = spectrum_to_json(s);
    const auto exact = power_sums(s, cfg.k);
    const auto report = check_series(exact, est.q, rational_from_double(cfg.epsilon), 1,
                                     cfg.k, "estimate vs exact oracle");
    payload["max_error"] = report.empirical;
    payload["epsilon"] = report.theoretical;
    payload["within_epsilon"] = report.satisfied;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opts.out.empty()) {
        file.open(opts.out);
        if (!file) throw CLI::ValidationError("--out", "cannot open '" + opts.out + "'");
        out = &file;
    }
    *out << payload.dump(2) << '\n';
    return report.satisfied ? 0 : kExitBoundFailure;
}

int run_detect_command(const std::string& input, int dim_a, int dim_b, int order) {
    std::ifstream in(input);
    if (!in) throw CLI::ValidationError("--in", "cannot open '" + input + "'");
    json j;
    in >> j;
    const DenseHermitian rho = hermitian_from_json(j);
    if (dim_a * dim_b != rho.dim) {
        throw CLI::ValidationError("--dim-a/--dim-b", "factor dimensions do not match input");
    }
    const int t = order > 0 ? order : rho.dim;
    const auto moments = pt_moments(rho, dim_a, dim_b, t);
    const auto verdict = detect_entanglement(moments, t);
    json out{{"entangled", verdict.entangled},
             {"witness_index", verdict.witness_index},
             {"pt_moments", moments}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_bounds_command(const CommonOpts& opts) {
    const int t = opts.t > 0 ? opts.t : effective_rank(opts.k, opts.eps, opts.r);
    json out{
        {"k", opts.k},
        {"epsilon", opts.eps},
        {"r", opts.r},
        {"t", t},
        {"effective_rank", effective_rank(opts.k, opts.eps, opts.r)},
        {"lemma2_bound", t <= opts.r ? to_double(lemma2_bound(opts.k, t, opts.r)) : 0.0},
        {"esp_max_bound", t <= opts.r ? to_double(esp_max_bound(t, opts.r)) : 0.0},
        {"threshold_rank", theorem_threshold(opts.k, t, opts.eps, ThresholdVariant::rank)},
        {"threshold_effective",
         theorem_threshold(opts.k, t, opts.eps, ThresholdVariant::effective)},
        {"scenario_runs", scenario_runs(opts.k, opts.eps)},
    };
    if (opts.k / opts.eps > std::exp(1.0)) {
        out["appendixb_rank"] = effective_rank_alt(opts.k, opts.eps, opts.r);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace-power estimation toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* s1 = app.add_subcommand("scenario1", "sampled estimation over the (k, eps) grid");
    add_common(s1, opts, true);

    auto* s2 = app.add_subcommand("scenario2", "truncation-error sweep with exact seeds");
    add_common(s2, opts, false);
    s2->add_option("--k", opts.k, "target power")->check(CLI::PositiveNumber);

    auto* ab = app.add_subcommand("appendixb", "scenario 1 with the double-log rank formula");
    add_common(ab, opts, true);

    auto* est = app.add_subcommand("estimate", "single estimation run, JSON output");
    add_common(est, opts, true);
    est->add_option("--k", opts.k, "target power")->check(CLI::PositiveNumber);
    est->add_option("--eps", opts.eps, "additive error target")->check(CLI::PositiveNumber);
    est->add_option("--t", opts.t, "truncation order override")->check(CLI::PositiveNumber);
    est->add_flag("--exact-oracle", opts.exact_oracle, "bypass sampling, use exact moments");

    std::string detect_in;
    int dim_a = 2, dim_b = 2, detect_order = 0;
    auto* det = app.add_subcommand("detect", "PT-moment entanglement detection");
    det->add_option("--in", detect_in, "density matrix JSON ({dim, re, im})")->required();
    det->add_option("--dim-a", dim_a, "first factor dimension")->check(CLI::PositiveNumber);
    det->add_option("--dim-b", dim_b, "second factor dimension")->check(CLI::PositiveNumber);
    det->add_option("--t", detect_order, "number of PT moments")->check(CLI::PositiveNumber);

    auto* bnd = app.add_subcommand("bounds", "evaluate the closed-form bounds");
    bnd->add_option("--k", opts.k, "target power")->check(CLI::PositiveNumber);
    bnd->add_option("--eps", opts.eps, "additive error target")->check(CLI::PositiveNumber);
    bnd->add_option("--t", opts.t, "truncation order override")->check(CLI::PositiveNumber);
    bnd->add_option("--r", opts.r, "spectrum rank")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (s1->parsed()) return run_scenario1_command(opts, false);
        if (ab->parsed()) return run_scenario1_command(opts, true);
        if (s2->parsed()) {
            const auto report = run_scenario2(parse_kinds(opts), opts.k, opts.r);
            return write_report(report, opts);
        }
        if (est->parsed()) return run_estimate_command(opts);
        if (det->parsed()) return run_detect_command(detect_in, dim_a, dim_b, detect_order);
        if (bnd->parsed()) return run_bounds_command(opts);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
