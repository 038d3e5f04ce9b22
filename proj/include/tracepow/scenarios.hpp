#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tracepow/estimation.hpp"

namespace tracepow {

enum class DistributionTag { geometric, arithmetic, one_dominant, identical };

std::string distribution_name(DistributionTag tag);
std::optional<DistributionTag> distribution_from_name(const std::string& name);

struct DistributionKind {
    DistributionTag tag = DistributionTag::identical;
    int r = 16;
    Rational ratio = 2;                   // geometric: p_i / p_{i+1}
    Rational width = Rational(124, 1000); // arithmetic: p_max - p_min
    Rational residual = Rational(1, 100); // one_dominant: 1 - p_max
    std::uint64_t seed = 0;               // one_dominant residual split
};

Spectrum gen_spectrum(const DistributionKind& kind);

struct ScenarioRow {
    std::string distribution;
    int k = 0;
    double epsilon = 0.0;
    int t = 0;
    int t_table = 0;  // published reference value, logged for the audit
    std::uint64_t n_samples = 0;
    Rational max_error;  // exact, for audit
    double max_error_float = 0.0;
    double bound_float = 0.0;
    std::uint64_t seed = 0;
    bool satisfied = false;
};

struct ScenarioReport {
    std::vector<ScenarioRow> rows;
    std::string run_id;
    std::string timestamp;

    bool all_satisfied() const;
};

enum class RankFormula { effective, appendix_b, fixed };

/// Published t-values (simulation reference tables); indexed by (k, eps) on
/// the standard grid. They do not all agree with the floor formulas, so they
/// are logged next to the computed t rather than substituted for it.
std::optional<int> table3_value(int k, double epsilon);
std::optional<int> table4_value(int k, double epsilon);

inline const std::vector<int> kScenarioKs = {8, 16, 32, 64, 128, 256};
inline const std::vector<double> kScenarioEpsilons = {1e-1, 1e-2, 1e-3, 1e-4,
                                                      1e-5, 1e-6, 1e-7};

/// Full sampled-estimation grid: one row per (distribution, k, eps, seed),
/// t from the chosen formula, n = floor(k^2/eps^2), error vs the target eps.
ScenarioReport run_scenario1(const std::vector<DistributionKind>& kinds,
                             const std::vector<int>& ks, const std::vector<double>& epsilons,
                             RankFormula formula, int fixed_t, int repeats,
                             std::uint64_t master_seed);

/// Exact-seed truncation sweep at fixed k: one row per (distribution, t),
/// error over j in (t, k] vs the (k/t!)(1 - t/r) bound.
ScenarioReport run_scenario2(const std::vector<DistributionKind>& kinds, int k = 32,
                             int t_max = 16);

void emit_csv(const ScenarioReport& report, std::ostream& out);
void emit_json(const ScenarioReport& report, std::ostream& out);

}  // namespace tracepow
