#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "tracepow/spectrum.hpp"

namespace tracepow {

struct EstimationConfig {
    int k = 1;                 // target power
    double epsilon = 0.1;      // additive error budget
    double delta = 0.01;       // failure probability
    int t = 1;                 // truncation order (moments taken from the oracle)
    std::uint64_t seed = 0;
    bool exact_oracle = false;  // bypass sampling, seed with exact moments
    // floor(k^2/eps^2) runs per moment (simulation convention) when true,
    // ceil((k^2/eps^2) ln(1/delta)) when false.
    bool scenario_runs = true;
};

struct EstimateSeries {
    PowerSumSeries q;  // kind=estimated, length max(k, t)
    SymmetricPolys b;
    std::uint64_t samples_per_moment = 0;
    EstimationConfig config;
};

/// min{r, floor(ln(2k/eps))}, clamped to >= 1.
int effective_rank(int k, double epsilon, std::optional<int> r = std::nullopt);

/// min{r, floor(ln(k/eps) / ln ln(k/eps))}, clamped to >= 1; needs k/eps > e.
int effective_rank_alt(int k, double epsilon, std::optional<int> r = std::nullopt);

/// ceil((k^2/eps^2) ln(1/delta)), rejected above 2^62.
std::uint64_t required_runs(int k, double epsilon, double delta);

/// floor(k^2/eps^2), the simulation sample count. May exceed 2^62; cells
/// above the exact-binomial limit are sampled via a rounded normal.
std::uint64_t scenario_runs(int k, double epsilon);

/// Largest n for which the estimate is drawn as an exact Binomial(n, p);
/// beyond it the draw is a rounded Gaussian with matching mean/variance.
inline constexpr std::uint64_t kExactBinomialLimit = 1'000'000'000ULL;

/// One Binomial(n, Tr(rho^i)) draw divided by n, as an exact rational.
/// Deterministic given the RNG state.
Rational sample_trace_power(const Spectrum& s, int i, std::uint64_t n, std::mt19937_64& rng);

/// Moments 1..t from the sampling oracle (one RNG stream per moment index),
/// symmetric polynomials from those estimates, higher moments by the order-t
/// recurrence. Never consults the spectrum beyond moment order t.
EstimateSeries run_algorithm1(const Spectrum& s, const EstimationConfig& config);

}  // namespace tracepow
