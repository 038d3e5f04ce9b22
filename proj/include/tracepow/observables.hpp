#pragma once

#include <cstdint>
#include <optional>

#include "tracepow/spectrum.hpp"

namespace tracepow {

/// Observable reduced to its diagonal in the state's eigenbasis: one weight
/// m_i per eigenvalue, so Tr(M rho^j) = sum_i m_i p_i^j exactly.
struct ObservableWeights {
    std::vector<Rational> weights;
    Rational inf_norm;  // upper bound on ||M||_inf; |m_i| <= inf_norm

    void validate(const Spectrum& s) const;
};

/// P_{i,M} = sum_j m_j p_j^i for i = 1..t, exact.
PowerSumSeries observable_power_sums(const Spectrum& s, const ObservableWeights& w, int t);

/// min{r, floor(ln(2k ||M||_inf / eps))}, clamped to >= 1.
int effective_rank_observable(int k, double epsilon, double inf_norm,
                              std::optional<int> r = std::nullopt);

/// Bounded-noise oracle standing in for the quantum estimation circuits:
/// exact value plus a uniform draw in [-amplitude, +amplitude], injected as
/// an exact dyadic rational. Zero amplitudes give the exact oracle.
struct NoiseSpec {
    double moment_amplitude = 0.0;      // noise on plain moments Tr(rho^i)
    double observable_amplitude = 0.0;  // noise on Tr(M rho^i)
    std::uint64_t seed = 0;
};

/// Estimated series for Tr(M rho^i), i = 1..k. Plain moments (with noise)
/// feed the symmetric polynomials; the M-series seeds the same recurrence.
PowerSumSeries run_algorithm2(const Spectrum& s, const ObservableWeights& w, int k, int t,
                              const NoiseSpec& noise = {});

}  // namespace tracepow
