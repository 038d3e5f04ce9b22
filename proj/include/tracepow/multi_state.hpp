#pragma once

#include <cstdint>
#include <optional>

#include "tracepow/observables.hpp"
#include "tracepow/spectrum.hpp"

namespace tracepow {

/// Two spectra plus the eigenbasis overlap matrix O_{ij} = |<psi_i|phi_j>|^2,
/// which makes every cross trace Tr(rho^a sigma^b) = sum_{ij} p_i^a q_j^b O_{ij}
/// exactly computable. Entries are in [0,1]; row and column sums are at most 1,
/// and exactly 1 when the matrix is square (shared full-rank support).
struct StatePair {
    Spectrum rho;
    Spectrum sigma;
    std::vector<std::vector<Rational>> overlap;  // rank(rho) x rank(sigma)

    StatePair(Spectrum rho_in, Spectrum sigma_in, std::vector<std::vector<Rational>> overlap_in);
};

/// Exact oracle for Tr(rho^a sigma^b).
Rational cross_trace(const StatePair& pair, int a, int b);

/// min{r, floor(ln((4k+4l)/eps))}, clamped to >= 1.
int effective_rank_pair(int k, int l, double epsilon, std::optional<int> r = std::nullopt);

/// The estimated cross-trace grid plus the marginal series and the support
/// dimension needed to evaluate functionals with constant terms.
struct CrossTraceGrid {
    int k = 0;
    int l = 0;
    std::vector<std::vector<Rational>> values;  // values[i-1][j-1] ~ Tr(rho^i sigma^j)
    PowerSumSeries rho_marginal;                // Tr(rho^i), i = 1..k
    PowerSumSeries sigma_marginal;              // Tr(sigma^j), j = 1..l
    int dimension = 0;                          // Tr(I) on the shared support

    const Rational& at(int i, int j) const {
        return values.at(static_cast<size_t>(i) - 1).at(static_cast<size_t>(j) - 1);
    }
};

/// Per-input noise amplitudes for the contract tests; all zero = exact oracle.
struct PairNoise {
    double sigma_moment_amplitude = 0.0;  // Tr(sigma^j) seeds
    double rho_moment_amplitude = 0.0;    // Tr(rho^i) seeds
    double mixed_amplitude = 0.0;         // Tr(rho^i sigma^j) seeds, (i,j) <= (t,t)
    std::uint64_t seed = 0;
};

/// Row pass extends each fixed i <= t across j = 1..l (observable = rho^i in
/// sigma's eigenbasis); column pass extends each fixed j <= l up to i = k
/// (observable = sigma^j in rho's eigenbasis).
CrossTraceGrid run_algorithm3(const StatePair& pair, int k, int l, int t,
                              const PairNoise& noise = {});

}  // namespace tracepow
