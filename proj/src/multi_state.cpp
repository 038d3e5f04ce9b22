#include "tracepow/multi_state.hpp"

#include "tracepow/estimation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tracepow {

StatePair::StatePair(Spectrum rho_in, Spectrum sigma_in,
                     std::vector<std::vector<Rational>> overlap_in)
    : rho(std::move(rho_in)), sigma(std::move(sigma_in)), overlap(std::move(overlap_in)) {
    const size_t rows = static_cast<size_t>(rho.rank());
    const size_t cols = static_cast<size_t>(sigma.rank());
    if (overlap.size() != rows) {
        throw std::invalid_argument("state pair: overlap row count must equal rank(rho)");
    }
    std::vector<Rational> col_sums(cols, Rational(0));
    const bool square = rows == cols;
    for (const auto& row : overlap) {
        if (row.size() != cols) {
            throw std::invalid_argument("state pair: overlap column count must equal rank(sigma)");
        }
        Rational row_sum = 0;
        for (size_t j = 0; j < cols; ++j) {
            if (row[j] < 0 || row[j] > 1) {
                throw std::invalid_argument("state pair: overlap entries must lie in [0,1]");
            }
            row_sum += row[j];
            col_sums[j] += row[j];
        }
        if (row_sum > 1 || (square && row_sum != 1)) {
            throw std::invalid_argument("state pair: overlap row sums must be 1 (<= 1 if padded)");
        }
    }
    for (const auto& cs : col_sums) {
        if (cs > 1 || (square && cs != 1)) {
            throw std::invalid_argument("state pair: overlap column sums must be 1 (<= 1 if padded)");
        }
    }
}

Rational cross_trace(const StatePair& pair, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("cross_trace: a, b must be >= 1");
    Rational sum = 0;
    for (int i = 0; i < pair.rho.rank(); ++i) {
        Rational pa;
        mpq_class p = pair.rho.eigenvalue(i);
        mpz_pow_ui(pa.get_num_mpz_t(), p.get_num_mpz_t(), static_cast<unsigned long>(a));
        mpz_pow_ui(pa.get_den_mpz_t(), p.get_den_mpz_t(), static_cast<unsigned long>(a));
        for (int j = 0; j < pair.sigma.rank(); ++j) {
            const auto& o = pair.overlap[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (o == 0) continue;
            Rational qb;
            mpq_class q = pair.sigma.eigenvalue(j);
            mpz_pow_ui(qb.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(b));
            mpz_pow_ui(qb.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(b));
            sum += pa * qb * o;
        }
    }
    return sum;
}

int effective_rank_pair(int k, int l, double epsilon, std::optional<int> r) {
    if (l < 1) throw std::invalid_argument("effective_rank_pair: l must be >= 1");
    return effective_rank(2 * (k + l), epsilon, r);
}

namespace {

// Weights of M = rho^a seen in sigma's eigenbasis: m_j = sum_i p_i^a O_{ij}.
ObservableWeights row_weights(const StatePair& pair, int a) {
    ObservableWeights w;
    w.weights.assign(static_cast<size_t>(pair.sigma.rank()), Rational(0));
    for (int i = 0; i < pair.rho.rank(); ++i) {
        Rational pa;
        mpq_class p = pair.rho.eigenvalue(i);
        mpz_pow_ui(pa.get_num_mpz_t(), p.get_num_mpz_t(), static_cast<unsigned long>(a));
        mpz_pow_ui(pa.get_den_mpz_t(), p.get_den_mpz_t(), static_cast<unsigned long>(a));
        for (int j = 0; j < pair.sigma.rank(); ++j) {
            w.weights[static_cast<size_t>(j)] +=
                pa * pair.overlap[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    }
    w.inf_norm = 0;
    for (const auto& m : w.weights) w.inf_norm = std::max(w.inf_norm, abs(m));
    if (w.inf_norm == 0) w.inf_norm = 1;
    return w;
}

}  // namespace

CrossTraceGrid run_algorithm3(const StatePair& pair, int k, int l, int t, const PairNoise& noise) {
    if (k < 1 || l < 1 || t < 1) throw std::invalid_argument("run_algorithm3: k, l, t >= 1");

    CrossTraceGrid grid;
    grid.k = k;
    grid.l = l;
    grid.dimension = std::max(pair.rho.rank(), pair.sigma.rank());
    grid.values.assign(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(l)));

    // Row pass: fixed i <= t, extend across j with M = rho^i over sigma.
    const int rows_from_oracle = std::min(t, k);
    for (int i = 1; i <= rows_from_oracle; ++i) {
        NoiseSpec row_noise{noise.sigma_moment_amplitude, noise.mixed_amplitude,
                            mix_seed(noise.seed, 0x100 + static_cast<std::uint64_t>(i))};
        PowerSumSeries row = run_algorithm2(pair.sigma, row_weights(pair, i), l, t, row_noise);
        for (int j = 1; j <= l; ++j) grid.values[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = row.at(j);
    }

    // Column pass: fixed j, extend i = t+1..k with M = sigma^j over rho.
    if (k > t) {
        const PowerSumSeries rho_exact = power_sums(pair.rho, t);
        PowerSumSeries rho_est;
        rho_est.kind = SeriesKind::estimated;
        for (int i = 1; i <= t; ++i) {
            Rational v = rho_exact.at(i);
            if (noise.rho_moment_amplitude > 0) {
                std::mt19937_64 rng(mix_seed(noise.seed, 0x200 + static_cast<std::uint64_t>(i)));
                std::uniform_real_distribution<double> dist(-noise.rho_moment_amplitude,
                                                            noise.rho_moment_amplitude);
                v += rational_from_double(dist(rng));
            }
            rho_est.values.push_back(v);
        }
        const SymmetricPolys b_rho = newton_girard(rho_est, t);
        for (int j = 1; j <= l; ++j) {
            PowerSumSeries seed;
            seed.kind = SeriesKind::estimated;
            for (int i = 1; i <= t; ++i) {
                seed.values.push_back(grid.at(i, j));
            }
            PowerSumSeries col = extend_series(b_rho, seed, k);
            for (int i = t + 1; i <= k; ++i) {
                grid.values[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = col.at(i);
            }
        }
    }

    // Marginals via the same estimation pathway (exact when noise is zero).
    {
        EstimationConfig cfg;
        cfg.k = k;
        cfg.t = std::min(t, k);
        cfg.exact_oracle = true;
        grid.rho_marginal = run_algorithm1(pair.rho, cfg).q.truncated(k);
        cfg.k = l;
        cfg.t = std::min(t, l);
        grid.sigma_marginal = run_algorithm1(pair.sigma, cfg).q.truncated(l);
    }
    return grid;
}

}  // namespace tracepow
