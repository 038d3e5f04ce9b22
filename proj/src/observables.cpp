#include "tracepow/observables.hpp"

#include "tracepow/estimation.hpp"

#include <random>
#include <stdexcept>

namespace tracepow {

void ObservableWeights::validate(const Spectrum& s) const {
    if (static_cast<int>(weights.size()) != s.rank()) {
        throw std::invalid_argument("observable weights: length must equal spectrum rank");
    }
    for (const auto& m : weights) {
        if (abs(m) > inf_norm) {
            throw std::invalid_argument("observable weights: |m_i| exceeds inf_norm");
        }
    }
}

PowerSumSeries observable_power_sums(const Spectrum& s, const ObservableWeights& w, int t) {
    w.validate(s);
    if (t < 1) throw std::invalid_argument("observable_power_sums: t must be >= 1");
    PowerSumSeries out;
    out.kind = SeriesKind::exact;
    out.values.reserve(static_cast<size_t>(t));
    std::vector<Rational> pow(s.eigenvalues());
    for (int i = 1; i <= t; ++i) {
        Rational sum = 0;
        for (size_t j = 0; j < pow.size(); ++j) sum += w.weights[j] * pow[j];
        out.values.push_back(sum);
        if (i < t) {
            for (size_t j = 0; j < pow.size(); ++j) pow[j] *= s.eigenvalue(static_cast<int>(j));
        }
    }
    return out;
}

int effective_rank_observable(int k, double epsilon, double inf_norm, std::optional<int> r) {
    if (inf_norm <= 0) throw std::invalid_argument("effective_rank_observable: inf_norm > 0");
    return effective_rank(k, epsilon / inf_norm, r);
}

namespace {

Rational perturb(const Rational& exact, double amplitude, std::mt19937_64& rng) {
    if (amplitude <= 0) return exact;
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    return exact + rational_from_double(dist(rng));
}

}  // namespace

PowerSumSeries run_algorithm2(const Spectrum& s, const ObservableWeights& w, int k, int t,
                              const NoiseSpec& noise) {
    if (k < 1 || t < 1) throw std::invalid_argument("run_algorithm2: k and t must be >= 1");
    w.validate(s);

    const PowerSumSeries plain = power_sums(s, t);
    const PowerSumSeries mixed = observable_power_sums(s, w, t);

    PowerSumSeries q_plain, q_mixed;
    q_plain.kind = q_mixed.kind = SeriesKind::estimated;
    for (int i = 1; i <= t; ++i) {
        std::mt19937_64 rng_p(mix_seed(noise.seed, static_cast<std::uint64_t>(i)));
        std::mt19937_64 rng_m(mix_seed(noise.seed ^ 0x6d6f6d656e74ULL, static_cast<std::uint64_t>(i)));
        q_plain.values.push_back(perturb(plain.at(i), noise.moment_amplitude, rng_p));
        q_mixed.values.push_back(perturb(mixed.at(i), noise.observable_amplitude, rng_m));
    }

    const SymmetricPolys b = newton_girard(q_plain, t);
    PowerSumSeries out = (k > t) ? extend_series(b, q_mixed, k) : q_mixed.truncated(k);
    out.kind = SeriesKind::estimated;
    return out;
}

}  // namespace tracepow
