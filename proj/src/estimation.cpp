#include "tracepow/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace tracepow {

namespace {

int clamp_rank(double value, std::optional<int> r) {
    int t = static_cast<int>(std::floor(value));
    if (r) t = std::min(t, *r);
    return std::max(t, 1);
}

}  // namespace

int effective_rank(int k, double epsilon, std::optional<int> r) {
    if (k < 1 || epsilon <= 0) throw std::invalid_argument("effective_rank: k >= 1, eps > 0");
    return clamp_rank(std::log(2.0 * k / epsilon), r);
}

int effective_rank_alt(int k, double epsilon, std::optional<int> r) {
    if (k < 1 || epsilon <= 0) throw std::invalid_argument("effective_rank_alt: k >= 1, eps > 0");
    const double x = std::log(static_cast<double>(k) / epsilon);
    if (x <= 1.0) throw std::invalid_argument("effective_rank_alt: requires k/eps > e");
    return clamp_rank(x / std::log(x), r);
}

std::uint64_t required_runs(int k, double epsilon, double delta) {
    if (k < 1 || epsilon <= 0 || delta <= 0 || delta >= 1) {
        throw std::invalid_argument("required_runs: bad arguments");
    }
    const double n = std::ceil(static_cast<double>(k) * k / (epsilon * epsilon) *
                               std::log(1.0 / delta));
    if (!(n <= 4.611686018427387904e18)) {  // 2^62
        throw std::overflow_error("required_runs: run count exceeds 2^62");
    }
    return static_cast<std::uint64_t>(std::max(n, 1.0));
}

std::uint64_t scenario_runs(int k, double epsilon) {
    if (k < 1 || epsilon <= 0) throw std::invalid_argument("scenario_runs: bad arguments");
    // Decimal epsilons are not exact binary doubles; nudge upward by one part
    // in 1e12 before flooring so k^2/eps^2 lands on the intended integer.
    const long double x = static_cast<long double>(k) * k /
                          (static_cast<long double>(epsilon) * epsilon);
    const long double n = std::floor(x * (1.0L + 1e-12L));
    if (!(n < 1.8e19L)) throw std::overflow_error("scenario_runs: run count exceeds 64 bits");
    return static_cast<std::uint64_t>(std::max(n, 1.0L));
}

Rational sample_trace_power(const Spectrum& s, int i, std::uint64_t n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("sample_trace_power: n must be >= 1");
    const Rational p = exact_trace_power(s, i);
    if (p >= 1) return 1;
    const double pd = to_double(p);

    Integer successes;
    if (n <= kExactBinomialLimit) {
        std::binomial_distribution<long long> dist(static_cast<long long>(n), pd);
        successes = Integer(static_cast<long>(dist(rng)));
    } else {
        // Normal approximation for astronomically many trials.
        const double nd = static_cast<double>(n);
        const double mean = nd * pd;
        const double sd = std::sqrt(nd * pd * (1.0 - pd));
        std::normal_distribution<double> dist(mean, sd);
        double x = std::nearbyint(dist(rng));
        x = std::min(std::max(x, 0.0), nd);
        successes = Integer(x);
    }
    Rational q(successes, Integer(static_cast<unsigned long>(n)));
    q.canonicalize();
    return q;
}

EstimateSeries run_algorithm1(const Spectrum& s, const EstimationConfig& config) {
    if (config.t < 1 || config.k < 1) {
        throw std::invalid_argument("run_algorithm1: k and t must be >= 1");
    }
    EstimateSeries out;
    out.config = config;
    out.samples_per_moment = config.exact_oracle
                                 ? 0
                                 : (config.scenario_runs
                                        ? scenario_runs(config.k, config.epsilon)
                                        : required_runs(config.k, config.epsilon, config.delta));

    PowerSumSeries seed;
    seed.kind = SeriesKind::estimated;
    for (int i = 1; i <= config.t; ++i) {
        if (config.exact_oracle) {
            seed.values.push_back(exact_trace_power(s, i));
        } else {
            std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(i)));
            seed.values.push_back(sample_trace_power(s, i, out.samples_per_moment, rng));
        }
    }
    out.b = newton_girard(seed, config.t);
    if (config.k > config.t) {
        out.q = extend_series(out.b, seed, config.k);
    } else {
        out.q = seed;
    }
    out.q.kind = SeriesKind::estimated;
    return out;
}

}  // namespace tracepow
