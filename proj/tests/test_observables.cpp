#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tracepow/bounds.hpp"
#include "tracepow/estimation.hpp"
#include "tracepow/observables.hpp"

using namespace tracepow;
using tracepow::testing::random_spectrum;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("observable power sums") {
    Spectrum s({q("1/2"), q("1/3"), q("1/6")});
    ObservableWeights identity{{1, 1, 1}, 1};
    CHECK(observable_power_sums(s, identity, 4).values == power_sums(s, 4).values);

    ObservableWeights zero{{0, 0, 0}, 1};
    CHECK(observable_power_sums(s, zero, 3).values == std::vector<Rational>{0, 0, 0});

    Spectrum half({q("1/2"), q("1/2")});
    ObservableWeights pm{{1, -1}, 1};
    CHECK(observable_power_sums(half, pm, 3).values == std::vector<Rational>{0, 0, 0});

    ObservableWeights bad{{2, 0, 0}, 1};
    CHECK_THROWS_AS(observable_power_sums(s, bad, 2), std::invalid_argument);
    ObservableWeights mismatched{{1, 1}, 1};
    CHECK_THROWS_AS(observable_power_sums(s, mismatched, 2), std::invalid_argument);
}

TEST_CASE("effective rank for observables") {
    CHECK(effective_rank_observable(32, 0.1, 1.0, 16) == effective_rank(32, 0.1, 16));
    CHECK(effective_rank_observable(32, 0.1, 1.0, 16) == 6);
    CHECK(effective_rank_observable(32, 0.1, std::exp(2.0), 16) == 8);
}

TEST_CASE("algorithm 2 with exact oracle") {
    Spectrum s({q("1/2"), q("1/3"), q("1/6")});

    ObservableWeights identity{{1, 1, 1}, 1};
    const auto qid = run_algorithm2(s, identity, 16, 3);
    const auto exact = power_sums(s, 16);
    for (int i = 1; i <= 16; ++i) CHECK(qid.at(i) == exact.at(i));

    Spectrum half({q("1/2"), q("1/2")});
    ObservableWeights pm{{1, -1}, 1};
    const auto qpm = run_algorithm2(half, pm, 10, 2);
    for (int i = 1; i <= 10; ++i) CHECK(qpm.at(i) == 0);

    ObservableWeights w{{2, 1, 0}, 2};
    const auto qw = run_algorithm2(s, w, 12, 3);
    const auto mixed = observable_power_sums(s, w, 12);
    for (int i = 1; i <= 12; ++i) CHECK(qw.at(i) == mixed.at(i));
}

TEST_CASE("algorithm 2 is linear in the observable under exact oracles") {
    std::mt19937_64 rng(404);
    const Spectrum s = random_spectrum(5, rng);
    ObservableWeights w1{{q("1/2"), q("-1/3"), q("1/4"), 0, 1}, 1};
    ObservableWeights w2{{q("1/5"), 1, q("-1"), q("2/3"), q("1/7")}, 1};
    const Rational alpha = q("3/7"), beta = q("-2/5");
    ObservableWeights combo;
    combo.inf_norm = 2;
    for (size_t i = 0; i < 5; ++i) {
        combo.weights.push_back(alpha * w1.weights[i] + beta * w2.weights[i]);
    }
    const auto qa = run_algorithm2(s, w1, 12, 5);
    const auto qb = run_algorithm2(s, w2, 12, 5);
    const auto qc = run_algorithm2(s, combo, 12, 5);
    for (int i = 1; i <= 12; ++i) CHECK(qc.at(i) == alpha * qa.at(i) + beta * qb.at(i));
}

TEST_CASE("observable series stays within epsilon under threshold noise") {
    // The contract's proof constant: plain moments within
    // eps/(4 ||M|| k t ln t), observable seeds within eps/4.
    std::mt19937_64 rng(88);
    const int k = 64;
    const double eps = 0.1;
    for (int trial = 0; trial < 10; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 7);
        const Spectrum s = random_spectrum(r, rng);
        ObservableWeights w;
        w.inf_norm = 1;
        for (int i = 0; i < r; ++i) w.weights.push_back(tracepow::testing::random_rational(-1.0, 1.0, rng));
        const int t = effective_rank_observable(k, eps, 1.0, r);
        NoiseSpec noise;
        noise.moment_amplitude =
            0.5 * theorem_threshold(k, t, eps, ThresholdVariant::observable, 1.0);
        noise.observable_amplitude = eps / 4.0;
        noise.seed = rng();
        const auto est = run_algorithm2(s, w, k, t, noise);
        const auto exact = observable_power_sums(s, w, k);
        for (int i = 1; i <= k; ++i) {
            REQUIRE(std::abs(to_double(est.at(i) - exact.at(i))) <= eps);
        }
    }
}
