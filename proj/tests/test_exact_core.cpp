#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tracepow/bounds.hpp"
#include "tracepow/spectrum.hpp"

using namespace tracepow;
using tracepow::testing::random_spectrum;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("spectrum validates its input") {
    CHECK_THROWS_AS(Spectrum({}), std::invalid_argument);
    CHECK_THROWS_AS(Spectrum({q("1/2"), q("1/3")}), std::invalid_argument);
    CHECK_THROWS_AS(Spectrum({q("3/2"), q("-1/2")}), std::invalid_argument);

    Spectrum s({q("1/6"), q("1/2"), q("1/3")});
    CHECK(s.rank() == 3);
    CHECK(s.eigenvalue(0) == q("1/2"));  // sorted descending
    CHECK(s.eigenvalue(2) == q("1/6"));
}

TEST_CASE("power sums of simple spectra") {
    CHECK(power_sums(Spectrum({q("1")}), 3).values == std::vector<Rational>{1, 1, 1});
    CHECK(power_sums(Spectrum({q("1/2"), q("1/2")}), 3).values ==
          std::vector<Rational>{1, q("1/2"), q("1/4")});
    CHECK(power_sums(Spectrum({q("2/3"), q("1/3")}), 2).values ==
          std::vector<Rational>{1, q("5/9")});
}

TEST_CASE("exact trace power oracle") {
    CHECK(exact_trace_power(Spectrum({q("1")}), 100) == 1);
    CHECK(exact_trace_power(Spectrum({q("1/2"), q("1/2")}), 10) == q("1/512"));
    CHECK(exact_trace_power(Spectrum({q("2/3"), q("1/3")}), 3) == q("1/3"));
}

TEST_CASE("newton_girard on known series") {
    PowerSumSeries p{{1, q("1/2")}, SeriesKind::exact};
    CHECK(newton_girard(p, 2).coeffs == std::vector<Rational>{1, 1, q("1/4")});

    PowerSumSeries pure{{1, 1, 1}, SeriesKind::exact};
    CHECK(newton_girard(pure, 3).coeffs == std::vector<Rational>{1, 1, 0, 0});

    Spectrum s({q("1/2"), q("1/3"), q("1/6")});
    CHECK(newton_girard(power_sums(s, 3), 3).coeffs ==
          std::vector<Rational>{1, 1, q("11/36"), q("1/36")});
}

TEST_CASE("extend_series reproduces and bounds") {
    Spectrum half({q("1/2"), q("1/2")});
    const auto a = newton_girard(power_sums(half, 2), 2);
    const auto ext = extend_series(a, power_sums(half, 2), 5);
    CHECK(ext.values ==
          std::vector<Rational>{1, q("1/2"), q("1/4"), q("1/8"), q("1/16")});
    CHECK(ext.kind == SeriesKind::extended);

    SymmetricPolys pure{{1, 1}};
    PowerSumSeries seed{{1}, SeriesKind::exact};
    CHECK(extend_series(pure, seed, 4).values == std::vector<Rational>{1, 1, 1, 1});

    // Truncating at t=2 < r=3 stays within the Lemma-2 bound.
    Spectrum s({q("1/2"), q("1/3"), q("1/6")});
    const auto exact = power_sums(s, 4);
    const auto a2 = newton_girard(exact, 2);
    const auto approx = extend_series(a2, exact.truncated(2), 4);
    const Rational bound = lemma2_bound(4, 2, 3);
    for (int i = 3; i <= 4; ++i) CHECK(abs(approx.at(i) - exact.at(i)) <= bound);
}

TEST_CASE("extend_series rejects malformed inputs") {
    SymmetricPolys a{{1, 1, q("1/4")}};
    PowerSumSeries seed{{1, q("1/2")}, SeriesKind::exact};
    CHECK_THROWS_AS(extend_series(a, seed, 1), std::invalid_argument);
    PowerSumSeries short_seed{{1}, SeriesKind::exact};
    CHECK_THROWS_AS(extend_series(a, short_seed, 5), std::invalid_argument);
}

TEST_CASE("round trip: full-order seeds reproduce all powers exactly") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 16);
        const Spectrum s = random_spectrum(r, rng);
        const auto p = power_sums(s, r);
        const auto a = newton_girard(p, r);
        const auto ext = extend_series(a, p, 64);
        for (int k = 1; k <= 64; ++k) {
            REQUIRE(ext.at(k) == exact_trace_power(s, k));
        }
    }
}

TEST_CASE("Vieta consistency: coefficients match direct product expansion") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 8);
        const Spectrum s = random_spectrum(r, rng);
        // Expand prod_m (x - p_m) and read the signed coefficients.
        std::vector<Rational> poly{1};
        for (int m = 0; m < r; ++m) {
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i];
                next[i + 1] += poly[i] * s.eigenvalue(m);
            }
            poly = std::move(next);
        }
        const auto a = newton_girard(power_sums(s, r), r);
        for (int k = 0; k <= r; ++k) REQUIRE(a.at(k) == poly[static_cast<size_t>(k)]);
    }
}

TEST_CASE("monotonicity: a_k >= a_{k+1} for exact spectra") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 16);
        const Spectrum s = random_spectrum(r, rng);
        const auto a = newton_girard(power_sums(s, r), r);
        for (int k = 1; k < r; ++k) REQUIRE(a.at(k) >= a.at(k + 1));
    }
}
