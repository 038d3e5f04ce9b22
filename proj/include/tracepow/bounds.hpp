#pragma once

#include <string>
#include <vector>

#include "tracepow/newton_girard.hpp"

namespace tracepow {

struct BoundReport {
    double empirical = 0.0;    // max observed error
    double theoretical = 0.0;  // bound value
    bool satisfied = false;    // empirical <= theoretical
    std::string context;
};

/// sum_j |eps_j| / j : bound on |b_k - a_k| from per-moment errors.
Rational lemma1_bound(const std::vector<Rational>& eps);

/// (k/t!) (1 - t/r) : bound on |extended - exact| when seeding with t < r
/// exact moments; exactly zero at t = r.
Rational lemma2_bound(int k, int t, int r);

/// binomial(r,t) / r^t : the maximum of the elementary symmetric polynomial
/// a_t over rank-r spectra, attained at the uniform spectrum.
Rational esp_max_bound(int t, int r);

enum class ThresholdVariant { rank, effective, observable };

/// Per-moment error budget: eps/(k t ln t), eps/(2 k t ln t), or
/// eps/(2 ||M|| k t ln t); ln t is replaced by max(ln t, 1) at t <= 1.
double theorem_threshold(int k, int t, double epsilon, ThresholdVariant variant,
                         double inf_norm = 1.0);

/// Max |exact - estimated| over 1-indexed [first, last] against a bound.
BoundReport check_series(const PowerSumSeries& exact, const PowerSumSeries& estimated,
                         const Rational& bound, int first, int last,
                         std::string context = {});

}  // namespace tracepow
