#include "tracepow/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace tracepow {

Rational lemma1_bound(const std::vector<Rational>& eps) {
    Rational sum = 0;
    for (size_t j = 0; j < eps.size(); ++j) {
        sum += abs(eps[j]) / Rational(static_cast<unsigned long>(j + 1));
    }
    return sum;
}

Rational lemma2_bound(int k, int t, int r) {
    if (k < 1 || t < 1 || r < 1 || t > r) {
        throw std::invalid_argument("lemma2_bound: need k,t,r >= 1 and t <= r");
    }
    Rational ratio(t, r);
    ratio.canonicalize();
    const Rational slack = 1 - ratio;
    return Rational(k) / Rational(factorial(static_cast<unsigned long>(t))) * slack;
}

Rational esp_max_bound(int t, int r) {
    if (t < 1 || r < 1 || t > r) {
        throw std::invalid_argument("esp_max_bound: need 1 <= t <= r");
    }
    Integer rt;
    mpz_ui_pow_ui(rt.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(t));
    Rational b(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(t)), rt);
    b.canonicalize();
    return b;
}

double theorem_threshold(int k, int t, double epsilon, ThresholdVariant variant,
                         double inf_norm) {
    if (k < 1 || t < 1 || epsilon <= 0 || inf_norm <= 0) {
        throw std::invalid_argument("theorem_threshold: bad arguments");
    }
    const double ln_t = std::max(std::log(static_cast<double>(t)), 1.0);
    const double base = epsilon / (static_cast<double>(k) * t * ln_t);
    switch (variant) {
        case ThresholdVariant::rank:
            return base;
        case ThresholdVariant::effective:
            return base / 2.0;
        case ThresholdVariant::observable:
            return base / (2.0 * inf_norm);
    }
    throw std::logic_error("theorem_threshold: unknown variant");
}

BoundReport check_series(const PowerSumSeries& exact, const PowerSumSeries& estimated,
                         const Rational& bound, int first, int last, std::string context) {
    if (first < 1 || last > exact.length() || last > estimated.length() || first > last) {
        throw std::invalid_argument("check_series: bad index range");
    }
    Rational worst = 0;
    for (int i = first; i <= last; ++i) {
        Rational d = abs(exact.at(i) - estimated.at(i));
        if (d > worst) worst = d;
    }
    BoundReport report;
    report.empirical = to_double(worst);
    report.theoretical = to_double(bound);
    report.satisfied = worst <= bound;
    report.context = std::move(context);
    return report;
}

}  // namespace tracepow
