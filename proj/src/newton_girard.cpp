#include "tracepow/newton_girard.hpp"

#include <stdexcept>

namespace tracepow {

PowerSumSeries PowerSumSeries::truncated(int t) const {
    if (t > length()) throw std::invalid_argument("truncated: series too short");
    PowerSumSeries out;
    out.kind = kind;
    out.values.assign(values.begin(), values.begin() + t);
    return out;
}

SymmetricPolys newton_girard(const PowerSumSeries& p, int t) {
    if (t < 1) throw std::invalid_argument("newton_girard: t must be >= 1");
    if (p.length() < t) throw std::invalid_argument("newton_girard: series shorter than t");
    SymmetricPolys a;
    a.coeffs.resize(static_cast<size_t>(t) + 1);
    a.coeffs[0] = 1;
    for (int k = 1; k <= t; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            Rational term = a.coeffs[static_cast<size_t>(k - i)] * p.at(i);
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        a.coeffs[static_cast<size_t>(k)] = acc / k;
    }
    return a;
}

PowerSumSeries extend_series(const SymmetricPolys& a, const PowerSumSeries& seed, int k) {
    const int t = a.order();
    if (seed.length() != t) {
        throw std::invalid_argument("extend_series: seed length must equal recurrence order");
    }
    if (k < t) throw std::invalid_argument("extend_series: k must be >= t");
    PowerSumSeries out;
    out.kind = SeriesKind::extended;
    out.values = seed.values;
    out.values.reserve(static_cast<size_t>(k));
    for (int l = t + 1; l <= k; ++l) {
        Rational acc = 0;
        for (int j = 1; j <= t; ++j) {
            Rational term = a.at(j) * out.values[static_cast<size_t>(l - j - 1)];
            if (j % 2 == 0) term = -term;
            acc += term;
        }
        out.values.push_back(acc);
    }
    return out;
}

}  // namespace tracepow
