#pragma once

#include <vector>

#include "tracepow/rational.hpp"

namespace tracepow {

enum class SeriesKind { exact, estimated, extended };

/// Sequence of power sums, 1-indexed: values[i-1] holds the i-th power sum.
struct PowerSumSeries {
    std::vector<Rational> values;
    SeriesKind kind = SeriesKind::exact;

    int length() const { return static_cast<int>(values.size()); }
    const Rational& at(int i) const { return values.at(static_cast<size_t>(i) - 1); }
    PowerSumSeries truncated(int t) const;
};

/// Elementary symmetric polynomial coefficients, 0-indexed with coeffs[0] = 1.
struct SymmetricPolys {
    std::vector<Rational> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& at(int k) const { return coeffs.at(static_cast<size_t>(k)); }
};

/// e_k = (1/k) sum_{i=1..k} (-1)^{i-1} e_{k-i} P_i for k = 1..t. Works the
/// same whether the input series is exact or estimated.
SymmetricPolys newton_girard(const PowerSumSeries& p, int t);

/// Order-t linear recurrence extension: entries 1..t equal the seed, and
/// entry l > t is sum_{j=1..t} (-1)^{j-1} coeffs[j] * entry[l-j]. One routine
/// covers the exact, estimated and observable-weighted series.
PowerSumSeries extend_series(const SymmetricPolys& a, const PowerSumSeries& seed, int k);

}  // namespace tracepow
