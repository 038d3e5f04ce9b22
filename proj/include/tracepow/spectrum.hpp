#pragma once

#include <vector>

#include "tracepow/newton_girard.hpp"
#include "tracepow/rational.hpp"

namespace tracepow {

/// Exact eigenvalue list of a density operator. Eigenvalues are strictly
/// positive, sum to exactly 1 and are stored in descending order (the
/// constructor sorts; it rejects non-normalized input rather than rescaling).
class Spectrum {
  public:
    explicit Spectrum(std::vector<Rational> eigenvalues);

    int rank() const { return static_cast<int>(eigenvalues_.size()); }
    const Rational& eigenvalue(int i) const { return eigenvalues_.at(i); }
    const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }

  private:
    std::vector<Rational> eigenvalues_;
};

/// P_i = sum_j p_j^i for i = 1..t, exact.
PowerSumSeries power_sums(const Spectrum& s, int t);

/// Brute-force ground-truth oracle: sum_j p_j^k.
Rational exact_trace_power(const Spectrum& s, int k);

}  // namespace tracepow
