#include "tracepow/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracepow {

Spectrum::Spectrum(std::vector<Rational> eigenvalues) : eigenvalues_(std::move(eigenvalues)) {
    if (eigenvalues_.empty()) {
        throw std::invalid_argument("spectrum must hold at least one eigenvalue");
    }
    Rational sum = 0;
    for (const auto& p : eigenvalues_) {
        if (p <= 0) {
            throw std::invalid_argument("spectrum eigenvalues must be strictly positive");
        }
        sum += p;
    }
    if (sum != 1) {
        throw std::invalid_argument("spectrum eigenvalues must sum to exactly 1 (got " +
                                    fraction_string(sum) + ")");
    }
    std::sort(eigenvalues_.begin(), eigenvalues_.end(), std::greater<Rational>());
}

PowerSumSeries power_sums(const Spectrum& s, int t) {
    if (t < 1) throw std::invalid_argument("power_sums: t must be >= 1");
    PowerSumSeries out;
    out.kind = SeriesKind::exact;
    out.values.reserve(static_cast<size_t>(t));
    std::vector<Rational> pow(s.eigenvalues());
    for (int i = 1; i <= t; ++i) {
        Rational sum = 0;
        for (auto& v : pow) sum += v;
        out.values.push_back(sum);
        if (i < t) {
            for (size_t j = 0; j < pow.size(); ++j) pow[j] *= s.eigenvalue(static_cast<int>(j));
        }
    }
    return out;
}

Rational exact_trace_power(const Spectrum& s, int k) {
    if (k < 1) throw std::invalid_argument("exact_trace_power: k must be >= 1");
    Rational sum = 0;
    for (const auto& p : s.eigenvalues()) {
        Rational pk;
        mpz_pow_ui(pk.get_num_mpz_t(), p.get_num_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(pk.get_den_mpz_t(), p.get_den_mpz_t(), static_cast<unsigned long>(k));
        sum += pk;
    }
    return sum;
}

}  // namespace tracepow
