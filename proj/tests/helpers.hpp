#pragma once

#include <random>
#include <vector>

#include "tracepow/spectrum.hpp"

namespace tracepow::testing {

// Random spectrum with exactly-normalized rational eigenvalues: draw small
// positive integers and divide by their sum.
inline Spectrum random_spectrum(int r, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> dist(1, 1000);
    std::vector<unsigned long> w(static_cast<size_t>(r));
    Integer total = 0;
    for (auto& v : w) {
        v = dist(rng);
        total += v;
    }
    std::vector<Rational> p;
    p.reserve(w.size());
    for (auto v : w) {
        Rational q(Integer(v), total);
        q.canonicalize();
        p.push_back(q);
    }
    return Spectrum(std::move(p));
}

inline Rational random_rational(double lo, double hi, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return rational_from_double(dist(rng));
}

}  // namespace tracepow::testing
