#include "tracepow/applications.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tracepow {

PolynomialSpec::PolynomialSpec(std::vector<Rational> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial: needs at least one coefficient");
    coeff_l1_ = 0;
    degree_ = 0;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        coeff_l1_ += abs(coeffs[k]);
        if (coeffs[k] != 0) degree_ = static_cast<int>(k);
    }
}

Rational nonlinear_trace(const PolynomialSpec& poly, const PowerSumSeries& series,
                         int rank_or_dim) {
    if (series.length() < poly.degree()) {
        throw std::invalid_argument("nonlinear_trace: series shorter than polynomial degree");
    }
    if (rank_or_dim < 1) throw std::invalid_argument("nonlinear_trace: rank_or_dim must be >= 1");
    Rational sum = poly.at(0) * rank_or_dim;
    for (int k = 1; k <= poly.degree(); ++k) {
        sum += poly.at(k) * series.at(k);
    }
    return sum;
}

Rational gibbs_cost(const PowerSumSeries& series, int q) {
    if (q < 1) throw std::invalid_argument("gibbs_cost: q must be >= 1");
    if (series.length() < q + 1) {
        throw std::invalid_argument("gibbs_cost: needs moments up to order q+1");
    }
    // Tr((rho-I)^i rho) = sum_{j=0..i} C(i,j) (-1)^{i-j} P_{j+1}
    Rational total = 0;
    for (int i = 1; i <= q; ++i) {
        for (int j = 0; j <= i; ++j) {
            Rational term = Rational(binomial(static_cast<unsigned long>(i),
                                              static_cast<unsigned long>(j))) *
                            series.at(j + 1);
            if ((i - j) % 2 != 0) term = -term;
            total += term;
        }
    }
    return total;
}

Rational k_alpha_distance(const CrossTraceGrid& grid, const PolynomialSpec& poly_a,
                          const PolynomialSpec& poly_b) {
    if (grid.dimension < 1 || grid.rho_marginal.length() < std::min(poly_a.degree(), grid.k) ||
        grid.sigma_marginal.length() < std::min(poly_b.degree(), grid.l)) {
        throw std::invalid_argument("k_alpha_distance: grid is missing its marginal series");
    }
    if (poly_a.degree() > grid.k || poly_b.degree() > grid.l) {
        throw std::invalid_argument("k_alpha_distance: grid does not cover polynomial degrees");
    }
    Rational sum = 0;
    for (int i = 0; i <= poly_a.degree(); ++i) {
        for (int j = 0; j <= poly_b.degree(); ++j) {
            Rational trace;
            if (i == 0 && j == 0) {
                trace = grid.dimension;
            } else if (j == 0) {
                trace = grid.rho_marginal.at(i);
            } else if (i == 0) {
                trace = grid.sigma_marginal.at(j);
            } else {
                trace = grid.at(i, j);
            }
            sum += poly_a.at(i) * poly_b.at(j) * trace;
        }
    }
    return sum;
}

DenseHermitian::DenseHermitian(int d, std::vector<std::complex<double>> e)
    : dim(d), entries(std::move(e)) {
    if (d < 1 || d > 64) throw std::invalid_argument("dense hermitian: dimension must be 1..64");
    if (entries.size() != static_cast<size_t>(d) * static_cast<size_t>(d)) {
        throw std::invalid_argument("dense hermitian: entry count must be dim^2");
    }
    for (int r = 0; r < d; ++r) {
        for (int c = r; c < d; ++c) {
            if (std::abs(at(r, c) - std::conj(at(c, r))) > 1e-12) {
                throw std::invalid_argument("dense hermitian: matrix is not conjugate-symmetric");
            }
        }
    }
}

double DenseHermitian::trace() const {
    double t = 0;
    for (int r = 0; r < dim; ++r) t += at(r, r).real();
    return t;
}

std::vector<double> hermitian_eigenvalues(const DenseHermitian& m) {
    const int n = m.dim;
    std::vector<std::complex<double>> a = m.entries;
    auto idx = [n](int r, int c) { return static_cast<size_t>(r) * n + c; };

    constexpr double kOffTolerance = 1e-12;
    constexpr int kMaxSweeps = 200;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a[idx(p, q)]);
        if (std::sqrt(off) < kOffTolerance) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const std::complex<double> apq = a[idx(p, q)];
                const double b = std::abs(apq);
                if (b < 1e-300) continue;
                const std::complex<double> phase = apq / b;
                const double app = a[idx(p, p)].real();
                const double aqq = a[idx(q, q)].real();
                const double theta = 0.5 * std::atan2(2.0 * b, aqq - app);
                const double c = std::cos(theta);
                const std::complex<double> s = std::sin(theta) * phase;

                // A <- U^H A U with U = I except U[pp]=c, U[pq]=s, U[qp]=-conj(s), U[qq]=c.
                for (int r = 0; r < n; ++r) {
                    const std::complex<double> arp = a[idx(r, p)];
                    const std::complex<double> arq = a[idx(r, q)];
                    a[idx(r, p)] = c * arp - std::conj(s) * arq;
                    a[idx(r, q)] = s * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const std::complex<double> apr = a[idx(p, r)];
                    const std::complex<double> aqr = a[idx(q, r)];
                    a[idx(p, r)] = c * apr - s * aqr;
                    a[idx(q, r)] = std::conj(s) * apr + c * aqr;
                }
                a[idx(p, q)] = 0;
                a[idx(q, p)] = 0;
                a[idx(p, p)] = a[idx(p, p)].real();
                a[idx(q, q)] = a[idx(q, q)].real();
            }
        }
    }
    if (sweep == kMaxSweeps) {
        throw std::runtime_error("hermitian_eigenvalues: Jacobi iteration did not converge");
    }
    std::vector<double> eig(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) eig[static_cast<size_t>(r)] = a[idx(r, r)].real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

DenseHermitian partial_transpose(const DenseHermitian& m, int dim_a, int dim_b) {
    if (dim_a * dim_b != m.dim) {
        throw std::invalid_argument("partial_transpose: dim_a * dim_b must equal dimension");
    }
    std::vector<std::complex<double>> out(m.entries.size());
    for (int a1 = 0; a1 < dim_a; ++a1)
        for (int b1 = 0; b1 < dim_b; ++b1)
            for (int a2 = 0; a2 < dim_a; ++a2)
                for (int b2 = 0; b2 < dim_b; ++b2) {
                    const int row = a1 * dim_b + b1;
                    const int col = a2 * dim_b + b2;
                    const int src_row = a1 * dim_b + b2;
                    const int src_col = a2 * dim_b + b1;
                    out[static_cast<size_t>(row) * m.dim + col] = m.at(src_row, src_col);
                }
    return DenseHermitian(m.dim, std::move(out));
}

namespace {

std::vector<std::complex<double>> multiply(const std::vector<std::complex<double>>& x,
                                           const std::vector<std::complex<double>>& y, int n) {
    std::vector<std::complex<double>> out(static_cast<size_t>(n) * n, 0.0);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const std::complex<double> xv = x[static_cast<size_t>(r) * n + k];
            if (xv == 0.0) continue;
            for (int c = 0; c < n; ++c) out[static_cast<size_t>(r) * n + c] += xv * y[static_cast<size_t>(k) * n + c];
        }
    return out;
}

}  // namespace

std::vector<double> pt_moments(const DenseHermitian& m, int dim_a, int dim_b, int t) {
    if (t < 1) throw std::invalid_argument("pt_moments: t must be >= 1");
    const DenseHermitian pt = partial_transpose(m, dim_a, dim_b);
    const int n = pt.dim;
    std::vector<double> moments;
    moments.reserve(static_cast<size_t>(t));
    std::vector<std::complex<double>> power = pt.entries;
    for (int j = 1; j <= t; ++j) {
        double tr = 0;
        for (int r = 0; r < n; ++r) tr += power[static_cast<size_t>(r) * n + r].real();
        moments.push_back(tr);
        if (j < t) power = multiply(power, pt.entries, n);
    }
    return moments;
}

namespace {

// e_k = (1/k) sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
template <typename T>
std::vector<T> esp_from_moments(const std::vector<T>& p, int r) {
    std::vector<T> e(static_cast<size_t>(r) + 1, T(0));
    e[0] = T(1);
    for (int k = 1; k <= r; ++k) {
        T acc(0);
        for (int i = 1; i <= k; ++i) {
            T term = e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i) - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        e[static_cast<size_t>(k)] = acc / T(k);
    }
    return e;
}

}  // namespace

EntanglementVerdict detect_entanglement(const std::vector<double>& pt, int r, double tolerance) {
    if (static_cast<int>(pt.size()) < r) {
        throw std::invalid_argument("detect_entanglement: needs at least r moments");
    }
    const auto e = esp_from_moments(pt, r);
    for (int i = 1; i <= r; ++i) {
        if (e[static_cast<size_t>(i)] < -tolerance) return {true, i};
    }
    return {false, 0};
}

EntanglementVerdict detect_entanglement(const std::vector<Rational>& pt, int r) {
    if (static_cast<int>(pt.size()) < r) {
        throw std::invalid_argument("detect_entanglement: needs at least r moments");
    }
    const auto e = esp_from_moments(pt, r);
    for (int i = 1; i <= r; ++i) {
        if (e[static_cast<size_t>(i)] < 0) return {true, i};
    }
    return {false, 0};
}

double schatten_reference(const DenseHermitian& a, const DenseHermitian& b, int p) {
    if (p < 1) throw std::invalid_argument("schatten_reference: p must be >= 1");
    if (a.dim != b.dim) throw std::invalid_argument("schatten_reference: dimension mismatch");
    std::vector<std::complex<double>> diff(a.entries.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = a.entries[i] - b.entries[i];
    const auto eig = hermitian_eigenvalues(DenseHermitian(a.dim, std::move(diff)));
    double sum = 0;
    for (double lambda : eig) sum += std::pow(std::abs(lambda), p);
    return std::pow(sum, 1.0 / p);
}

}  // namespace tracepow
