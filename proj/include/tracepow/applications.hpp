#pragma once

#include <complex>
#include <vector>

#include "tracepow/multi_state.hpp"
#include "tracepow/spectrum.hpp"

namespace tracepow {

/// Polynomial f(x) = sum c_k x^k with exact rational coefficients.
struct PolynomialSpec {
    std::vector<Rational> coeffs;  // c_0..c_m

    explicit PolynomialSpec(std::vector<Rational> c);

    int degree() const { return degree_; }
    Rational coeff_l1() const { return coeff_l1_; }
    const Rational& at(int k) const { return coeffs.at(static_cast<size_t>(k)); }

  private:
    int degree_ = 0;
    Rational coeff_l1_;
};

/// Tr(f(rho)) from a power-sum series: c_0 * rank_or_dim + sum c_k P_k.
/// The caller chooses whether zero eigenvalues count toward the constant term.
Rational nonlinear_trace(const PolynomialSpec& poly, const PowerSumSeries& series,
                         int rank_or_dim);

/// Truncated Taylor cost sum_{i=1..q} Tr((rho - I)^i rho); needs moments up
/// to order q+1.
Rational gibbs_cost(const PowerSumSeries& series, int q);

/// sum_{i,j >= 0} cA_i cB_j Tr(rho^i sigma^j), with the i=0 / j=0 marginals
/// taken from the grid's embedded series and Tr(I) from its dimension.
Rational k_alpha_distance(const CrossTraceGrid& grid, const PolynomialSpec& poly_a,
                          const PolynomialSpec& poly_b);

/// Small dense Hermitian matrix, row-major, d <= 64.
struct DenseHermitian {
    int dim = 0;
    std::vector<std::complex<double>> entries;

    DenseHermitian(int d, std::vector<std::complex<double>> e);

    const std::complex<double>& at(int r, int c) const {
        return entries[static_cast<size_t>(r) * static_cast<size_t>(dim) + static_cast<size_t>(c)];
    }
    std::complex<double>& at(int r, int c) {
        return entries[static_cast<size_t>(r) * static_cast<size_t>(dim) + static_cast<size_t>(c)];
    }
    double trace() const;
};

/// Eigenvalues, descending, via cyclic Jacobi sweeps (off-diagonal norm below
/// 1e-12, 200-sweep cap).
std::vector<double> hermitian_eigenvalues(const DenseHermitian& m);

/// Transpose on the B factor: (a b, a' b') -> (a b', a' b). Involution,
/// trace-preserving.
DenseHermitian partial_transpose(const DenseHermitian& m, int dim_a, int dim_b);

/// Tr[(rho^Gamma)^j] for j = 1..t via repeated multiplication.
std::vector<double> pt_moments(const DenseHermitian& m, int dim_a, int dim_b, int t);

struct EntanglementVerdict {
    bool entangled = false;
    int witness_index = 0;  // smallest i with e_i < -tolerance; 0 if none
};

/// Sign check on the elementary symmetric polynomials recovered from PT
/// moments; a negative e_i certifies a negative PT eigenvalue.
EntanglementVerdict detect_entanglement(const std::vector<double>& pt_moments, int r,
                                        double tolerance = 1e-9);
/// Exact-rational variant: comparisons are exact, no tolerance.
EntanglementVerdict detect_entanglement(const std::vector<Rational>& pt_moments, int r);

/// (Tr|a-b|^p)^(1/p), reference computation from eigenvalues of a - b.
double schatten_reference(const DenseHermitian& a, const DenseHermitian& b, int p);

}  // namespace tracepow
