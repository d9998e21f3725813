#pragma once

#include <vector>

namespace momrec {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the three-term recurrence. Accurate to ~1e-15 for n <= 128.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

/// Same rule mapped to [a, b] (weights include the interval scale).
GaussRule gauss_legendre(int n, double a, double b);

/// Values P_0(t) .. P_n(t) of the standard Legendre polynomials.
std::vector<double> legendre_values(int n, double t);

/// Orthonormal Legendre system on an interval [a, b] with respect to the
/// uniform *probability* measure: p_k(x) = sqrt(2k+1) P_k((2x-a-b)/(b-a)).
class LegendreInterval {
public:
    LegendreInterval() = default;
    LegendreInterval(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }

    /// p_0(x) .. p_n(x) by recurrence (numerically stable at any degree).
    std::vector<double> values(int n, double x) const;

    /// Monomial coefficients of p_k, ascending powers, accumulated in long
    /// double. These grow like 6^k; use only where the degree stays moderate.
    std::vector<std::vector<double>> coefficients(int n) const;

private:
    double a_ = 0.0, b_ = 1.0;
};

/// Product linearization P_m P_n = sum_r lin[r] P_{m+n-2r} (Adams' formula).
/// All coefficients are positive; lin has min(m,n)+1 entries.
std::vector<double> legendre_product_coeffs(int m, int n);

}  // namespace momrec
