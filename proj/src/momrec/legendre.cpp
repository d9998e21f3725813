#include "momrec/legendre.hpp"

#include <cmath>

#include "momrec/errors.hpp"

namespace momrec {

GaussRule gauss_legendre(int n) {
    if (n < 1) throw_usage("gauss_legendre: n must be >= 1");
    GaussRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<size_t>(i)] = -x;
        rule.weights[static_cast<size_t>(i)] = w;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<size_t>(n / 2)] = 0.0;
    return rule;
}

GaussRule gauss_legendre(int n, double a, double b) {
    GaussRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

std::vector<double> legendre_values(int n, double t) {
    std::vector<double> v(static_cast<size_t>(n + 1));
    v[0] = 1.0;
    if (n >= 1) v[1] = t;
    for (int k = 2; k <= n; ++k)
        v[static_cast<size_t>(k)] =
            ((2.0 * k - 1.0) * t * v[static_cast<size_t>(k - 1)] - (k - 1.0) * v[static_cast<size_t>(k - 2)]) / k;
    return v;
}

LegendreInterval::LegendreInterval(double a, double b) : a_(a), b_(b) {
    if (!(b > a)) throw_usage("LegendreInterval: degenerate interval");
}

std::vector<double> LegendreInterval::values(int n, double x) const {
    const double t = (2.0 * x - a_ - b_) / (b_ - a_);
    std::vector<double> v = legendre_values(n, t);
    for (int k = 0; k <= n; ++k) v[static_cast<size_t>(k)] *= std::sqrt(2.0 * k + 1.0);
    return v;
}

std::vector<std::vector<double>> LegendreInterval::coefficients(int n) const {
    // Recurrence carried in monomial coefficient space, long double throughout.
    using LD = long double;
    const LD s = 2.0L / (static_cast<LD>(b_) - static_cast<LD>(a_));
    const LD t0 = -(static_cast<LD>(a_) + static_cast<LD>(b_)) / (static_cast<LD>(b_) - static_cast<LD>(a_));
    std::vector<std::vector<LD>> c(static_cast<size_t>(n + 1));
    c[0] = {1.0L};
    if (n >= 1) c[1] = {t0, s};  // t(x) = t0 + s x
    for (int k = 2; k <= n; ++k) {
        const auto& p1 = c[static_cast<size_t>(k - 1)];
        const auto& p0 = c[static_cast<size_t>(k - 2)];
        std::vector<LD> cur(static_cast<size_t>(k + 1), 0.0L);
        const LD f1 = (2.0L * k - 1.0L) / k, f0 = (k - 1.0L) / k;
        for (size_t j = 0; j < p1.size(); ++j) {
            cur[j] += f1 * t0 * p1[j];
            cur[j + 1] += f1 * s * p1[j];
        }
        for (size_t j = 0; j < p0.size(); ++j) cur[j] -= f0 * p0[j];
        c[static_cast<size_t>(k)] = std::move(cur);
    }
    std::vector<std::vector<double>> out(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        const LD norm = std::sqrt(2.0L * k + 1.0L);
        out[static_cast<size_t>(k)].resize(static_cast<size_t>(k + 1));
        for (int j = 0; j <= k; ++j)
            out[static_cast<size_t>(k)][static_cast<size_t>(j)] =
                static_cast<double>(norm * c[static_cast<size_t>(k)][static_cast<size_t>(j)]);
    }
    return out;
}

std::vector<double> legendre_product_coeffs(int m, int n) {
    // P_m P_n = sum_{r=0}^{min(m,n)} A_r A_{m-r} A_{n-r} / A_{m+n-r}
    //           * (2(m+n-2r)+1)/(2(m+n-r)+1) * P_{m+n-2r},  A_j = C(2j,j)/2^j.
    const int rmax = std::min(m, n);
    std::vector<double> A(static_cast<size_t>(m + n + 1));
    A[0] = 1.0;
    for (int j = 1; j <= m + n; ++j)
        A[static_cast<size_t>(j)] = A[static_cast<size_t>(j - 1)] * (2.0 * j - 1.0) / j;
    std::vector<double> lin(static_cast<size_t>(rmax + 1));
    for (int r = 0; r <= rmax; ++r) {
        lin[static_cast<size_t>(r)] =
            A[static_cast<size_t>(r)] * A[static_cast<size_t>(m - r)] * A[static_cast<size_t>(n - r)] /
            A[static_cast<size_t>(m + n - r)] *
            (2.0 * (m + n - 2 * r) + 1.0) / (2.0 * (m + n - r) + 1.0);
    }
    return lin;
}

}  // namespace momrec
