#pragma once

#include <map>
#include <string>
#include <vector>

#include "momrec/multiindex.hpp"

namespace momrec {

/// Sparse polynomial over n_vars variables: MultiIndex -> coefficient.
/// Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, double, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(int n_vars) : n_vars_(n_vars) {}

    static Polynomial constant(int n_vars, double c);
    /// Single monomial c * x^d.
    static Polynomial monomial(int n_vars, const MultiIndex& d, double c = 1.0);
    /// x_i (zero-based variable index).
    static Polynomial variable(int n_vars, int i);

    int n_vars() const { return n_vars_; }
    int degree() const;
    bool empty() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    double coefficient(const MultiIndex& d) const;

    /// Adds c * x^d, erasing the term if the sum cancels.
    void add_term(const MultiIndex& d, double c);

    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator*(double s) const;

    bool operator==(const Polynomial& q) const {
        return n_vars_ == q.n_vars_ && terms_ == q.terms_;
    }

    /// JSON round trip: {"n_vars": k, "terms": [{"exp": [...], "coef": c}]}.
    std::string to_json() const;
    static Polynomial from_json(const std::string& text);

private:
    int n_vars_ = 0;
    TermMap terms_;
};

/// Sum of coeff * prod point_i^exp_i. Arity mismatch is a usage error.
double poly_eval(const Polynomial& p, const std::vector<double>& point);

/// Coefficient-map convolution; deg(pq) = deg p + deg q.
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Substitutes x_i <- shift_i + scale_i * u_i for every variable, returning
/// the polynomial in u. Used to move domains into the unit box and back.
Polynomial poly_compose_affine(const Polynomial& p, const std::vector<double>& shift,
                               const std::vector<double>& scale);

}  // namespace momrec
