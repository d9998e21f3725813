#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "momrec/multiindex.hpp"
#include "momrec/polynomial.hpp"

namespace momrec {

/// Dense real symmetric matrix. Symmetry holds by construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int size) : m_(Eigen::MatrixXd::Zero(size, size)) {}
    explicit SymMatrix(Eigen::MatrixXd m);

    int size() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, double v) { m_(i, j) = v; m_(j, i) = v; }
    const Eigen::MatrixXd& mat() const { return m_; }

    double frobenius() const { return m_.norm(); }
    std::string to_csv() const;  // row-major, for debugging

private:
    Eigen::MatrixXd m_;
};

struct PsdReport {
    double min_eigenvalue = 0.0;
    bool is_psd = false;
};

/// Smallest eigenvalue via symmetric eigendecomposition;
/// is_psd <=> min eigenvalue >= -tol. tol < 0 selects 1e-8 * (1 + ||m||_F).
PsdReport psd_check(const SymMatrix& m, double tol = -1.0);

/// Truncated pseudo-moment vector over the graded basis of degree <= 2*order.
struct MomentSequence {
    IndexBasis basis;           // n_vars variables, max_deg = 2*order
    Eigen::VectorXd values;
    int order = 0;

    MomentSequence() = default;
    MomentSequence(int n_vars, int order_);

    int n_vars() const { return basis.n_vars(); }
    double operator[](int k) const { return values[k]; }
    double value(const MultiIndex& d) const { return values[basis.at(d)]; }
};

/// Index sets D of Problem-style partial moment data.
enum class KnownKind {
    graph_linear,  // d_y <= 1 (zero-th and first order in y), |d| <= degree_cap
    marginal       // |d_x| = 0 or d_y = 0, degrees <= degree_cap
};

/// Moments known in advance, restricted to the declared index set.
struct KnownMoments {
    int n = 1;          // x-dimension; indices have arity n+1
    double gamma = 1.0; // y range is [0, gamma]
    KnownKind kind = KnownKind::graph_linear;
    int degree_cap = 0;
    std::map<MultiIndex, double, GradedLexLess> values;

    bool in_set(const MultiIndex& d) const;
    void insert(const MultiIndex& d, double v);  // usage error outside D
    double at(const MultiIndex& d) const;

    /// True when every index of the declared set up to `cap` is present.
    bool complete_to(int cap) const;

    std::string to_json(const std::string& provenance_json = "") const;
    static KnownMoments from_json(const std::string& text);
};

/// Compact semialgebraic description of X x Y: X in [0,1]^n cut out by user
/// polynomials in x, Y = [0, gamma]. The ball constraint n - |x|^2 and the
/// range constraint y(gamma - y) are always appended.
class SemialgebraicSet {
public:
    SemialgebraicSet(int n, double gamma, std::vector<Polynomial> user_g_in_x);

    /// X = [0,1]^n via x_i(1 - x_i) >= 0 per dimension.
    static SemialgebraicSet unit_box(int n, double gamma);

    int n() const { return n_; }
    double gamma() const { return gamma_; }

    /// All constraint polynomials over n+1 variables: ball, range, then user
    /// polynomials (lifted from x to (x, y)).
    const std::vector<Polynomial>& constraints() const { return g_; }
    /// Half-degrees d_j = ceil(deg g_j / 2), aligned with constraints().
    const std::vector<int>& half_degrees() const { return dj_; }
    int max_half_degree() const;

private:
    int n_;
    double gamma_;
    std::vector<Polynomial> g_;
    std::vector<int> dj_;
};

/// Entry (a,b) = seq[a+b] over indices of degree <= r; size C(n_vars+r, n_vars).
SymMatrix moment_matrix(const MomentSequence& seq, int r);

/// Entry (a,b) = sum_d g_d seq[d+a+b] over indices of degree <= t.
SymMatrix localizing_matrix(const MomentSequence& seq, const Polynomial& g, int t);

/// Sparse pattern of a localizing (or moment, g = 1) matrix as a linear map
/// from the full moment vector. Rows/columns follow the order-t basis.
struct BlockSpec {
    int size = 0;
    struct Entry {
        int row = 0, col = 0;
        std::vector<std::pair<int, double>> terms;  // (position in full basis, weight)
    };
    std::vector<Entry> upper;  // row <= col

    /// Dense evaluation against a full moment vector.
    SymMatrix assemble(const Eigen::VectorXd& phi) const;
};

BlockSpec moment_block(const IndexBasis& full, int r);
BlockSpec localizing_block(const IndexBasis& full, const Polynomial& g, int t);

}  // namespace momrec
