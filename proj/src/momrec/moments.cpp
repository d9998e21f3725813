#include "momrec/moments.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "momrec/errors.hpp"

namespace momrec {

SymMatrix::SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw_usage("SymMatrix: not square");
    m_ = 0.5 * (m_ + m_.transpose()).eval();
}

std::string SymMatrix::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < size(); ++i) {
        for (int j = 0; j < size(); ++j) {
            if (j) os << ',';
            os << m_(i, j);
        }
        os << '\n';
    }
    return os.str();
}

PsdReport psd_check(const SymMatrix& m, double tol) {
    if (tol < 0.0) tol = 1e-8 * (1.0 + m.frobenius());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.compute(m.mat(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw Error(ErrorKind::numerical, "psd_check: eigen-iteration failed to converge");
    PsdReport rep;
    rep.min_eigenvalue = m.size() == 0 ? 0.0 : es.eigenvalues().minCoeff();
    rep.is_psd = rep.min_eigenvalue >= -tol;
    return rep;
}

MomentSequence::MomentSequence(int n_vars, int order_)
    : basis(n_vars, 2 * order_), values(Eigen::VectorXd::Zero(basis.size())), order(order_) {}

bool KnownMoments::in_set(const MultiIndex& d) const {
    if (d.arity() != n + 1) return false;
    if (d.degree() > degree_cap) return false;
    const int dy = d[n];
    if (kind == KnownKind::graph_linear) return dy <= 1;
    int dx_total = d.degree() - dy;
    return dx_total == 0 || dy == 0;
}

void KnownMoments::insert(const MultiIndex& d, double v) {
    if (!in_set(d)) throw_usage("KnownMoments: index outside the declared set D");
    values[d] = v;
}

double KnownMoments::at(const MultiIndex& d) const {
    auto it = values.find(d);
    if (it == values.end()) throw_degree("KnownMoments: missing moment");
    return it->second;
}

bool KnownMoments::complete_to(int cap) const {
    if (cap > degree_cap) return false;
    IndexBasis all(n + 1, cap);
    for (const MultiIndex& d : all.indices())
        if (in_set(d) && values.find(d) == values.end()) return false;
    return true;
}

std::string KnownMoments::to_json(const std::string& provenance_json) const {
    nlohmann::json j;
    j["n"] = n;
    j["gamma"] = gamma;
    j["D"] = kind == KnownKind::graph_linear ? "graph-linear" : "marginal";
    j["degree_cap"] = degree_cap;
    j["moments"] = nlohmann::json::array();
    for (const auto& [d, v] : values)
        j["moments"].push_back({{"exp", d.exp}, {"value", v}});
    if (!provenance_json.empty()) j["provenance"] = nlohmann::json::parse(provenance_json);
    return j.dump(2);
}

KnownMoments KnownMoments::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::usage, std::string("KnownMoments JSON parse: ") + e.what());
    }
    KnownMoments km;
    try {
        km.n = j.at("n").get<int>();
        km.gamma = j.at("gamma").get<double>();
        const std::string dk = j.at("D").get<std::string>();
        if (dk == "graph-linear") km.kind = KnownKind::graph_linear;
        else if (dk == "marginal") km.kind = KnownKind::marginal;
        else throw_usage("KnownMoments JSON: D must be graph-linear or marginal");
        km.degree_cap = j.at("degree_cap").get<int>();
        for (const auto& t : j.at("moments"))
            km.insert(MultiIndex(t.at("exp").get<std::vector<int>>()), t.at("value").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::usage, std::string("KnownMoments JSON: ") + e.what());
    }
    const MultiIndex zero(std::vector<int>(static_cast<size_t>(km.n + 1), 0));
    if (km.values.find(zero) == km.values.end())
        throw_usage("KnownMoments JSON: zero index moment is required");
    return km;
}

namespace {

Polynomial lift_to_xy(const Polynomial& g_in_x, int n) {
    // Adds a trailing y exponent of zero to every term.
    Polynomial out(n + 1);
    for (const auto& [d, c] : g_in_x.terms()) {
        std::vector<int> e = d.exp;
        e.push_back(0);
        out.add_term(MultiIndex(e), c);
    }
    return out;
}

}  // namespace

SemialgebraicSet::SemialgebraicSet(int n, double gamma, std::vector<Polynomial> user_g_in_x)
    : n_(n), gamma_(gamma) {
    if (n < 1) throw_usage("SemialgebraicSet: n must be >= 1");
    if (!(gamma > 0.0)) throw_usage("SemialgebraicSet: gamma must be > 0");
    // Ball constraint n - |x|^2 (redundant on [0,1]^n, kept for the quadratic
    // module to stay Archimedean).
    Polynomial ball = Polynomial::constant(n + 1, static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<size_t>(n + 1), 0);
        e[static_cast<size_t>(i)] = 2;
        ball.add_term(MultiIndex(e), -1.0);
    }
    g_.push_back(ball);
    // Range constraint y(gamma - y).
    Polynomial range(n + 1);
    std::vector<int> ey(static_cast<size_t>(n + 1), 0);
    ey[static_cast<size_t>(n)] = 1;
    range.add_term(MultiIndex(ey), gamma);
    ey[static_cast<size_t>(n)] = 2;
    range.add_term(MultiIndex(ey), -1.0);
    g_.push_back(range);
    for (const Polynomial& g : user_g_in_x) {
        if (g.n_vars() != n) throw_usage("SemialgebraicSet: user constraint must be in x only");
        g_.push_back(lift_to_xy(g, n));
    }
    for (const Polynomial& g : g_) dj_.push_back((g.degree() + 1) / 2);
}

SemialgebraicSet SemialgebraicSet::unit_box(int n, double gamma) {
    std::vector<Polynomial> gs;
    for (int i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(n, i);
        gs.push_back(xi - poly_mul(xi, xi));
    }
    return SemialgebraicSet(n, gamma, std::move(gs));
}

int SemialgebraicSet::max_half_degree() const {
    int m = 0;
    for (int d : dj_) m = std::max(m, d);
    return m;
}

SymMatrix moment_matrix(const MomentSequence& seq, int r) {
    if (r > seq.order) throw_degree("moment_matrix: r exceeds the sequence order");
    IndexBasis rows(seq.n_vars(), r);
    SymMatrix m(rows.size());
    for (int i = 0; i < rows.size(); ++i)
        for (int j = i; j < rows.size(); ++j)
            m.set(i, j, seq.value(index_add(rows[i], rows[j])));
    return m;
}

SymMatrix localizing_matrix(const MomentSequence& seq, const Polynomial& g, int t) {
    if (g.n_vars() != seq.n_vars()) throw_usage("localizing_matrix: arity mismatch");
    const int dj = (g.degree() + 1) / 2;
    if (t + dj > seq.order) throw_degree("localizing_matrix: degree overflow");
    IndexBasis rows(seq.n_vars(), t);
    SymMatrix m(rows.size());
    for (int i = 0; i < rows.size(); ++i)
        for (int j = i; j < rows.size(); ++j) {
            const MultiIndex ab = index_add(rows[i], rows[j]);
            double v = 0.0;
            for (const auto& [d, c] : g.terms()) v += c * seq.value(index_add(d, ab));
            m.set(i, j, v);
        }
    return m;
}

SymMatrix BlockSpec::assemble(const Eigen::VectorXd& phi) const {
    SymMatrix m(size);
    for (const Entry& e : upper) {
        double v = 0.0;
        for (const auto& [p, w] : e.terms) v += w * phi[p];
        m.set(e.row, e.col, v);
    }
    return m;
}

BlockSpec moment_block(const IndexBasis& full, int r) {
    IndexBasis rows(full.n_vars(), r);
    BlockSpec spec;
    spec.size = rows.size();
    for (int i = 0; i < rows.size(); ++i)
        for (int j = i; j < rows.size(); ++j) {
            BlockSpec::Entry e;
            e.row = i;
            e.col = j;
            e.terms.emplace_back(full.at(index_add(rows[i], rows[j])), 1.0);
            spec.upper.push_back(std::move(e));
        }
    return spec;
}

BlockSpec localizing_block(const IndexBasis& full, const Polynomial& g, int t) {
    if (g.n_vars() != full.n_vars()) throw_usage("localizing_block: arity mismatch");
    IndexBasis rows(full.n_vars(), t);
    BlockSpec spec;
    spec.size = rows.size();
    for (int i = 0; i < rows.size(); ++i)
        for (int j = i; j < rows.size(); ++j) {
            BlockSpec::Entry e;
            e.row = i;
            e.col = j;
            const MultiIndex ab = index_add(rows[i], rows[j]);
            for (const auto& [d, c] : g.terms())
                e.terms.emplace_back(full.at(index_add(d, ab)), c);
            spec.upper.push_back(std::move(e));
        }
    return spec;
}

}  // namespace momrec
