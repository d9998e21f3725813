#include "momrec/polynomial.hpp"

#include <cmath>

#include "json.hpp"
#include "momrec/errors.hpp"

namespace momrec {

Polynomial Polynomial::constant(int n_vars, double c) {
    Polynomial p(n_vars);
    p.add_term(MultiIndex(std::vector<int>(static_cast<size_t>(n_vars), 0)), c);
    return p;
}

Polynomial Polynomial::monomial(int n_vars, const MultiIndex& d, double c) {
    if (d.arity() != n_vars) throw_usage("Polynomial::monomial: arity mismatch");
    Polynomial p(n_vars);
    p.add_term(d, c);
    return p;
}

Polynomial Polynomial::variable(int n_vars, int i) {
    if (i < 0 || i >= n_vars) throw_usage("Polynomial::variable: index out of range");
    std::vector<int> e(static_cast<size_t>(n_vars), 0);
    e[static_cast<size_t>(i)] = 1;
    return monomial(n_vars, MultiIndex(e));
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [idx, c] : terms_) d = std::max(d, idx.degree());
    return d;
}

double Polynomial::coefficient(const MultiIndex& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const MultiIndex& d, double c) {
    if (d.arity() != n_vars_) throw_usage("Polynomial::add_term: arity mismatch");
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    } else if (c == 0.0) {
        terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    if (n_vars_ != q.n_vars_) throw_usage("Polynomial::operator+: arity mismatch");
    Polynomial r = *this;
    for (const auto& [d, c] : q.terms_) r.add_term(d, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    return *this + q * -1.0;
}

Polynomial Polynomial::operator*(double s) const {
    Polynomial r(n_vars_);
    if (s == 0.0) return r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, c * s);
    return r;
}

std::string Polynomial::to_json() const {
    nlohmann::json j;
    j["n_vars"] = n_vars_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [d, c] : terms_)
        j["terms"].push_back({{"exp", d.exp}, {"coef", c}});
    return j.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::usage, std::string("Polynomial JSON parse: ") + e.what());
    }
    if (!j.contains("n_vars") || !j.contains("terms"))
        throw_usage("Polynomial JSON: expected keys n_vars, terms");
    Polynomial p(j["n_vars"].get<int>());
    for (const auto& t : j["terms"]) {
        MultiIndex d(t["exp"].get<std::vector<int>>());
        for (int e : d.exp)
            if (e < 0) throw_usage("Polynomial JSON: negative exponent");
        p.add_term(d, t["coef"].get<double>());
    }
    return p;
}

double poly_eval(const Polynomial& p, const std::vector<double>& point) {
    if (static_cast<int>(point.size()) != p.n_vars())
        throw_usage("poly_eval: point arity mismatch");
    double sum = 0.0;
    for (const auto& [d, c] : p.terms()) {
        double m = c;
        for (int i = 0; i < d.arity(); ++i)
            for (int k = 0; k < d[i]; ++k) m *= point[static_cast<size_t>(i)];
        sum += m;
    }
    return sum;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    if (p.n_vars() != q.n_vars()) throw_usage("poly_mul: arity mismatch");
    Polynomial r(p.n_vars());
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms())
            r.add_term(index_add(a, b), ca * cb);
    return r;
}

Polynomial poly_compose_affine(const Polynomial& p, const std::vector<double>& shift,
                               const std::vector<double>& scale) {
    const int n = p.n_vars();
    if (static_cast<int>(shift.size()) != n || static_cast<int>(scale.size()) != n)
        throw_usage("poly_compose_affine: shift/scale arity mismatch");
    Polynomial out(n);
    for (const auto& [d, c] : p.terms()) {
        // prod_i (shift_i + scale_i u_i)^{e_i}, expanded one variable at a time
        Polynomial term = Polynomial::constant(n, c);
        for (int i = 0; i < n; ++i) {
            Polynomial lin(n);
            lin.add_term(MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)), shift[static_cast<size_t>(i)]);
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(i)] = 1;
            lin.add_term(MultiIndex(e), scale[static_cast<size_t>(i)]);
            for (int k = 0; k < d[i]; ++k) term = poly_mul(term, lin);
        }
        out = out + term;
    }
    return out;
}

}  // namespace momrec
