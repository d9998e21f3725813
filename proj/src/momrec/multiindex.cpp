#include "momrec/multiindex.hpp"

#include <numeric>

#include "momrec/errors.hpp"

namespace momrec {

int MultiIndex::degree() const {
    return std::accumulate(exp.begin(), exp.end(), 0);
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Within a degree block, (1,0) precedes (0,1): larger exponents left-first.
    return a.exp > b.exp;
}

MultiIndex index_add(const MultiIndex& a, const MultiIndex& b) {
    if (a.arity() != b.arity())
        throw_usage("index_add: arity mismatch");
    MultiIndex r = a;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
    return r;
}

namespace {

void enumerate_degree(int n_vars, int deg, std::vector<int>& cur,
                      std::vector<MultiIndex>& out) {
    const int slot = static_cast<int>(cur.size());
    if (slot == n_vars - 1) {
        cur.push_back(deg);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur.push_back(e);
        enumerate_degree(n_vars, deg - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

IndexBasis::IndexBasis(int n_vars, int max_deg) : n_vars_(n_vars), max_deg_(max_deg) {
    if (n_vars < 1) throw_usage("IndexBasis: n_vars must be >= 1");
    if (max_deg < 0) throw_usage("IndexBasis: max_deg must be >= 0");
    std::vector<int> cur;
    for (int d = 0; d <= max_deg; ++d) enumerate_degree(n_vars, d, cur, list_);
    for (int k = 0; k < size(); ++k) pos_.emplace(list_[static_cast<size_t>(k)], k);
}

int IndexBasis::find(const MultiIndex& d) const {
    auto it = pos_.find(d);
    return it == pos_.end() ? -1 : it->second;
}

int IndexBasis::at(const MultiIndex& d) const {
    const int k = find(d);
    if (k < 0) throw_degree("IndexBasis: index outside basis truncation");
    return k;
}

IndexBasis enumerate_indices(int n_vars, int max_deg) {
    return IndexBasis(n_vars, max_deg);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
    return r;
}

}  // namespace momrec
