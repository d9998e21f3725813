#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace momrec {

/// Exponent tuple of a monomial in n variables. Entries are nonnegative.
struct MultiIndex {
    std::vector<int> exp;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : exp(std::move(e)) {}
    MultiIndex(std::initializer_list<int> e) : exp(e) {}

    int arity() const { return static_cast<int>(exp.size()); }
    int degree() const;
    int operator[](int i) const { return exp[static_cast<size_t>(i)]; }

    bool operator==(const MultiIndex& o) const { return exp == o.exp; }
    bool operator!=(const MultiIndex& o) const { return exp != o.exp; }
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// the index with the larger leading exponents comes first, so that for two
/// variables degree 1 enumerates as (1,0), (0,1).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return graded_lex_less(a, b);
    }
};

/// Component-wise sum. Arity mismatch is a usage error.
MultiIndex index_add(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices of n_vars variables with total degree <= max_deg,
/// in graded lexicographic order, with an inverse position lookup.
class IndexBasis {
public:
    IndexBasis() = default;
    IndexBasis(int n_vars, int max_deg);

    int n_vars() const { return n_vars_; }
    int max_deg() const { return max_deg_; }
    int size() const { return static_cast<int>(list_.size()); }

    const MultiIndex& operator[](int k) const { return list_[static_cast<size_t>(k)]; }
    const std::vector<MultiIndex>& indices() const { return list_; }

    /// Position of d in the basis; -1 if absent.
    int find(const MultiIndex& d) const;
    /// Position of d, degree error if absent.
    int at(const MultiIndex& d) const;

    bool operator==(const IndexBasis& o) const {
        return n_vars_ == o.n_vars_ && max_deg_ == o.max_deg_;
    }

private:
    int n_vars_ = 0;
    int max_deg_ = 0;
    std::vector<MultiIndex> list_;
    std::map<MultiIndex, int, GradedLexLess> pos_;
};

/// Basis of N^{n_vars} truncated at max_deg; count is C(n_vars+max_deg, n_vars).
IndexBasis enumerate_indices(int n_vars, int max_deg);

/// Binomial coefficient as a double (exact until ~C(57,28)).
double binomial(int n, int k);

}  // namespace momrec
