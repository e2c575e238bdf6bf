// Weighted threshold graphs and their matrices.
//
// A graph on nodes 1..n is grown by adding node i (i = 2..n) linked to all
// earlier nodes with weight w_i; the weight vector W = (w_2, ..., w_n)
// encodes it completely.  Node indices are 1-based everywhere in this API
// to match that labeling.

#pragma once

#include "wtg/matrix.hpp"
#include "wtg/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wtg {

template <scalar S>
class weight_vector {
public:
    // n = 1 (no weights) is the single-node base case.
    weight_vector() : weights_() {}

    explicit weight_vector(std::vector<S> weights) : weights_(std::move(weights)) {}

    static weight_vector zero(std::size_t n) {
        if (n < 1) throw dimension_mismatch("weight_vector: order must be >= 1");
        return weight_vector(std::vector<S>(n - 1, S(0)));
    }

    static weight_vector constant(std::size_t n, const S& value) {
        if (n < 1) throw dimension_mismatch("weight_vector: order must be >= 1");
        return weight_vector(std::vector<S>(n - 1, value));
    }

    std::size_t order() const { return weights_.size() + 1; }

    // w_i for node index i in 2..n.
    const S& at_node(std::size_t i) const {
        if (i < 2 || i > order())
            throw std::out_of_range("weight_vector: node index out of range");
        return weights_[i - 2];
    }

    const std::vector<S>& weights() const { return weights_; }

    bool operator==(const weight_vector& other) const = default;

private:
    std::vector<S> weights_;
};

template <scalar S>
bool approx_equal(const weight_vector<S>& a, const weight_vector<S>& b,
                  double tol = default_tol) {
    if (a.order() != b.order()) return false;
    for (std::size_t i = 2; i <= a.order(); ++i)
        if (!scalar_eq(a.at_node(i), b.at_node(i), tol)) return false;
    return true;
}

// A[m][k] = w_max(m,k) off the diagonal, 0 on it.
template <scalar S>
sym_matrix<S> adjacency(const weight_vector<S>& w) {
    const std::size_t n = w.order();
    return sym_matrix<S>::from_upper(n, [&](std::size_t i, std::size_t j) {
        return i == j ? S(0) : w.at_node(std::max(i, j) + 1);
    });
}

// Weighted degrees d_i = (i-1) w_i + sum_{j>i} w_j; the i = 1 term has no
// weight of its own and reduces to the plain suffix sum.
template <scalar S>
std::vector<S> degrees(const weight_vector<S>& w) {
    const std::size_t n = w.order();
    std::vector<S> d(n, S(0));
    S suffix(0);
    for (std::size_t i = n; i >= 2; --i) {
        d[i - 1] = S(static_cast<long long>(i - 1)) * w.at_node(i) + suffix;
        suffix += w.at_node(i);
    }
    d[0] = suffix;
    return d;
}

// Q_W = diag(d) - A; every row sums to zero.
template <scalar S>
sym_matrix<S> laplacian(const weight_vector<S>& w) {
    const std::size_t n = w.order();
    const std::vector<S> d = degrees(w);
    return sym_matrix<S>::from_upper(n, [&](std::size_t i, std::size_t j) {
        return i == j ? d[i] : S(-w.at_node(std::max(i, j) + 1));
    });
}

// Q_i, the Laplacian of the graph whose only nonzero weight is w_i = 1:
// identity on the leading (i-1) block, -1 along row/column i below the
// diagonal, i-1 at (i,i), zero elsewhere.
template <scalar S>
sym_matrix<S> basis_matrix(std::size_t n, std::size_t i) {
    if (i < 2 || i > n)
        throw std::out_of_range("basis_matrix: index must satisfy 2 <= i <= n");
    return sym_matrix<S>::from_upper(n, [&](std::size_t r, std::size_t c) {
        const std::size_t m = r + 1, k = c + 1; // 1-based
        if (m == k && m < i) return S(1);
        if (m == k && m == i) return S(static_cast<long long>(i - 1));
        if (k == i && m < i) return S(-1);
        return S(0);
    });
}

} // namespace wtg
