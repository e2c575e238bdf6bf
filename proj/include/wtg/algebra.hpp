// The commutative algebra spanned by the basis Laplacians Q_2, ..., Q_n.
// Every element is uniquely a weighted combination sum_i w_i Q_i, so
// elements are represented by their weight vectors and all products reduce
// to closed-form coordinate arithmetic.

#pragma once

#include "wtg/error.hpp"
#include "wtg/matrix.hpp"
#include "wtg/scalar.hpp"
#include "wtg/threshold.hpp"

#include <cstddef>
#include <vector>

namespace wtg {

// An element of the algebra is its coordinate vector in the Q_i basis,
// which is exactly a weight vector.
template <scalar S>
using algebra_element = weight_vector<S>;

// Inverse of the span map: reads the candidate weights off row 1
// (w_j = -m[1][j], the only candidate possible), then verifies that the
// candidate's Laplacian reproduces m entrywise.  Anything else -- nonzero
// row sums, off-diagonal disagreements between rows -- is not in the
// algebra.
template <scalar S>
weight_vector<S> decompose(const sym_matrix<S>& m, double tol = default_tol) {
    const std::size_t n = m.order();
    std::vector<S> w(n - 1);
    for (std::size_t j = 2; j <= n; ++j) w[j - 2] = -m(0, j - 1);
    weight_vector<S> candidate(std::move(w));

    const sym_matrix<S> rebuilt = laplacian(candidate);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!scalar_eq(rebuilt(i, j), m(i, j), tol))
                throw not_in_algebra("matrix is not a weighted threshold Laplacian");
    return candidate;
}

// Membership test on raw row data, for callers holding unvalidated input:
// asymmetry is a membership failure, not a usage error.
template <scalar S>
weight_vector<S> decompose_rows(const std::vector<std::vector<S>>& rows,
                                double tol = default_tol) {
    const std::size_t n = rows.size();
    if (n < 1) throw dimension_mismatch("decompose_rows: empty matrix");
    for (const auto& r : rows)
        if (r.size() != n)
            throw dimension_mismatch("decompose_rows: matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(rows[i][j] == rows[j][i]))
                throw not_in_algebra("matrix is not symmetric");
    return decompose(sym_matrix<S>::from_rows(rows), tol);
}

// Q_i Q_j = Q_min(i,j) for distinct indices; Q_i^2 via basis_power.
template <scalar S>
algebra_element<S> basis_product(std::size_t n, std::size_t i, std::size_t j);

// Q_i^p = i^(p-1) Q_i - (1 + i + ... + i^(p-2)) sum_{j<i} Q_j.  The lower
// coefficient is the geometric sum form of (i^(p-1) - 1)/(i - 1), kept as
// a sum so no division is involved.
template <scalar S>
algebra_element<S> basis_power(std::size_t n, std::size_t i, std::size_t p) {
    if (i < 2 || i > n)
        throw std::out_of_range("basis_power: index must satisfy 2 <= i <= n");
    if (p < 1) throw std::out_of_range("basis_power: exponent must be >= 1");

    S lead(1);      // i^(p-1)
    S lower(0);     // 1 + i + ... + i^(p-2)
    const S base = S(static_cast<long long>(i));
    for (std::size_t k = 1; k < p; ++k) {
        lower += lead;
        lead = lead * base;
    }

    std::vector<S> w(n - 1, S(0));
    w[i - 2] = lead;
    for (std::size_t j = 2; j < i; ++j) w[j - 2] = -lower;
    return algebra_element<S>(std::move(w));
}

template <scalar S>
algebra_element<S> basis_product(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 2 || i > n || j < 2 || j > n)
        throw std::out_of_range("basis_product: indices must satisfy 2 <= i, j <= n");
    if (i == j) return basis_power<S>(n, i, 2);
    std::vector<S> w(n - 1, S(0));
    w[std::min(i, j) - 2] = S(1);
    return algebra_element<S>(std::move(w));
}

// Coordinates of Q_W Q_W': coordinate i is
//   i w_i w'_i - sum_{j>i} (w_j w'_j - w_i w'_j - w_j w'_i),
// evaluated in O(n) with suffix sums.
template <scalar S>
algebra_element<S> product(const algebra_element<S>& a, const algebra_element<S>& b) {
    const std::size_t n = a.order();
    if (b.order() != n) throw dimension_mismatch("product: order mismatch");

    std::vector<S> w(n >= 1 ? n - 1 : 0, S(0));
    S suf_a(0), suf_b(0), suf_ab(0); // sums of a_j, b_j, a_j b_j over j > i
    for (std::size_t i = n; i >= 2; --i) {
        const S& ai = a.at_node(i);
        const S& bi = b.at_node(i);
        w[i - 2] = S(static_cast<long long>(i)) * ai * bi
                 - (suf_ab - ai * suf_b - bi * suf_a);
        suf_a += ai;
        suf_b += bi;
        suf_ab += ai * bi;
    }
    return algebra_element<S>(std::move(w));
}

template <scalar S>
algebra_element<S> add(const algebra_element<S>& a, const algebra_element<S>& b) {
    const std::size_t n = a.order();
    if (b.order() != n) throw dimension_mismatch("add: order mismatch");
    std::vector<S> w(n - 1);
    for (std::size_t i = 2; i <= n; ++i) w[i - 2] = a.at_node(i) + b.at_node(i);
    return algebra_element<S>(std::move(w));
}

template <scalar S>
algebra_element<S> scale(const S& c, const algebra_element<S>& a) {
    std::vector<S> w(a.order() - 1);
    for (std::size_t i = 2; i <= a.order(); ++i) w[i - 2] = c * a.at_node(i);
    return algebra_element<S>(std::move(w));
}

} // namespace wtg
