// Closed-form eigensystem of weighted threshold Laplacians.
//
// All Laplacians Q_W share the eigenvector basis v_1 = 1,
// (v_j)_k = [k < j] + (1-j)[k = j], and the nontrivial eigenvalues are the
// linear image mu^T = U W^T of the weight vector, with U upper triangular
// and invertible in closed form.  spectrum_of and synthesize run in O(n)
// via suffix sums and back-substitution; the explicit U and U^-1 exist for
// inspection and tests.

#pragma once

#include "wtg/matrix.hpp"
#include "wtg/polynomial.hpp"
#include "wtg/scalar.hpp"
#include "wtg/threshold.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wtg {

// The n-1 nontrivial Laplacian eigenvalues (mu_2, ..., mu_n), indexed by
// node when produced by spectrum_of; the structural eigenvalue mu_1 = 0 is
// implicit.  Cospectrality comparisons treat the values as a multiset.
template <scalar S>
class spectrum {
public:
    spectrum() : mu_() {}

    explicit spectrum(std::vector<S> mu) : mu_(std::move(mu)) {}

    std::size_t order() const { return mu_.size() + 1; }

    // mu_i for node index i in 2..n.
    const S& at_node(std::size_t i) const {
        if (i < 2 || i > order())
            throw std::out_of_range("spectrum: node index out of range");
        return mu_[i - 2];
    }

    const std::vector<S>& values() const { return mu_; }

    std::vector<S> sorted_values() const {
        std::vector<S> v = mu_;
        std::sort(v.begin(), v.end());
        return v;
    }

    bool operator==(const spectrum& other) const = default;

private:
    std::vector<S> mu_;
};

template <scalar S>
bool approx_equal(const spectrum<S>& a, const spectrum<S>& b, double tol = default_tol) {
    if (a.order() != b.order()) return false;
    for (std::size_t i = 2; i <= a.order(); ++i)
        if (!scalar_eq(a.at_node(i), b.at_node(i), tol)) return false;
    return true;
}

// Multiset cospectrality: equal sorted eigenvalue lists (the implied zeros
// cancel for equal orders).
template <scalar S>
bool cospectral(const spectrum<S>& a, const spectrum<S>& b, double tol = default_tol) {
    if (a.order() != b.order()) return false;
    const std::vector<S> sa = a.sorted_values();
    const std::vector<S> sb = b.sorted_values();
    for (std::size_t k = 0; k < sa.size(); ++k)
        if (!scalar_eq(sa[k], sb[k], tol)) return false;
    return true;
}

// mu_i = i w_i + sum_{j>i} w_j.
template <scalar S>
spectrum<S> spectrum_of(const weight_vector<S>& w) {
    const std::size_t n = w.order();
    std::vector<S> mu(n - 1);
    S suffix(0);
    for (std::size_t i = n; i >= 2; --i) {
        mu[i - 2] = S(static_cast<long long>(i)) * w.at_node(i) + suffix;
        suffix += w.at_node(i);
    }
    return spectrum<S>(std::move(mu));
}

// mu_i = d_i + w_i, the degree form of the same spectrum.
template <scalar S>
spectrum<S> spectrum_via_degrees(const weight_vector<S>& w) {
    const std::vector<S> d = degrees(w);
    std::vector<S> mu(w.order() - 1);
    for (std::size_t i = 2; i <= w.order(); ++i)
        mu[i - 2] = d[i - 1] + w.at_node(i);
    return spectrum<S>(std::move(mu));
}

// The common eigenvector basis: v_1 is all ones and, for 2 <= j <= n,
// (v_j)_k = 1 below j, 1-j at j, 0 above.  Orthogonal but not orthonormal.
template <scalar S>
class eigen_basis {
public:
    explicit eigen_basis(std::size_t n) : n_(n) {
        if (n < 1) throw std::out_of_range("eigen_basis: order must be >= 1");
    }

    std::size_t order() const { return n_; }

    // v_j for j in 1..n.
    std::vector<S> vector_at(std::size_t j) const {
        if (j < 1 || j > n_)
            throw std::out_of_range("eigen_basis: vector index out of range");
        std::vector<S> v(n_, S(0));
        if (j == 1) {
            std::fill(v.begin(), v.end(), S(1));
        } else {
            for (std::size_t k = 0; k + 1 < j; ++k) v[k] = S(1);
            v[j - 1] = S(1) - S(static_cast<long long>(j));
        }
        return v;
    }

private:
    std::size_t n_;
};

// The (n-1)x(n-1) spectrum map U (diagonal i+1, ones above, zeros below)
// and its closed-form inverse (diagonal 1/(i+1), entry (i,j) = -1/(j(j+1))
// above).  Row and column indices are 1-based in 1..n-1; row i speaks for
// node i+1.
template <scalar S>
class spectral_map {
public:
    explicit spectral_map(std::size_t n) : n_(n) {
        if (n < 2) throw std::out_of_range("spectral_map: order must be >= 2");
    }

    std::size_t order() const { return n_; }
    std::size_t size() const { return n_ - 1; }

    S u(std::size_t i, std::size_t j) const {
        check(i, j);
        if (i == j) return S(static_cast<long long>(i + 1));
        if (i < j) return S(1);
        return S(0);
    }

    S u_inv(std::size_t i, std::size_t j) const {
        check(i, j);
        if (i == j) return S(1) / S(static_cast<long long>(i + 1));
        if (i < j)
            return S(-1) / S(static_cast<long long>(j * (j + 1)));
        return S(0);
    }

    std::vector<std::vector<S>> u_rows() const { return materialize(&spectral_map::u); }
    std::vector<std::vector<S>> u_inv_rows() const { return materialize(&spectral_map::u_inv); }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i < 1 || j < 1 || i > size() || j > size())
            throw std::out_of_range("spectral_map: index out of range");
    }

    std::vector<std::vector<S>> materialize(S (spectral_map::*entry)(std::size_t, std::size_t) const) const {
        std::vector<std::vector<S>> rows(size(), std::vector<S>(size()));
        for (std::size_t i = 1; i <= size(); ++i)
            for (std::size_t j = 1; j <= size(); ++j)
                rows[i - 1][j - 1] = (this->*entry)(i, j);
        return rows;
    }

    std::size_t n_;
};

// W^T = U^-1 mu^T by back-substitution against U: w_n = mu_n / n, then
// w_i = (mu_i - sum_{j>i} w_j)/i downward.  Every real target spectrum is
// realizable.
template <scalar S>
weight_vector<S> synthesize(const spectrum<S>& mu) {
    const std::size_t n = mu.order();
    std::vector<S> w(n - 1);
    S suffix(0);
    for (std::size_t i = n; i >= 2; --i) {
        w[i - 2] = (mu.at_node(i) - suffix) / S(static_cast<long long>(i));
        suffix += w[i - 2];
    }
    return weight_vector<S>(std::move(w));
}

// Weight vectors of graphs sharing mu's eigenvalue multiset: synthesize
// applied to the distinct permutations of mu in lexicographic order,
// deduplicated by exact weight equality, stopping after `limit` mates.
template <scalar S>
std::vector<weight_vector<S>> cospectral_mates(const spectrum<S>& mu, std::size_t limit) {
    if (limit < 1) throw std::out_of_range("cospectral_mates: limit must be >= 1");
    std::vector<S> perm = mu.sorted_values();
    std::vector<weight_vector<S>> mates;
    if (perm.empty()) {
        mates.push_back(weight_vector<S>{});
        return mates;
    }
    do {
        weight_vector<S> w = synthesize(spectrum<S>(perm));
        if (std::find(mates.begin(), mates.end(), w) == mates.end())
            mates.push_back(std::move(w));
    } while (mates.size() < limit && std::next_permutation(perm.begin(), perm.end()));
    return mates;
}

// Characteristic polynomial of Q_i inside order n:
// (lambda - 1)^(i-2) (lambda - i) lambda^(n-i+1), expanded.
template <scalar S>
polynomial<S> basis_char_poly(std::size_t n, std::size_t i) {
    if (i < 2 || i > n)
        throw std::out_of_range("basis_char_poly: index must satisfy 2 <= i <= n");
    polynomial<S> p = polynomial<S>::one();
    for (std::size_t k = 0; k + 2 < i; ++k) p = p.times_linear(S(1));
    p = p.times_linear(S(static_cast<long long>(i)));
    return p.shifted(n - i + 1);
}

} // namespace wtg
