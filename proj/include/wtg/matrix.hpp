// Dense symmetric matrices.
//
// sym_matrix<S> is immutable after construction and symmetric by
// construction: factories either mirror a generator evaluated once per
// unordered index pair, or validate exact entrywise symmetry of caller
// data.  Near-symmetric float data is rejected, not repaired.

#pragma once

#include "wtg/error.hpp"
#include "wtg/scalar.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace wtg {

template <scalar S>
class sym_matrix {
public:
    static sym_matrix zero(std::size_t n) {
        require_order(n);
        return sym_matrix(n, std::vector<S>(n * n, S(0)));
    }

    static sym_matrix identity(std::size_t n) {
        sym_matrix m = zero(n);
        for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = S(1);
        return m;
    }

    // J_n, the all-ones matrix.
    static sym_matrix all_ones(std::size_t n) {
        require_order(n);
        return sym_matrix(n, std::vector<S>(n * n, S(1)));
    }

    // Builds from a generator invoked once per pair i <= j (0-based) and
    // mirrored, so the result is symmetric within 0 ulps.
    template <class F>
    static sym_matrix from_upper(std::size_t n, F&& f) {
        require_order(n);
        std::vector<S> e(n * n, S(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                S v = f(i, j);
                e[i * n + j] = v;
                if (i != j) e[j * n + i] = v;
            }
        }
        return sym_matrix(n, std::move(e));
    }

    // Builds from full row data; rows must be square and exactly symmetric.
    static sym_matrix from_rows(const std::vector<std::vector<S>>& rows) {
        const std::size_t n = rows.size();
        require_order(n);
        for (const auto& r : rows)
            if (r.size() != n)
                throw dimension_mismatch("from_rows: matrix is not square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!(rows[i][j] == rows[j][i]))
                    throw std::invalid_argument("from_rows: matrix is not symmetric");
        std::vector<S> e;
        e.reserve(n * n);
        for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
        return sym_matrix(n, std::move(e));
    }

    std::size_t order() const { return n_; }

    const S& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }

    S trace() const {
        S t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    S row_sum(std::size_t i) const {
        S t(0);
        for (std::size_t j = 0; j < n_; ++j) t += (*this)(i, j);
        return t;
    }

    double frobenius_norm() const {
        double acc = 0.0;
        for (const S& v : entries_) {
            double d = scalar_traits<S>::to_double(v);
            acc += d * d;
        }
        return std::sqrt(acc);
    }

    bool operator==(const sym_matrix& other) const {
        return n_ == other.n_ && entries_ == other.entries_;
    }

    friend sym_matrix operator+(const sym_matrix& a, const sym_matrix& b) {
        require_same_order(a, b, "operator+");
        return from_upper(a.n_, [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
    }

    friend sym_matrix operator-(const sym_matrix& a, const sym_matrix& b) {
        require_same_order(a, b, "operator-");
        return from_upper(a.n_, [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
    }

    friend sym_matrix operator*(const S& c, const sym_matrix& m) {
        return from_upper(m.n_, [&](std::size_t i, std::size_t j) { return c * m(i, j); });
    }

private:
    sym_matrix(std::size_t n, std::vector<S>&& entries)
        : n_(n), entries_(std::move(entries)) {}

    static void require_order(std::size_t n) {
        if (n < 1) throw dimension_mismatch("matrix order must be >= 1");
    }

    static void require_same_order(const sym_matrix& a, const sym_matrix& b, const char* op) {
        if (a.n_ != b.n_)
            throw dimension_mismatch(std::string(op) + ": order mismatch");
    }

    std::size_t n_;
    std::vector<S> entries_;
};

// Product of two commuting symmetric matrices (everything inside the
// threshold-graph algebra commutes, so the true product is symmetric).
// Exact backend: computes the full product and rejects a non-symmetric
// result.  Float backend: computes each unordered pair once and mirrors,
// keeping the 0-ulp symmetry invariant.
template <scalar S>
sym_matrix<S> matmul(const sym_matrix<S>& a, const sym_matrix<S>& b) {
    if (a.order() != b.order())
        throw dimension_mismatch("matmul: order mismatch");
    const std::size_t n = a.order();
    if constexpr (scalar_traits<S>::is_exact) {
        std::vector<std::vector<S>> rows(n, std::vector<S>(n, S(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                S acc(0);
                for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
                rows[i][j] = acc;
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!(rows[i][j] == rows[j][i]))
                    throw std::invalid_argument(
                        "matmul: operands do not commute, product is not symmetric");
        return sym_matrix<S>::from_rows(rows);
    } else {
        return sym_matrix<S>::from_upper(n, [&](std::size_t i, std::size_t j) {
            S acc(0);
            for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
            return acc;
        });
    }
}

template <scalar S>
std::vector<S> matvec(const sym_matrix<S>& m, const std::vector<S>& v) {
    const std::size_t n = m.order();
    if (v.size() != n) throw dimension_mismatch("matvec: length mismatch");
    std::vector<S> out(n, S(0));
    for (std::size_t i = 0; i < n; ++i) {
        S acc(0);
        for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

template <scalar S>
bool approx_equal(const sym_matrix<S>& a, const sym_matrix<S>& b, double tol = default_tol) {
    if (a.order() != b.order()) return false;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            if (!scalar_eq(a(i, j), b(i, j), tol)) return false;
    return true;
}

} // namespace wtg
