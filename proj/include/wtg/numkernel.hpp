// Independent numerical oracles: a cyclic Jacobi eigensolver, the
// Faddeev-LeVerrier characteristic polynomial, and a brute-force
// isomorphism check.  These never rely on the closed-form results they
// are used to verify.

#pragma once

#include "wtg/error.hpp"
#include "wtg/matrix.hpp"
#include "wtg/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace wtg {

// Eigenvalues of a symmetric matrix, ascending, with multiplicity.
// Cyclic Jacobi sweeps run until the off-diagonal Frobenius norm drops
// below 1e-12 * ||m||_F; 100 sweeps without convergence is a defect and
// raises convergence_error.
inline std::vector<double> eig_sym(const sym_matrix<double>& m) {
    const std::size_t n = m.order();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    const double norm = m.frobenius_norm();
    const double target = 1e-12 * norm;

    auto off_norm = [&]() {
        double acc = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) acc += at(p, q) * at(p, q);
        return std::sqrt(2.0 * acc);
    };

    bool converged = off_norm() <= target;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = akp - s * (akq + tau * akp);
                    at(p, k) = at(k, p);
                    at(k, q) = akq + s * (akp - tau * akq);
                    at(q, k) = at(k, q);
                }
            }
        }
        converged = off_norm() <= target;
    }
    if (!converged)
        throw convergence_error("eig_sym: Jacobi did not converge in 100 sweeps");

    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = at(i, i);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

// Coefficients of det(lambda*I - m), monic of degree n, via the
// Faddeev-LeVerrier recurrence M_k = m (M_{k-1} + c_{k-1} I),
// c_k = -tr(M_k)/k.  Exact in the rational backend.
template <scalar S>
polynomial<S> char_poly(const sym_matrix<S>& m) {
    const std::size_t n = m.order();
    std::vector<S> work(n * n, S(0));   // M_{k-1} + c_{k-1} I
    std::vector<S> next(n * n, S(0));   // M_k
    std::vector<S> c(n + 1, S(0));      // c[k], c[0] = 1
    c[0] = S(1);

    for (std::size_t i = 0; i < n; ++i) work[i * n + i] = S(1); // M_0 + c_0 I = I
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                S acc(0);
                for (std::size_t l = 0; l < n; ++l) acc += m(i, l) * work[l * n + j];
                next[i * n + j] = acc;
            }
        S tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += next[i * n + i];
        c[k] = -tr / S(static_cast<long long>(k));
        work = next;
        for (std::size_t i = 0; i < n; ++i) work[i * n + i] += c[k];
    }

    std::vector<S> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] = c[n - k];
    return polynomial<S>(std::move(coeffs));
}

// True iff some permutation matrix P satisfies P^T a P = b, entrywise under
// scalar comparison.  Capped at order 8 (8! = 40320 candidates).
template <scalar S>
bool brute_force_isomorphic(const sym_matrix<S>& a, const sym_matrix<S>& b,
                            double tol = default_tol) {
    if (a.order() != b.order())
        throw dimension_mismatch("brute_force_isomorphic: order mismatch");
    const std::size_t n = a.order();
    if (n > 8)
        throw size_limit_error("brute_force_isomorphic: order > 8");

    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i)
            for (std::size_t j = i; j < n && match; ++j)
                if (!scalar_eq(a(sigma[i], sigma[j]), b(i, j), tol)) match = false;
        if (match) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

} // namespace wtg
