// Univariate polynomials with coefficients stored lowest degree first.
// The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero.

#pragma once

#include "wtg/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace wtg {

template <scalar S>
class polynomial {
public:
    polynomial() = default;

    explicit polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static polynomial one() { return polynomial(std::vector<S>{S(1)}); }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<S>& coefficients() const { return coeffs_; }

    S coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : S(0);
    }

    S eval(const S& x) const {
        S acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    // Multiplies by the monic linear factor (lambda - root).
    polynomial times_linear(const S& root) const {
        if (is_zero()) return {};
        std::vector<S> out(coeffs_.size() + 1, S(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            out[k + 1] += coeffs_[k];
            out[k] -= root * coeffs_[k];
        }
        return polynomial(std::move(out));
    }

    // Multiplies by lambda^k.
    polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<S> out(coeffs_.size() + k, S(0));
        for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j + k] = coeffs_[j];
        return polynomial(std::move(out));
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> out(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return polynomial(std::move(out));
    }

    bool operator==(const polynomial& other) const = default;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == S(0)) coeffs_.pop_back();
    }

    std::vector<S> coeffs_;
};

template <scalar S>
bool approx_equal(const polynomial<S>& a, const polynomial<S>& b, double tol = default_tol) {
    const std::size_t top =
        std::max(a.coefficients().size(), b.coefficients().size());
    for (std::size_t k = 0; k < top; ++k)
        if (!scalar_eq(a.coeff(k), b.coeff(k), tol)) return false;
    return true;
}

} // namespace wtg
