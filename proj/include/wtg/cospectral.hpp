// Cospectrality tools: the affine shift that preserves cospectrality, and
// the reconstruction of a weight vector from its spectrum when the weights
// come from an alphabet of at most three values.
//
// Reconstruction follows the constructive argument behind the three-weight
// isomorphism result: normalize the alphabet onto [-1, 1], read w_n off
// the extremes of the spectrum multiset (w_n = 1 iff max = n, w_n = -1 iff
// min = -n, middle otherwise), remove the forced eigenvalue n*w_n, shift
// the rest by -w_n, and recurse on n-1 nodes.

#pragma once

#include "wtg/error.hpp"
#include "wtg/scalar.hpp"
#include "wtg/spectral.hpp"
#include "wtg/threshold.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace wtg {

// x -> a*x - b.  Applied to a weight vector it realizes the Laplacian
// pencil a*Q + b*(J - n*I), which shifts every nontrivial eigenvalue to
// a*mu - b*n.
template <scalar S>
struct affine_shift {
    S a;
    S b;

    S apply(const S& x) const { return a * x - b; }

    S unapply(const S& y) const {
        if (a == S(0))
            throw std::invalid_argument("affine_shift: not invertible (a == 0)");
        return (y + b) / a;
    }
};

template <scalar S>
weight_vector<S> apply_affine_shift(const weight_vector<S>& w, const affine_shift<S>& s) {
    std::vector<S> out(w.order() - 1);
    for (std::size_t i = 2; i <= w.order(); ++i) out[i - 2] = s.apply(w.at_node(i));
    return weight_vector<S>(std::move(out));
}

// One to three distinct weight values, sorted ascending.
template <scalar S>
class weight_alphabet {
public:
    explicit weight_alphabet(std::vector<S> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
        if (values_.empty())
            throw std::invalid_argument("weight_alphabet: empty");
        if (values_.size() > 3)
            throw std::invalid_argument("weight_alphabet: more than 3 distinct values");
    }

    std::size_t size() const { return values_.size(); }
    const std::vector<S>& values() const { return values_; }

private:
    std::vector<S> values_;
};

// The unique affine map sending min -> -1 and max -> 1.  The mapped
// endpoints are pinned exactly; a middle value lands strictly inside.
template <scalar S>
std::pair<affine_shift<S>, weight_alphabet<S>>
normalize_alphabet(const weight_alphabet<S>& alpha) {
    if (alpha.size() < 2)
        throw normalization_undefined("alphabet needs at least two distinct values");
    const S& x1 = alpha.values().front();
    const S& x3 = alpha.values().back();
    const S span = x3 - x1;
    affine_shift<S> s{S(S(2) / span), S((x3 + x1) / span)};

    std::vector<S> mapped;
    mapped.push_back(S(-1));
    if (alpha.size() == 3) mapped.push_back(s.apply(alpha.values()[1]));
    mapped.push_back(S(1));
    return {s, weight_alphabet<S>(std::move(mapped))};
}

namespace detail {

// Peels node k from the normalized spectrum pool.  `delta` is the sum of
// weights already chosen at higher nodes, so an original pool entry e
// currently stands for e - delta.  Both extreme tests can pass at once
// only at tolerance level or for unrealizable input; then the +1 branch is
// tried first and -1 on backtrack.
template <scalar S>
bool reconstruct_levels(std::vector<S>& pool, std::size_t k, const S& delta,
                        const S* middle, std::vector<S>& chosen, double tol) {
    if (k == 1) return pool.empty();
    const S level = S(static_cast<long long>(k));
    const S max_cur = S(pool.back() - delta);
    const S min_cur = S(pool.front() - delta);
    const bool at_max = scalar_eq(max_cur, level, tol);
    const bool at_min = scalar_eq(min_cur, S(-level), tol);

    std::vector<S> candidates;
    if (at_max) candidates.push_back(S(1));
    if (at_min) candidates.push_back(S(-1));
    if (!at_max && !at_min) {
        if (!middle) return false;
        candidates.push_back(*middle);
    }

    for (const S& wk : candidates) {
        const S target = level * wk + delta;
        std::size_t best = pool.size();
        for (std::size_t idx = 0; idx < pool.size(); ++idx) {
            if (!scalar_eq(pool[idx], target, tol)) continue;
            if (best == pool.size() ||
                scalar_traits<S>::abs(pool[idx] - target) <
                    scalar_traits<S>::abs(pool[best] - target))
                best = idx;
        }
        if (best == pool.size()) continue;

        const S removed = pool[best];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        chosen.push_back(wk);
        if (reconstruct_levels(pool, k - 1, S(delta + wk), middle, chosen, tol))
            return true;
        chosen.pop_back();
        pool.insert(std::lower_bound(pool.begin(), pool.end(), removed), removed);
    }
    return false;
}

} // namespace detail

// The unique weight vector over `alpha` whose spectrum is `mu`, treated as
// a multiset.  Throws not_realizable when no such vector exists.
template <scalar S>
weight_vector<S> reconstruct(const spectrum<S>& mu, const weight_alphabet<S>& alpha,
                             double tol = default_tol) {
    const std::size_t n = mu.order();
    if (n == 1) return weight_vector<S>{};

    if (alpha.size() == 1) {
        weight_vector<S> w = weight_vector<S>::constant(n, alpha.values().front());
        if (!cospectral(spectrum_of(w), mu, tol))
            throw not_realizable("constant weight vector does not match the spectrum");
        return w;
    }

    auto [shift, norm_alpha] = normalize_alphabet(alpha);
    const S offset = shift.b * S(static_cast<long long>(n));
    std::vector<S> pool(n - 1);
    for (std::size_t i = 2; i <= n; ++i)
        pool[i - 2] = shift.a * mu.at_node(i) - offset;
    std::sort(pool.begin(), pool.end());

    const S* middle = norm_alpha.size() == 3 ? &norm_alpha.values()[1] : nullptr;
    std::vector<S> chosen;
    chosen.reserve(n - 1);
    const double tol_scaled = tol * static_cast<double>(n);
    if (!detail::reconstruct_levels(pool, n, S(0), middle, chosen, tol_scaled))
        throw not_realizable("spectrum is not realizable over the alphabet");

    std::vector<S> w(n - 1);
    for (std::size_t i = 2; i <= n; ++i) w[i - 2] = shift.unapply(chosen[n - i]);
    return weight_vector<S>(std::move(w));
}

// The classic four-value pair: W = (3,0) and W' = (-1,2) share the
// spectrum multiset {0, 0, 6} but are not isomorphic.
template <scalar S>
std::pair<weight_vector<S>, weight_vector<S>> counterexample_pair() {
    return {weight_vector<S>({S(3), S(0)}),
            weight_vector<S>({S(-1), S(2)})};
}

} // namespace wtg
