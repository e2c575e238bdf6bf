// Affine cospectral shifts and reconstruction from spectrum over small
// weight alphabets.

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace wtg;
using namespace wtg::testing;

namespace {

weight_vector<rational> rat_weights(std::initializer_list<long> vals) {
    std::vector<rational> w;
    for (long v : vals) w.emplace_back(v);
    return weight_vector<rational>(std::move(w));
}

weight_alphabet<rational> rat_alphabet(std::initializer_list<rational> vals) {
    return weight_alphabet<rational>(std::vector<rational>(vals));
}

// A random alphabet of 1-3 distinct rationals and a random weight vector
// drawn from it.
struct alphabet_sample {
    weight_alphabet<rational> alpha;
    weight_vector<rational> w;
};

alphabet_sample random_alphabet_instance(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<rational> values;
    while (values.size() < static_cast<std::size_t>(count(rng))) {
        const rational v = random_rational(rng, 8, 5);
        if (std::find(values.begin(), values.end(), v) == values.end())
            values.push_back(v);
    }
    weight_alphabet<rational> alpha(values);
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
    std::vector<rational> w(n - 1);
    for (auto& v : w) v = alpha.values()[pick(rng)];
    return {alpha, weight_vector<rational>(std::move(w))};
}

} // namespace

TEST_SUITE("cospectral") {

TEST_CASE("affine_shift: identity and the spectrum law") {
    const affine_shift<rational> ident{rational(1), rational(0)};
    const auto w = rat_weights({2, -1, 3});
    CHECK(apply_affine_shift(w, ident) == w);

    auto rng = make_rng(121);
    std::uniform_int_distribution<std::size_t> size(1, 10);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = size(rng);
        const auto v = random_weights_exact(rng, n);
        affine_shift<rational> s{random_rational(rng), random_rational(rng)};
        const auto shifted = apply_affine_shift(v, s);

        const auto mu = spectrum_of(v);
        const auto nu = spectrum_of(shifted);
        for (std::size_t i = 2; i <= n; ++i)
            CHECK(nu.at_node(i) ==
                  rational(s.a * mu.at_node(i) - s.b * rational(static_cast<long>(n))));

        // matrix identity: Q_{aW - b1} = a Q_W + b (J - n I)
        const auto lhs = laplacian(shifted);
        const auto rhs = s.a * laplacian(v) +
                         s.b * (sym_matrix<rational>::all_ones(n) -
                                rational(static_cast<long>(n)) * sym_matrix<rational>::identity(n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("normalize_alphabet: fixed cases") {
    const auto [s1, a1] = normalize_alphabet(rat_alphabet({rational(-1), rational(1)}));
    CHECK(s1.a == rational(1));
    CHECK(s1.b == rational(0));
    CHECK(a1.values() == std::vector<rational>{rational(-1), rational(1)});

    const auto [s2, a2] = normalize_alphabet(rat_alphabet({rational(0), rational(3)}));
    CHECK(s2.a == rational(2, 3));
    CHECK(s2.b == rational(1));
    CHECK(a2.values() == std::vector<rational>{rational(-1), rational(1)});

    const auto [s3, a3] =
        normalize_alphabet(rat_alphabet({rational(-1), rational(0), rational(1)}));
    CHECK(s3.a == rational(1));
    CHECK(s3.b == rational(0));
    CHECK(a3.values() ==
          std::vector<rational>{rational(-1), rational(0), rational(1)});

    CHECK_THROWS_AS(normalize_alphabet(rat_alphabet({rational(2)})), normalization_undefined);
}

TEST_CASE("weight_alphabet: validation") {
    CHECK(rat_alphabet({rational(3), rational(1), rational(1)}).values() ==
          std::vector<rational>{rational(1), rational(3)});
    CHECK_THROWS_AS(weight_alphabet<rational>(std::vector<rational>{}), std::invalid_argument);
    CHECK_THROWS_AS(rat_alphabet({rational(1), rational(2), rational(3), rational(4)}),
                    std::invalid_argument);
}

TEST_CASE("reconstruct: fixed examples") {
    const auto alpha = rat_alphabet({rational(-1), rational(0), rational(1)});
    const auto w = rat_weights({1, -1, 0, 1});
    const auto mu = spectrum_of(w);
    CHECK(mu.values() == std::vector<rational>{rational(2), rational(-2), rational(1), rational(5)});
    CHECK(reconstruct(mu, alpha) == w);

    // single-value alphabet forces the constant vector
    const auto ones = weight_vector<rational>::constant(6, rational(1));
    CHECK(reconstruct(spectrum_of(ones), rat_alphabet({rational(1)})) == ones);
    CHECK_THROWS_AS(reconstruct(spectrum_of(rat_weights({1, 0})), rat_alphabet({rational(1)})),
                    not_realizable);
}

TEST_CASE("reconstruct: Seidel weights round trip") {
    auto rng = make_rng(232);
    const auto alpha = rat_alphabet({rational(-1), rational(1)});
    std::uniform_int_distribution<std::size_t> size(2, 10);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = size(rng);
        std::vector<rational> w(n - 1);
        for (auto& v : w) v = coin(rng) ? rational(1) : rational(-1);
        const weight_vector<rational> seidel(w);
        CHECK(reconstruct(spectrum_of(seidel), alpha) == seidel);
    }
}

TEST_CASE("reconstruct: random small alphabets, exact round trip") {
    auto rng = make_rng(343);
    std::uniform_int_distribution<std::size_t> size(2, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const auto [alpha, w] = random_alphabet_instance(rng, size(rng));
        CHECK(reconstruct(spectrum_of(w), alpha) == w);
    }
}

TEST_CASE("reconstruct: sees only the multiset, not the index order") {
    auto rng = make_rng(454);
    for (int trial = 0; trial < 25; ++trial) {
        const auto [alpha, w] = random_alphabet_instance(rng, 8);
        auto shuffled = spectrum_of(w).values();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(reconstruct(spectrum<rational>(shuffled), alpha) == w);
    }
}

TEST_CASE("reconstruct: float backend with tolerance") {
    const weight_alphabet<double> alpha({-0.5, 0.25, 1.0});
    const weight_vector<double> w({1.0, -0.5, 0.25, -0.5, 1.0});
    const auto got = reconstruct(spectrum_of(w), alpha);
    REQUIRE(got.order() == w.order());
    for (std::size_t i = 2; i <= w.order(); ++i)
        CHECK(got.at_node(i) == doctest::Approx(w.at_node(i)).epsilon(1e-9));
}

TEST_CASE("reconstruct: unrealizable spectra are rejected") {
    const auto alpha = rat_alphabet({rational(-1), rational(1)});
    // needs the middle branch, which a two-value alphabet does not have
    const auto w = rat_weights({0, 1});
    CHECK_THROWS_AS(reconstruct(spectrum_of(w), alpha), not_realizable);

    // right extremes, wrong interior multiset
    const spectrum<rational> bogus(std::vector<rational>{rational(3), rational(7, 2)});
    CHECK_THROWS_AS(reconstruct(bogus, alpha), not_realizable);

    // max = n and min = -n at once: both branches are tried, both dead-end
    const spectrum<rational> tied(std::vector<rational>{rational(3), rational(-3)});
    CHECK_THROWS_AS(reconstruct(tied, alpha), not_realizable);
}

TEST_CASE("equal spectra over a three-value alphabet imply isomorphism (n <= 5)") {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::map<std::vector<rational>, std::vector<weight_vector<rational>>> classes;
        std::vector<long> digits(n - 1, 0);
        bool more = true;
        while (more) {
            std::vector<rational> w(n - 1);
            for (std::size_t k = 0; k < n - 1; ++k) w[k] = rational(digits[k] - 1);
            weight_vector<rational> wv(w);
            classes[spectrum_of(wv).sorted_values()].push_back(wv);
            more = false;
            for (std::size_t k = 0; k < n - 1; ++k) {
                if (digits[k] < 2) { ++digits[k]; more = true; break; }
                digits[k] = 0;
            }
        }
        for (const auto& [mu, members] : classes)
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    CHECK(brute_force_isomorphic(laplacian(members[a]), laplacian(members[b])));
    }
}

TEST_CASE("counterexample_pair: cospectral, not isomorphic, four values") {
    const auto [w1, w2] = counterexample_pair<rational>();
    CHECK(w1 == rat_weights({3, 0}));
    CHECK(w2 == rat_weights({-1, 2}));

    const auto s1 = spectrum_of(w1).sorted_values();
    const auto s2 = spectrum_of(w2).sorted_values();
    CHECK(s1 == std::vector<rational>{rational(0), rational(6)});
    CHECK(s1 == s2);

    CHECK_FALSE(brute_force_isomorphic(laplacian(w1), laplacian(w2)));

    std::vector<rational> joint = {w1.at_node(2), w1.at_node(3), w2.at_node(2), w2.at_node(3)};
    std::sort(joint.begin(), joint.end());
    CHECK(std::unique(joint.begin(), joint.end()) == joint.end());
    CHECK(joint.size() == 4);
}

} // TEST_SUITE
