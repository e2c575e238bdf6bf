// Weight vectors and the construction of adjacency, degree, Laplacian and
// basis matrices.

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace wtg;
using namespace wtg::testing;

namespace {

const double r2 = std::sqrt(2.0);

weight_vector<double> fig_weights() {
    return weight_vector<double>({1.0, 0.0, -r2, 0.0, 2.0});
}

// The six-node Laplacian displayed in the worked example.
sym_matrix<double> fig_laplacian() {
    return sym_matrix<double>::from_rows({
        {3 - r2, -1, 0, r2, 0, -2},
        {-1, 3 - r2, 0, r2, 0, -2},
        {0, 0, 2 - r2, r2, 0, -2},
        {r2, r2, r2, 2 - 3 * r2, 0, -2},
        {0, 0, 0, 0, 2, -2},
        {-2, -2, -2, -2, -2, 10},
    });
}

} // namespace

TEST_SUITE("threshold") {

TEST_CASE("adjacency: single node, complete graph, worked example") {
    CHECK(adjacency(weight_vector<double>{}) == sym_matrix<double>::zero(1));

    const auto k4 = adjacency(weight_vector<double>({1.0, 1.0, 1.0}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(k4(i, j) == (i == j ? 0.0 : 1.0));

    const auto a = adjacency(fig_weights());
    const auto q = fig_laplacian();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            if (i == j) CHECK(a(i, j) == 0.0);
            else CHECK(a(i, j) == doctest::Approx(-q(i, j)).epsilon(1e-14));
        }
}

TEST_CASE("degrees: worked example, zero weights, unit K4") {
    const auto d = degrees(fig_weights());
    const std::vector<double> expected = {3 - r2, 3 - r2, 2 - r2, 2 - 3 * r2, 2, 10};
    REQUIRE(d.size() == expected.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        CHECK(d[i] == doctest::Approx(expected[i]).epsilon(1e-14));

    for (double v : degrees(weight_vector<double>::zero(5))) CHECK(v == 0.0);

    for (double v : degrees(weight_vector<double>({1.0, 1.0, 1.0}))) CHECK(v == 3.0);
}

TEST_CASE("laplacian: worked example and the cospectral pair") {
    CHECK(approx_equal(laplacian(fig_weights()), fig_laplacian(), 1e-14));

    const auto qa = laplacian(weight_vector<rational>({rational(3), rational(0)}));
    CHECK(qa == sym_matrix<rational>::from_rows({{rational(3), rational(-3), rational(0)},
                                                 {rational(-3), rational(3), rational(0)},
                                                 {rational(0), rational(0), rational(0)}}));

    const auto qb = laplacian(weight_vector<rational>({rational(-1), rational(2)}));
    CHECK(qb == sym_matrix<rational>::from_rows({{rational(1), rational(1), rational(-2)},
                                                 {rational(1), rational(1), rational(-2)},
                                                 {rational(-2), rational(-2), rational(4)}}));
}

TEST_CASE("basis_matrix: small cases and range checks") {
    CHECK(basis_matrix<rational>(2, 2) ==
          sym_matrix<rational>::from_rows({{rational(1), rational(-1)},
                                           {rational(-1), rational(1)}}));
    CHECK(basis_matrix<rational>(3, 2) ==
          sym_matrix<rational>::from_rows({{rational(1), rational(-1), rational(0)},
                                           {rational(-1), rational(1), rational(0)},
                                           {rational(0), rational(0), rational(0)}}));
    CHECK_THROWS_AS(basis_matrix<rational>(3, 1), std::out_of_range);
    CHECK_THROWS_AS(basis_matrix<rational>(3, 4), std::out_of_range);
}

TEST_CASE("basis_matrix equals the Laplacian of a unit weight vector") {
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t i = 2; i <= n; ++i) {
            std::vector<rational> w(n - 1, rational(0));
            w[i - 2] = rational(1);
            CHECK(basis_matrix<rational>(n, i) == laplacian(weight_vector<rational>(w)));
        }
}

TEST_CASE("laplacian rows sum to zero and expand over the basis") {
    auto rng = make_rng(505);
    std::uniform_int_distribution<std::size_t> size(1, 10);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = size(rng);
        const auto w = random_weights_exact(rng, n);
        const auto q = laplacian(w);
        for (std::size_t i = 0; i < n; ++i) CHECK(q.row_sum(i) == rational(0));

        auto combo = sym_matrix<rational>::zero(n);
        for (std::size_t i = 2; i <= n; ++i)
            combo = combo + w.at_node(i) * basis_matrix<rational>(n, i);
        CHECK(combo == q);
    }
}

TEST_CASE("basis matrices are linearly independent") {
    auto rng = make_rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> size(2, 8);
        const std::size_t n = size(rng);
        const auto coeffs = random_weights_exact(rng, n);
        auto combo = sym_matrix<rational>::zero(n);
        for (std::size_t i = 2; i <= n; ++i)
            combo = combo + coeffs.at_node(i) * basis_matrix<rational>(n, i);
        // the only zero combination is the zero coefficient vector
        const bool all_zero = coeffs == weight_vector<rational>::zero(n);
        CHECK((combo == sym_matrix<rational>::zero(n)) == all_zero);
        // and coefficients are recoverable, so the representation is unique
        CHECK(decompose(combo) == coeffs);
    }
}

TEST_CASE("a trailing zero weight adds an isolated node") {
    auto rng = make_rng(707);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 8);
        const std::size_t n = size(rng);
        const auto w = random_weights_exact(rng, n);
        auto extended = w.weights();
        extended.push_back(rational(0));
        const auto big = laplacian(weight_vector<rational>(extended));
        const auto small = laplacian(w);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(big(i, j) == small(i, j));
        for (std::size_t i = 0; i <= n; ++i) {
            CHECK(big(i, n) == rational(0));
            CHECK(big(n, i) == rational(0));
        }
    }
}

TEST_CASE("weight_vector: node indexing and bounds") {
    const weight_vector<double> w({7.0, 8.0, 9.0});
    CHECK(w.order() == 4);
    CHECK(w.at_node(2) == 7.0);
    CHECK(w.at_node(4) == 9.0);
    CHECK_THROWS_AS(w.at_node(1), std::out_of_range);
    CHECK_THROWS_AS(w.at_node(5), std::out_of_range);
}

} // TEST_SUITE
