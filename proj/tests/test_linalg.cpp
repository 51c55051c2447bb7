#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circdiam/catalog.hpp"
#include "circdiam/linalg.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace circdiam;

namespace {

QVector qv(std::initializer_list<Rational> v) { return QVector(v); }
ZVector zv(std::initializer_list<long> v) {
    ZVector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

QMatrix q4_rows(std::initializer_list<std::size_t> one_based) {
    std::vector<std::size_t> rows;
    for (auto r : one_based) rows.push_back(r - 1);
    return klee_walkup_q4_symmetric().ineq_matrix().select_rows(rows);
}

QMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias) {
    std::uniform_int_distribution<int> coef(-4, 4), zero(0, 9), den(1, 3);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = zero(rng) < zero_bias ? Rational(0) : make_rational(coef(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
    CHECK(*parse_rational("3.2") == make_rational(16, 5));
    CHECK(*parse_rational("-2.05") == make_rational(-41, 20));
    CHECK(*parse_rational("1.05") == make_rational(21, 20));
    CHECK(*parse_rational("-6/3") == make_rational(-2));
    CHECK_FALSE(parse_rational("6/-3"));
    CHECK(*parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(*parse_rational("+7") == 7);
    CHECK(*parse_rational("1e3") == 1000);
    CHECK(*parse_rational("2.5e-1") == make_rational(1, 4));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("abc"));
    CHECK_FALSE(parse_rational("1.2.3"));
    CHECK_FALSE(parse_rational(""));
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
}

TEST_CASE("rank") {
    CHECK(rank(QMatrix::identity(4)) == 4);
    CHECK(rank(q4_rows({1, 5, 9})) == 3);
    CHECK(rank(QMatrix(2, 3)) == 0);
    CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("rank agrees with the largest nonzero minor on random small matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 4);
        const auto m = random_matrix(rng, size(rng), size(rng), trial % 8);
        REQUIRE(rank(m) == oracle::minor_rank(m));
    }
}

TEST_CASE("rank of every q4_sym row triple is 3") {
    // Every 4x4 submatrix of the symmetric Q4 matrix is nonsingular, so every
    // triple is independent.
    const auto a = klee_walkup_q4_symmetric().ineq_matrix();
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            for (std::size_t k = j + 1; k < 9; ++k) {
                std::vector<std::size_t> rows{i, j, k};
                CHECK(oracle::minor_rank(a.select_rows(rows)) == 3);
                CHECK(rank(a.select_rows(rows)) == 3);
            }
}

TEST_CASE("kernel_line") {
    auto single = kernel_line(QMatrix{{1, 1}});
    REQUIRE(single);
    CHECK(single->components() == zv({1, -1}));

    auto q4 = kernel_line(q4_rows({1, 5, 9}));
    REQUIRE(q4);
    CHECK(q4->components() == zv({1, 0, 3, 0}));
    // The walk direction (-1,0,-3,0) vanishes exactly on rows 1, 5 and 9.
    const auto image = klee_walkup_q4_symmetric().ineq_matrix().multiply(qv({-1, 0, -3, 0}));
    for (std::size_t i = 0; i < 9; ++i) CHECK((sgn(image[i]) == 0) == (i == 0 || i == 4 || i == 8));

    CHECK_FALSE(kernel_line(QMatrix(2, 3)));
    CHECK_FALSE(kernel_line(QMatrix::identity(3)));
}

TEST_CASE("kernel_line annihilates rank n-1 matrices") {
    std::mt19937 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<std::size_t> cols(2, 5);
        const std::size_t n = cols(rng);
        std::uniform_int_distribution<std::size_t> rows(1, n + 1);
        const auto m = random_matrix(rng, rows(rng), n, trial % 6);
        auto g = kernel_line(m);
        REQUIRE(g.has_value() == (oracle::naive_rank(m) == n - 1));
        if (!g) continue;
        CHECK(is_zero(m.multiply(g->to_rational())));
        CHECK(g->leading_sign() == 1);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("solve_square") {
    const QVector r = qv({make_rational(1, 2), -3, 7});
    auto x = solve_square(QMatrix::identity(3), r);
    REQUIRE(x);
    CHECK(*x == r);

    const auto u4 = klee_walkup_u4();
    const std::vector<std::size_t> unit_rows{4, 5, 6, 7};
    auto origin = solve_square(u4.ineq_matrix().select_rows(unit_rows), qv({0, 0, 0, 0}));
    REQUIRE(origin);
    CHECK(*origin == qv({0, 0, 0, 0}));

    CHECK_FALSE(solve_square(QMatrix{{1, 2}, {1, 2}}, qv({1, 1})));
    CHECK_FALSE(solve_square(QMatrix{{1, 2}, {1, 2}}, qv({1, 2})));
}

TEST_CASE("solve_square round-trips and matches naive elimination") {
    std::mt19937 rng(3);
    int solved = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 5);
        const std::size_t n = size(rng);
        const auto m = random_matrix(rng, n, n, trial % 5);
        QVector x(n);
        for (auto& v : x) v = oracle::random_rational(rng, -3, 3, 4);
        const QVector rhs = m.multiply(x);
        auto got = solve_square(m, rhs);
        REQUIRE(got.has_value() == (oracle::minor_rank(m) == n));
        if (!got) continue;
        CHECK(*got == x);
        CHECK(*got == *oracle::naive_solve(m, rhs));
        ++solved;
    }
    CHECK(solved > 100);
}

TEST_CASE("primitive_normalize") {
    CHECK(primitive_normalize(qv({make_rational(1, 2), make_rational(-3, 2)})).components() == zv({1, -3}));
    CHECK(primitive_normalize(qv({-2, 0, -6, 0})).components() == zv({1, 0, 3, 0}));
    CHECK(primitive_normalize(qv({0, 4})).components() == zv({0, 1}));
    CHECK(primitive_direction(qv({-2, 0, -6, 0})).components() == zv({-1, 0, -3, 0}));
    CHECK_THROWS_AS(primitive_normalize(qv({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(PrimitiveVector(zv({2, 4})), std::invalid_argument);
}

TEST_CASE("primitive_normalize is idempotent and scale invariant") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        QVector v(4);
        for (auto& x : v) x = oracle::random_rational(rng, -3, 3, 6);
        if (is_zero(v)) continue;
        const auto p = primitive_normalize(v);
        CHECK(primitive_normalize(p.to_rational()) == p);
        const Rational s = oracle::random_rational(rng, 0, 5, 7) + Rational(1, 9);
        CHECK(primitive_normalize(scale(s, v)) == p);
        CHECK(primitive_normalize(scale(-s, v)) == p);
        CHECK(primitive_direction(scale(-s, v)) == primitive_direction(v).negated());
    }
}

TEST_CASE("matrix access is bounds-checked") {
    QMatrix m(2, 2);
    CHECK_THROWS_AS(m(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m(0, 2), std::out_of_range);
    CHECK_THROWS_AS(m.append_row(qv({1})), std::invalid_argument);
}
