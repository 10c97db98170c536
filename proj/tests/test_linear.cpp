#include "helpers.hpp"
#include "liederiv/errors.hpp"

#include <doctest.h>

using namespace liederiv;
using namespace testing;

TEST_SUITE("linear") {

TEST_CASE("prime field arithmetic reduces and inverts") {
    Field f = Field::prime(3);
    CHECK(f.reduce(Scalar(-1)) == 2);
    CHECK(f.inv(Scalar(2)) == 2);
    CHECK(f.mul(Scalar(2), Scalar(2)) == 1);
    CHECK(Field::parse("GF(5)") == Field::prime(5));
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK_THROWS_AS(Field::prime(4), InputError);
    CHECK_THROWS_AS(f.inv(Scalar(0)), Error);
}

TEST_CASE("rational reduction keeps fractions canonical") {
    Field q = Field::rationals();
    CHECK(q.parse_scalar("2/4") == Scalar(1, 2));
    CHECK(q.div(Scalar(3), Scalar(6)) == Scalar(1, 2));
    Field f5 = Field::prime(5);
    CHECK(f5.parse_scalar("7") == 2);
    CHECK(f5.parse_scalar("1/2") == 3);
}

TEST_CASE("two torsion gate") {
    CHECK(Field::rationals().two_torsion_free());
    CHECK(Field::prime(3).two_torsion_free());
    CHECK_FALSE(Field::prime(2).two_torsion_free());
}

TEST_CASE("rref examples") {
    Field q = Field::rationals();
    auto [r1, k1] = rref(Matrix::identity(q, 2));
    CHECK(k1 == 2);
    CHECK(r1 == Matrix::identity(q, 2));

    auto [r2, k2] = rref(rows(q, {{1, 2}, {2, 4}}));
    CHECK(k2 == 1);
    CHECK(r2 == rows(q, {{1, 2}, {0, 0}}));

    Field f = Field::prime(3);
    auto [r3, k3] = rref(rows(f, {{1, 1}, {1, 2}}));
    CHECK(k3 == 2);
    CHECK(r3 == Matrix::identity(f, 2));
}

TEST_CASE("kernel examples") {
    Field q = Field::rationals();
    CHECK(kernel(Matrix::identity(q, 2)).is_zero());
    Subspace full = kernel(Matrix(q, 2, 3));
    CHECK(full.dim() == 3);
    CHECK(full.is_full());
    Subspace k = kernel(rows(q, {{1, 2}}));
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(q, 2, {vec({-2, 1})}));
}

TEST_CASE("solve examples") {
    Field q = Field::rationals();
    auto x = solve(Matrix::identity(q, 2), vec({3, 4}));
    REQUIRE(x);
    CHECK(*x == vec({3, 4}));
    auto y = solve(rows(q, {{1, 1}}), vec({2}));
    REQUIRE(y);
    CHECK((*y)[0] + (*y)[1] == 2);
    CHECK_FALSE(solve(rows(q, {{1}, {1}}), vec({1, 2})));
}

TEST_CASE("subspace sum, intersection and preimage") {
    Field q = Field::rationals();
    Subspace u = Subspace::span(q, 3, {vec({1, 0, 0}), vec({0, 1, 0})});
    Subspace v = Subspace::span(q, 3, {vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK(intersect(u, v) == Subspace::span(q, 3, {vec({0, 1, 0})}));
    CHECK(sum(u, v).is_full());
    // Canonical bases make equality basis independent.
    CHECK(Subspace::span(q, 2, {vec({1, 1}), vec({1, -1})}) == Subspace::full(q, 2));
    // x -> (x1, 0) pulls span{e1} back to the whole plane.
    Matrix proj = rows(q, {{1, 0}, {0, 0}});
    CHECK(preimage(proj, Subspace::span(q, 2, {vec({1, 0})})).is_full());
    CHECK(preimage(proj, Subspace::zero(q, 2)) == Subspace::span(q, 2, {vec({0, 1})}));
    CHECK_THROWS_AS(sum(u, Subspace::zero(q, 2)), InputError);
}

TEST_CASE("residual vanishes exactly on members") {
    Field f = Field::prime(5);
    Subspace s = Subspace::span(f, 3, {vec({1, 2, 3})});
    CHECK(is_zero(s.residual(f.reduce(vec({2, 4, 6})))));
    CHECK_FALSE(is_zero(s.residual(vec({1, 0, 0}))));
    CHECK(s.residual_matrix().apply(vec({3, 1, 4})) == s.residual(vec({3, 1, 4})));
}

TEST_CASE("property: rref is idempotent and rank plus nullity is the column count") {
    std::mt19937_64 rng(7);
    for (Field f : {Field::rationals(), Field::prime(3), Field::prime(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            Matrix m = random_matrix(rng, f, r, c);
            auto [red, k] = rref(m);
            auto [red2, k2] = rref(red);
            CHECK(red2 == red);
            CHECK(k2 == k);
            Subspace ker = kernel(m);
            CHECK(k + ker.dim() == c);
            for (const Vec& v : ker.basis_vectors())
                CHECK(is_zero(m.apply(v)));
        }
    }
}

TEST_CASE("property: dim(U + V) + dim(U meet V) = dim U + dim V") {
    std::mt19937_64 rng(11);
    for (Field f : {Field::rationals(), Field::prime(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 2 + rng() % 4;
            Subspace u = Subspace::row_space(random_matrix(rng, f, 1 + rng() % n, n));
            Subspace v = Subspace::row_space(random_matrix(rng, f, 1 + rng() % n, n));
            Subspace meet = intersect(u, v);
            CHECK(sum(u, v).dim() + meet.dim() == u.dim() + v.dim());
            CHECK(u.contains(meet));
            CHECK(v.contains(meet));
        }
    }
}

}
