#include "helpers.hpp"
#include "liederiv/derivations.hpp"
#include "liederiv/errors.hpp"

#include <doctest.h>

using namespace liederiv;
using namespace testing;

TEST_SUITE("derivations") {

TEST_CASE("derivation space dimensions") {
    CHECK(derivation_space(*scalar_algebra(Field::rationals())).dim() == 0);
    CHECK(derivation_space(*matrix_algebra(Field::prime(3), 2)).dim() == 3);
    CHECK(derivation_space(*matrix_algebra(Field::prime(3), 3)).dim() == 8);
    CHECK(derivation_space(*dual_numbers(Field::rationals())).dim() == 1);
}

TEST_CASE("derivations of matrix algebras are inner") {
    Field f = Field::prime(3);
    auto m2 = matrix_algebra(f, 2);
    std::vector<Vec> inner;
    for (std::size_t i = 0; i < 4; ++i)
        inner.push_back(inner_derivation(*m2, m2->basis_vector(i)).matrix.flatten());
    CHECK(Subspace::span(f, 16, inner) == derivation_space(*m2).space());
}

TEST_CASE("Lie derivation and central map spaces") {
    Field q = Field::rationals();
    CHECK(lie_derivation_space(*dual_numbers(q)).dim() == 4);
    CHECK(tau_space(*dual_numbers(q)).dim() == 4);
    CHECK(tau_space(*matrix_algebra(Field::prime(3), 2)).dim() == 1);
    CHECK(tau_space(*upper_triangular(q, 2)).dim() == 2);
    auto m2 = matrix_algebra(Field::prime(3), 2);
    CHECK(lie_derivation_space(*m2).contains(derivation_space(*m2)));
    CHECK(lie_derivation_space(*m2).contains(tau_space(*m2)));
}

TEST_CASE("membership checks") {
    GMAlgebra g = example_gma("example_sec4");
    EndoMap l{example_sec4_map()};
    CHECK(is_lie_derivation(g.algebra(), l));
    CHECK_FALSE(is_derivation(g.algebra(), l));
    CHECK(is_lie_derivation(g.algebra(), EndoMap::zero(g.field(), 10)));
    CHECK(lie_derivation_space(g.algebra()).contains(l));
}

TEST_CASE("properness oracle") {
    GMAlgebra s = example_gma("example_sec4");
    LieOracle so(s.algebra());
    ProperDecision d = so.is_proper(EndoMap{example_sec4_map()});
    CHECK_FALSE(d.proper);
    CHECK_FALSE(d.witness);
    CHECK_FALSE(so.has_lie_derivation_property());

    GMAlgebra t = example_gma("tri2_Q");
    LieOracle to(t.algebra());
    CHECK(to.has_lie_derivation_property());
    for (const EndoMap& l : to.lie_derivations().basis_maps()) {
        ProperDecision pd = to.is_proper(l);
        REQUIRE(pd.proper);
        REQUIRE(pd.witness);
        CHECK(is_derivation(t.algebra(), pd.witness->derivation));
        CHECK(is_central_commutator_vanishing(t.algebra(), pd.witness->central));
        CHECK(pd.witness->derivation.matrix + pd.witness->central.matrix == l.matrix);
    }

    CHECK(has_lie_derivation_property(*matrix_algebra(Field::prime(3), 2)));
}

TEST_CASE("derivations are proper with zero central part") {
    auto m2 = matrix_algebra(Field::prime(3), 2);
    LieOracle o(*m2);
    for (const EndoMap& d : o.derivations().basis_maps()) {
        ProperDecision pd = o.is_proper(d);
        REQUIRE(pd.proper);
        CHECK(pd.witness->central.matrix.is_zero());
    }
}

TEST_CASE("non Lie derivation is rejected with a bracket pair") {
    auto t2 = upper_triangular(Field::rationals(), 2);
    Matrix m(Field::rationals(), 3, 3);
    m.set(1, 0, 1);
    EndoMap bad{m};
    CHECK(lie_derivation_violation(*t2, bad));
    CHECK_THROWS_AS(is_proper(*t2, bad), PreconditionError);
}

TEST_CASE("characteristic two is rejected") {
    CHECK_THROWS_AS(require_two_torsion_free(Field::prime(2)), TorsionError);
    CHECK_THROWS_AS(LieOracle(*matrix_algebra(Field::prime(2), 2)), TorsionError);
}

}
