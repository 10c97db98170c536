#include "helpers.hpp"
#include "liederiv/errors.hpp"

#include <doctest.h>

using namespace liederiv;
using namespace testing;

TEST_SUITE("algebra") {

TEST_CASE("matrix algebra bracket") {
    Field q = Field::rationals();
    auto m2 = matrix_algebra(q, 2);
    // [e12, e21] = e11 - e22
    CHECK(m2->bracket(m2->basis_vector(1), m2->basis_vector(2)) == vec({1, 0, 0, -1}));
    CHECK(m2->multiply(m2->unit(), m2->basis_vector(3)) == m2->basis_vector(3));
}

TEST_CASE("non-associative structure is rejected with the failing triple") {
    Field q = Field::rationals();
    // Basis {1, x, y} with xx = y, xy = 0, yx = x, yy = 0: (xx)x = x but x(xx) = 0.
    Vec s(27, Scalar(0));
    auto put = [&](int i, int j, int k) { s[(i * 3 + j) * 3 + k] = 1; };
    for (int i = 0; i < 3; ++i) {
        put(0, i, i);
        if (i)
            put(i, 0, i);
    }
    put(1, 1, 2);
    put(2, 1, 1);
    auto failures = FDAlgebra::axiom_failures(q, 3, s, vec({1, 0, 0}));
    REQUIRE_FALSE(failures.empty());
    bool names_triple = false;
    for (const auto& msg : failures)
        names_triple = names_triple || msg.find("(i,j,k)") != std::string::npos;
    CHECK(names_triple);
    CHECK_THROWS_AS(FDAlgebra(q, 3, s, vec({1, 0, 0})), ValidationError);
}

TEST_CASE("centers") {
    Field f = Field::prime(3);
    CHECK(center(*matrix_algebra(f, 2)).dim() == 1);
    CHECK(center(*matrix_algebra(f, 2)).contains(matrix_algebra(f, 2)->unit()));
    CHECK(center(*dual_numbers(f)).is_full());
    CHECK(center(example_gma("example_sec4").algebra()).dim() == 1);
}

TEST_CASE("commutator spans") {
    Field q = Field::rationals();
    CHECK(commutator_span(*dual_numbers(q)).is_zero());
    CHECK(commutator_span(*matrix_algebra(q, 2)).dim() == 3);
    Subspace t = commutator_span(*upper_triangular(q, 2));
    REQUIRE(t.dim() == 1);
    // T_2 basis e11, e12, e22.
    CHECK(t.contains(vec({0, 1, 0})));
}

TEST_CASE("central ideals") {
    Field q = Field::rationals();
    CHECK_FALSE(central_ideal_free(*dual_numbers(q)));
    CHECK_FALSE(central_ideal_free(*scalar_algebra(q)));
    CHECK(central_ideal_free(*matrix_algebra(Field::prime(3), 2)));
    CHECK(central_ideal_free(*upper_triangular(q, 2)));
    auto w = central_ideal_witness(*dual_numbers(q));
    REQUIRE(w);
    CHECK_FALSE(is_zero(*w));
}

TEST_CASE("domain scan") {
    CHECK(domain_scan(*scalar_algebra(Field::prime(5))) == TriState::Holds);
    CHECK(domain_scan(*matrix_algebra(Field::prime(3), 2)) == TriState::Fails);
    // Nilpotent a0 is caught exactly over Q by the trace radical.
    auto ws = load_example("example_sec4");
    CHECK(domain_scan(*ws.algebra("A").algebra) == TriState::Fails);
    CHECK(domain_scan(*quadratic_algebra(Field::prime(5), Scalar(2))) == TriState::Holds);
}

TEST_CASE("idempotent enumeration") {
    auto m2 = matrix_algebra(Field::prime(3), 2);
    IdempotentScan s = idempotents(*m2);
    CHECK(s.complete);
    CHECK(s.elements.size() == 14);
    for (const Vec& e : s.elements)
        CHECK(m2->multiply(e, e) == e);

    IdempotentScan d = idempotents(*dual_numbers(Field::prime(3)));
    CHECK(d.complete);
    CHECK(d.elements == std::vector<Vec>{vec({0, 0}), vec({1, 0})});
}

TEST_CASE("idempotent budget gives a partial list") {
    IdempotentScan s = idempotents(*matrix_algebra(Field::prime(3), 2), 5);
    CHECK_FALSE(s.complete);
    CHECK(w_equals_algebra(*matrix_algebra(Field::prime(3), 2), 5) != TriState::Fails);
}

TEST_CASE("W subalgebra") {
    Field f = Field::prime(3);
    auto m2 = matrix_algebra(f, 2);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < 4; ++i)
        basis.push_back(m2->basis_vector(i));
    CHECK(subalgebra_closure(*m2, basis).is_full());
    CHECK(w_equals_algebra(*m2) == TriState::Holds);

    auto ws = load_example("example_sec4");
    const FDAlgebra& a = *ws.algebra("A").algebra;
    StructureReport r = analyze_structure(a);
    CHECK(r.w_closure == Subspace::span(a.field(), 2, {a.unit()}));
    CHECK(r.w_is_whole == TriState::Fails);
}

TEST_CASE("tensor product of algebras") {
    Field f = Field::prime(3);
    auto t = tensor_product(*matrix_algebra(f, 2), *dual_numbers(f));
    CHECK(t->dim() == 8);
    CHECK(center(*t).dim() == 2);
}

}
