#include "liederiv/library.hpp"

#include "liederiv/errors.hpp"
#include "liederiv/gma.hpp"
#include "liederiv/workspace.hpp"

#include <functional>

namespace liederiv {

namespace {

// Structure tensor from a product rule on basis indices.
Vec structure_from(const Field& f, std::size_t d,
                   const std::function<Vec(std::size_t, std::size_t)>& product) {
    Vec s(d * d * d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec p = f.reduce(product(i, j));
            for (std::size_t k = 0; k < d; ++k)
                s[(i * d + j) * d + k] = p[k];
        }
    return s;
}

std::string unit_name(std::size_t i, std::size_t j) {
    return "e" + std::to_string(i + 1) + std::to_string(j + 1);
}

} // namespace

AlgebraPtr make_algebra(Field field, std::size_t dim, const Vec& structure, const Vec& unit,
                        std::vector<std::string> names) {
    return std::make_shared<const FDAlgebra>(std::move(field), dim, structure, unit,
                                             std::move(names));
}

AlgebraPtr scalar_algebra(Field f) {
    return make_algebra(f, 1, Vec{Scalar(1)}, Vec{Scalar(1)}, {"1"});
}

AlgebraPtr dual_numbers(Field f) {
    auto s = structure_from(f, 2, [&](std::size_t i, std::size_t j) {
        Vec v = f.zeros(2);
        if (i + j < 2)
            v[i + j] = 1;
        return v;
    });
    return make_algebra(f, 2, s, f.unit_vector(2, 0), {"1", "x"});
}

AlgebraPtr split_pair(Field f) {
    auto s = structure_from(f, 2, [&](std::size_t i, std::size_t j) {
        Vec v = f.zeros(2);
        if (i == j)
            v[i] = 1;
        return v;
    });
    return make_algebra(f, 2, s, Vec{Scalar(1), Scalar(1)}, {"e1", "e2"});
}

AlgebraPtr quadratic_algebra(Field f, const Scalar& c) {
    auto s = structure_from(f, 2, [&](std::size_t i, std::size_t j) {
        Vec v = f.zeros(2);
        if (i + j < 2)
            v[i + j] = 1;
        else
            v[0] = c;
        return v;
    });
    return make_algebra(f, 2, s, f.unit_vector(2, 0), {"1", "x"});
}

AlgebraPtr matrix_algebra(Field f, std::size_t n) {
    const std::size_t d = n * n;
    auto s = structure_from(f, d, [&](std::size_t x, std::size_t y) {
        Vec v = f.zeros(d);
        if (x % n == y / n)
            v[(x / n) * n + y % n] = 1;
        return v;
    });
    Vec unit = f.zeros(d);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        unit[i * n + i] = 1;
        for (std::size_t j = 0; j < n; ++j)
            names.push_back(unit_name(i, j));
    }
    return make_algebra(f, d, s, unit, names);
}

AlgebraPtr upper_triangular(Field f, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            cells.emplace_back(i, j);
    const std::size_t d = cells.size();
    auto index = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < d; ++k)
            if (cells[k] == std::make_pair(i, j))
                return k;
        return d;
    };
    auto s = structure_from(f, d, [&](std::size_t x, std::size_t y) {
        Vec v = f.zeros(d);
        if (cells[x].second == cells[y].first)
            v[index(cells[x].first, cells[y].second)] = 1;
        return v;
    });
    Vec unit = f.zeros(d);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < d; ++k) {
        if (cells[k].first == cells[k].second)
            unit[k] = 1;
        names.push_back(unit_name(cells[k].first, cells[k].second));
    }
    return make_algebra(f, d, s, unit, names);
}

AlgebraPtr tensor_product(const FDAlgebra& a, const FDAlgebra& b) {
    const Field& f = a.field();
    if (f != b.field())
        throw InputError("tensor product of algebras over different fields");
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    auto s = structure_from(f, d, [&](std::size_t x, std::size_t y) {
        Vec v = f.zeros(d);
        for (std::size_t k = 0; k < da; ++k) {
            const Scalar& ca = a.constant(x / db, y / db, k);
            if (is_zero(ca))
                continue;
            for (std::size_t l = 0; l < db; ++l)
                v[k * db + l] += ca * b.constant(x % db, y % db, l);
        }
        return v;
    });
    Vec unit = f.zeros(d);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            unit[i * db + j] = a.unit()[i] * b.unit()[j];
            names.push_back(a.basis_names()[i] + "*" + b.basis_names()[j]);
        }
    return make_algebra(f, d, s, f.reduce(unit), names);
}

Bimodule twisted_module_ab(AlgebraPtr a, AlgebraPtr b, const Matrix& beta) {
    const Field& f = a->field();
    const std::size_t d = a->dim(), db = b->dim();
    Tensor3 left(f, d, d, d), right(f, d, db, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                left.set(i, j, k, a->constant(i, j, k));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < db; ++i) {
            Vec p = a->multiply(a->basis_vector(j), beta.column(i));
            for (std::size_t k = 0; k < d; ++k)
                right.set(j, i, k, p[k]);
        }
    return Bimodule(std::move(a), std::move(b), d, std::move(left), std::move(right));
}

Bimodule twisted_module_ba(AlgebraPtr a, AlgebraPtr b, const Matrix& beta) {
    const Field& f = a->field();
    const std::size_t d = a->dim(), db = b->dim();
    Tensor3 left(f, db, d, d), right(f, d, d, d);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec p = a->multiply(beta.column(i), a->basis_vector(j));
            for (std::size_t k = 0; k < d; ++k)
                left.set(i, j, k, p[k]);
        }
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                right.set(j, i, k, a->constant(j, i, k));
    return Bimodule(std::move(b), std::move(a), d, std::move(left), std::move(right));
}

namespace {

// Commutative algebra on {1, a0, b0} with all products of a0, b0 zero.
Vec sec4_product(const Field& f, std::size_t i, std::size_t j) {
    Vec v = f.zeros(3);
    if (i == 0)
        v[j] = 1;
    else if (j == 0)
        v[i] = 1;
    return v;
}

Workspace example_sec4() {
    Field q = Field::rationals();
    AlgebraPtr A = make_algebra(q, 2, structure_from(q, 2, [&](std::size_t i, std::size_t j) {
                                    Vec v = q.zeros(2);
                                    if (i + j < 2)
                                        v[i + j] = 1;
                                    return v;
                                }),
                                q.unit_vector(2, 0), {"1", "a0"});
    AlgebraPtr B = make_algebra(q, 2, A->structure(), q.unit_vector(2, 0), {"1", "b0"});
    // Positions of the A and B bases inside {1, a0, b0}.
    const std::size_t in_a[] = {0, 1}, in_b[] = {0, 2};
    Tensor3 ml(q, 2, 3, 3), mr(q, 3, 2, 3), nl(q, 2, 3, 3), nr(q, 3, 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                ml.set(i, j, k, sec4_product(q, in_a[i], j)[k]);
                mr.set(j, i, k, sec4_product(q, j, in_b[i])[k]);
                nl.set(i, j, k, sec4_product(q, in_b[i], j)[k]);
                nr.set(j, i, k, sec4_product(q, j, in_a[i])[k]);
            }
    Bimodule M(A, B, 3, ml, mr), N(B, A, 3, nl, nr);
    Workspace ws;
    ws.field = q;
    ws.add_context("G", make_trivial_context(A, B, M, N), "A", "B", "M", "N");
    ws.maps.push_back(NamedMap{"L_nonproper", "G", EndoMap{example_sec4_map()}});
    return ws;
}

Workspace triangular_example(Field f) {
    AlgebraPtr F = scalar_algebra(f);
    Bimodule M = twisted_module_ab(F, F, Matrix::identity(f, 1));
    Workspace ws;
    ws.field = f;
    ws.add_context("T2", make_trivial_context(F, F, M, Bimodule::zero(F, F)), "F", "F", "M",
                   "N");
    return ws;
}

Workspace peirce_example(Field f, std::size_t n) {
    AlgebraPtr mat = matrix_algebra(f, n);
    Workspace ws;
    ws.field = f;
    ws.algebras.push_back(NamedAlgebra{"M" + std::to_string(n), mat});
    ws.add_context("peirce", peirce(*mat, f.unit_vector(n * n, 0)), "pAp", "qAq", "pAq", "qAp");
    return ws;
}

Workspace trivial_qqq() {
    Field q = Field::rationals();
    AlgebraPtr F = scalar_algebra(q);
    Matrix id = Matrix::identity(q, 1);
    Workspace ws;
    ws.field = q;
    ws.add_context("G",
                   make_trivial_context(F, F, twisted_module_ab(F, F, id),
                                        twisted_module_ba(F, F, id)),
                   "F", "F", "M", "N");
    return ws;
}

} // namespace

Matrix example_sec4_map() {
    Matrix l(Field::rationals(), 10, 10);
    // u2 a0 in the A-block, r2 b0 in the B-block.
    l.set(1, 9, 1);
    l.set(9, 1, 1);
    // M-block: -s3 a0 - s2 b0; N-block: -t3 a0 - t2 b0.
    l.set(3, 4, -1);
    l.set(4, 3, -1);
    l.set(6, 7, -1);
    l.set(7, 6, -1);
    return l;
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{"example_sec4",    "tri2_Q",
                                                "tri2_GF5",        "mat2_GF3_peirce",
                                                "mat3_GF3_peirce", "trivial_QQQ"};
    return names;
}

std::string example_description(const std::string& name) {
    if (name == "example_sec4")
        return "trivial GMA over Q, dims 2+3+3+2, zero pairings, with the non-proper map L_nonproper";
    if (name == "tri2_Q")
        return "upper triangular 2x2 matrices over Q (A = B = M = Q, N = 0)";
    if (name == "tri2_GF5")
        return "upper triangular 2x2 matrices over GF(5)";
    if (name == "mat2_GF3_peirce")
        return "M_2(GF(3)) split by the idempotent e11";
    if (name == "mat3_GF3_peirce")
        return "M_3(GF(3)) split by the idempotent e11";
    if (name == "trivial_QQQ")
        return "A = B = M = N = Q with zero pairings";
    throw InputError("unknown example '" + name + "'");
}

Workspace load_example(const std::string& name) {
    if (name == "example_sec4")
        return example_sec4();
    if (name == "tri2_Q")
        return triangular_example(Field::rationals());
    if (name == "tri2_GF5")
        return triangular_example(Field::prime(5));
    if (name == "mat2_GF3_peirce")
        return peirce_example(Field::prime(3), 2);
    if (name == "mat3_GF3_peirce")
        return peirce_example(Field::prime(3), 3);
    if (name == "trivial_QQQ")
        return trivial_qqq();
    throw InputError("unknown example '" + name + "'");
}

} // namespace liederiv
