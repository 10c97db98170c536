#pragma once

#include "liederiv/morita.hpp"

#include <string>
#include <vector>

namespace liederiv {

struct Workspace;

AlgebraPtr make_algebra(Field field, std::size_t dim, const Vec& structure, const Vec& unit,
                        std::vector<std::string> names = {});

/// The field itself as a 1-dimensional algebra.
AlgebraPtr scalar_algebra(Field f);
/// F[x]/(x^2), basis {1, x}.
AlgebraPtr dual_numbers(Field f);
/// F x F, basis {e1, e2} of orthogonal idempotents.
AlgebraPtr split_pair(Field f);
/// F[x]/(x^2 - c), basis {1, x}; a field when c is a non-square.
AlgebraPtr quadratic_algebra(Field f, const Scalar& c);
/// M_n(F), basis e_ij in row-major order.
AlgebraPtr matrix_algebra(Field f, std::size_t n);
/// Upper triangular n x n matrices, basis e_ij (i <= j) in row-major order.
AlgebraPtr upper_triangular(Field f, std::size_t n);
/// A (x) B with basis e_i (x) f_j at index i * dim B + j.
AlgebraPtr tensor_product(const FDAlgebra& a, const FDAlgebra& b);

/// M as an (A, B)-bimodule on the underlying space of A: a.m = am and
/// m.b = m beta(b) for an algebra map beta: B -> A (columns = images of the
/// basis of B). A must be commutative unless beta is the identity.
Bimodule twisted_module_ab(AlgebraPtr a, AlgebraPtr b, const Matrix& beta);
/// N as a (B, A)-bimodule on the space of A: b.n = beta(b) n, n.a = na.
Bimodule twisted_module_ba(AlgebraPtr a, AlgebraPtr b, const Matrix& beta);

/// Bundled example names, in listing order.
const std::vector<std::string>& example_names();
/// One-line description of a bundled example.
std::string example_description(const std::string& name);
/// Throws InputError for an unknown name.
Workspace load_example(const std::string& name);

/// The explicit non-proper Lie derivation of the 10-dimensional example,
/// in G coordinates (A: 1, a0 | M: 1, a0, b0 | N: 1, a0, b0 | B: 1, b0).
Matrix example_sec4_map();

} // namespace liederiv
