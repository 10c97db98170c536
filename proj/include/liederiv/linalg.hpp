#pragma once

#include "liederiv/field.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace liederiv {

/// Dense row-major matrix over a Field. Entries are always canonical
/// (lowest terms over Q, least non-negative residue over GF(p)).
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(Field field, std::size_t n);
    /// Rows given as vectors; each must have length `cols`.
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
    /// Columns given as vectors of length `rows`.
    static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Stores field.reduce(value).
    void set(std::size_t r, std::size_t c, const Scalar& value);
    /// Stores a value the caller guarantees is already canonical.
    void set_canonical(std::size_t r, std::size_t c, Scalar value) { data_[r * cols_ + c] = std::move(value); }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    void set_column(std::size_t c, const Vec& v);
    void set_row(std::size_t r, const Vec& v);

    Vec apply(const Vec& x) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;

    /// Stacks `o` below this matrix.
    Matrix stacked(const Matrix& o) const;
    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Row-major flattening (index r*cols + c).
    Vec flatten() const { return data_; }
    static Matrix unflatten(Field field, std::size_t rows, std::size_t cols, const Vec& flat);

    const Vec& data() const { return data_; }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    Vec data_;
};

/// Reduced row echelon form: leftmost pivot, first nonzero row wins.
struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref_full(const Matrix& m);
std::pair<Matrix, std::size_t> rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace;

/// {x : m x = 0} with canonical basis.
Subspace kernel(const Matrix& m);

/// One particular solution of m x = b (free variables set to zero), or
/// nullopt when the system is inconsistent. The result is re-checked by
/// multiplication before it is returned.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Subspace of F^n held as a canonical RREF basis, so equal subspaces have
/// identical bases.
class Subspace {
public:
    static Subspace zero(Field field, std::size_t ambient);
    static Subspace full(Field field, std::size_t ambient);
    static Subspace span(Field field, std::size_t ambient, const std::vector<Vec>& vectors);
    /// Row space of m.
    static Subspace row_space(const Matrix& m);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    const Matrix& basis() const { return basis_; }
    std::vector<Vec> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// x minus its projection along the pivot coordinates; zero iff x is in
    /// the subspace.
    Vec residual(const Vec& x) const;
    /// Matrix R with R x = residual(x).
    Matrix residual_matrix() const;
    /// Coordinates of x in the canonical basis, if x is a member.
    std::optional<Vec> coordinates(const Vec& x) const;
    /// Inverse of coordinates().
    Vec combine(const Vec& coords) const;

    bool contains(const Vec& x) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus: reduce [[u | u], [v | 0]]; rows with vanishing left half span
/// the intersection in their right half.
Subspace intersect(const Subspace& u, const Subspace& v);

/// Image of a subspace under a linear map.
Subspace image(const Matrix& map, const Subspace& s);
/// Column space of a matrix.
Subspace column_space(const Matrix& m);
/// {x : map x in target}.
Subspace preimage(const Matrix& map, const Subspace& target);

} // namespace liederiv
