#include "liederiv/linalg.hpp"

#include "liederiv/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace liederiv {

namespace {

void require_same_field(const Field& a, const Field& b) {
    if (a != b)
        throw InputError("field mismatch: " + a.name() + " vs " + b.name());
}

// In-place Gauss-Jordan on a dense row-major buffer. Sparse-friendly: rows
// with a zero in the pivot column are skipped and zero pivot-row entries are
// not propagated.
template <class T, class Ops>
std::vector<std::size_t> gauss_jordan(std::vector<T>& a, std::size_t rows, std::size_t cols,
                                      const Ops& ops) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
        std::size_t pr = lead_row;
        while (pr < rows && ops.is_zero(a[pr * cols + c]))
            ++pr;
        if (pr == rows)
            continue;
        if (pr != lead_row)
            for (std::size_t k = c; k < cols; ++k)
                std::swap(a[pr * cols + k], a[lead_row * cols + k]);
        T* prow = &a[lead_row * cols];
        T inv = ops.inv(prow[c]);
        nz.clear();
        for (std::size_t k = c; k < cols; ++k) {
            if (!ops.is_zero(prow[k])) {
                prow[k] = ops.mul(prow[k], inv);
                nz.push_back(k);
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead_row)
                continue;
            T* row = &a[r * cols];
            if (ops.is_zero(row[c]))
                continue;
            T factor = row[c];
            for (std::size_t k : nz)
                ops.sub_mul(row[k], factor, prow[k]);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

struct RationalOps {
    bool is_zero(const mpq_class& x) const { return sgn(x) == 0; }
    mpq_class inv(const mpq_class& x) const { return mpq_class(1) / x; }
    mpq_class mul(const mpq_class& x, const mpq_class& y) const { return x * y; }
    void sub_mul(mpq_class& x, const mpq_class& f, const mpq_class& y) const { x -= f * y; }
};

struct ModOps {
    std::uint64_t p;
    bool is_zero(std::uint64_t x) const { return x == 0; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return (x * y) % p; }
    std::uint64_t inv(std::uint64_t x) const {
        std::uint64_t r = 1, b = x, e = p - 2;
        while (e) {
            if (e & 1)
                r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    void sub_mul(std::uint64_t& x, std::uint64_t f, std::uint64_t y) const {
        x = (x + p - mul(f, y)) % p;
    }
};

} // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        m.set_column(c, cols[c]);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
    data_[r * cols_ + c] = field_.reduce(value);
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = data_[r * cols_ + c];
    return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
    if (v.size() != rows_)
        throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        set(r, c, v[r]);
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_)
        throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c)
        set(r, c, v[c]);
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_)
        throw InputError("matrix-vector shape mismatch: " + std::to_string(cols_) + " vs " +
                         std::to_string(x.size()));
    Vec y(rows_, Scalar(0));
    for (std::size_t c = 0; c < cols_; ++c) {
        if (liederiv::is_zero(x[c]))
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = data_[r * cols_ + c];
            if (!liederiv::is_zero(a))
                y[r] += a * x[c];
        }
    }
    return field_.reduce(std::move(y));
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(field_, o.field_);
    if (cols_ != o.rows_)
        throw InputError("matrix product shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = data_[r * cols_ + k];
            if (liederiv::is_zero(a))
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                m.data_[r * o.cols_ + c] += a * o.data_[k * o.cols_ + c];
        }
    m.data_ = field_.reduce(std::move(m.data_));
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix sum shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = field_.add(data_[i], o.data_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix difference shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = field_.sub(data_[i], o.data_[i]);
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = field_.mul(s, data_[i]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.data_[c * rows_ + r] = data_[r * cols_ + c];
    return m;
}

Matrix Matrix::stacked(const Matrix& o) const {
    require_same_field(field_, o.field_);
    if (cols_ != o.cols_)
        throw InputError("stacking matrices with different column counts");
    Matrix m(field_, rows_ + o.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw InputError("block out of range");
    Matrix m(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            m.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
    return m;
}

bool Matrix::is_zero() const { return liederiv::is_zero(data_); }

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::unflatten(Field field, std::size_t rows, std::size_t cols, const Vec& flat) {
    if (flat.size() != rows * cols)
        throw InputError("flattened matrix has wrong length");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < flat.size(); ++i)
        m.data_[i] = field.reduce(flat[i]);
    return m;
}

RrefResult rref_full(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    Matrix out(f, rows, cols);
    if (f.is_prime()) {
        std::vector<std::uint64_t> a(rows * cols);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = m.data()[i].get_num().get_ui();
        pivots = gauss_jordan(a, rows, cols, ModOps{f.characteristic()});
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out.set_canonical(r, c, Scalar(static_cast<unsigned long>(a[r * cols + c])));
    } else {
        Vec a = m.data();
        pivots = gauss_jordan(a, rows, cols, RationalOps{});
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out.set_canonical(r, c, std::move(a[r * cols + c]));
    }
    const std::size_t rk = pivots.size();
    return RrefResult{std::move(out), rk, std::move(pivots)};
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
    auto r = rref_full(m);
    return {std::move(r.reduced), r.rank};
}

std::size_t rank(const Matrix& m) { return rref_full(m).rank; }

Subspace kernel(const Matrix& m) {
    const Field& f = m.field();
    auto r = rref_full(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v = f.zeros(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = f.neg(r.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, m.cols(), basis);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows())
        throw InputError("right-hand side length does not match row count");
    const Field& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug.set_canonical(r, c, m(r, c));
        aug.set(r, m.cols(), b[r]);
    }
    auto red = rref_full(aug);
    if (!red.pivots.empty() && red.pivots.back() == m.cols())
        return std::nullopt;
    Vec x = f.zeros(m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        x[red.pivots[i]] = red.reduced(i, m.cols());
    if (m.apply(x) != f.reduce(b))
        throw ConsistencyError("solve: particular solution failed verification");
    return x;
}

Subspace Subspace::zero(Field field, std::size_t ambient) {
    return Subspace(Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(Field field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        piv[i] = i;
    return Subspace(Matrix::identity(field, ambient), std::move(piv));
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vec>& vectors) {
    return row_space(Matrix::from_rows(field, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
    auto r = rref_full(m);
    return Subspace(r.reduced.block(0, 0, r.rank, m.cols()), std::move(r.pivots));
}

std::vector<Vec> Subspace::basis_vectors() const {
    std::vector<Vec> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out.push_back(basis_.row(i));
    return out;
}

Vec Subspace::residual(const Vec& x) const {
    if (x.size() != ambient_dim())
        throw InputError("vector length does not match subspace ambient dimension");
    const Field& f = field();
    Vec r = f.reduce(x);
    for (std::size_t i = 0; i < dim(); ++i) {
        Scalar coef = r[pivots_[i]];
        if (liederiv::is_zero(coef))
            continue;
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            if (!liederiv::is_zero(basis_(i, c)))
                r[c] = f.sub(r[c], coef * basis_(i, c));
    }
    return r;
}

Matrix Subspace::residual_matrix() const {
    // R = I - sum_i b_i e_{pivot_i}^T
    Matrix r = Matrix::identity(field(), ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            if (!liederiv::is_zero(basis_(i, c)))
                r.set(c, pivots_[i], r(c, pivots_[i]) - basis_(i, c));
    return r;
}

std::optional<Vec> Subspace::coordinates(const Vec& x) const {
    if (!contains(x))
        return std::nullopt;
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = field().reduce(x[pivots_[i]]);
    return c;
}

Vec Subspace::combine(const Vec& coords) const {
    if (coords.size() != dim())
        throw InputError("coordinate vector length does not match subspace dimension");
    Vec v(ambient_dim(), Scalar(0));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            v[c] += coords[i] * basis_(i, c);
    return field().reduce(std::move(v));
}

bool Subspace::contains(const Vec& x) const { return liederiv::is_zero(residual(x)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim())
        throw InputError("subspace ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw InputError("subspace sum: ambient dimension mismatch (" +
                         std::to_string(u.ambient_dim()) + " vs " +
                         std::to_string(v.ambient_dim()) + ")");
    require_same_field(u.field(), v.field());
    return Subspace::row_space(u.basis().stacked(v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw InputError("subspace intersection: ambient dimension mismatch (" +
                         std::to_string(u.ambient_dim()) + " vs " +
                         std::to_string(v.ambient_dim()) + ")");
    require_same_field(u.field(), v.field());
    const Field& f = u.field();
    const std::size_t n = u.ambient_dim();
    Matrix z(f, u.dim() + v.dim(), 2 * n);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) {
            z.set_canonical(i, c, u.basis()(i, c));
            z.set_canonical(i, n + c, u.basis()(i, c));
        }
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            z.set_canonical(u.dim() + i, c, v.basis()(i, c));
    auto red = rref_full(z);
    std::vector<Vec> inter;
    for (std::size_t i = 0; i < red.rank; ++i) {
        if (red.pivots[i] < n)
            continue;
        Vec w(n);
        for (std::size_t c = 0; c < n; ++c)
            w[c] = red.reduced(i, n + c);
        inter.push_back(std::move(w));
    }
    return Subspace::span(f, n, inter);
}

Subspace image(const Matrix& map, const Subspace& s) {
    if (map.cols() != s.ambient_dim())
        throw InputError("image: map domain does not match subspace");
    std::vector<Vec> vs;
    for (const auto& b : s.basis_vectors())
        vs.push_back(map.apply(b));
    return Subspace::span(map.field(), map.rows(), vs);
}

Subspace column_space(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace preimage(const Matrix& map, const Subspace& target) {
    if (map.rows() != target.ambient_dim())
        throw InputError("preimage: map codomain does not match subspace");
    return kernel(target.residual_matrix() * map);
}

} // namespace liederiv
