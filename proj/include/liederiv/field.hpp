#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <vector>

namespace liederiv {

/// Exact scalar. Over GF(p) it always holds an integer residue in [0, p).
using Scalar = mpq_class;
/// Coordinate column in a fixed basis.
using Vec = std::vector<Scalar>;

/// The base field: the rationals or a prime field GF(p).
///
/// Arithmetic is done "raw" on Scalars (exact over Z/Q) and then mapped into
/// the field with reduce(). Over GF(p) this is valid for sums and products of
/// residues since Z -> GF(p) is a ring map; division must go through inv().
class Field {
public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    /// Throws InputError unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    /// Accepts "Q", "QQ", "GF(p)", "GF p", "F_p" or a bare prime.
    static Field parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    std::uint64_t characteristic() const { return p_; }
    bool two_torsion_free() const { return p_ != 2; }
    std::string name() const;

    Scalar reduce(const Scalar& x) const;
    Scalar inv(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    Vec reduce(Vec v) const;
    Vec zeros(std::size_t n) const { return Vec(n, Scalar(0)); }
    Vec unit_vector(std::size_t n, std::size_t i) const;

    /// Parses "a/b" or "a" and reduces into the field.
    Scalar parse_scalar(std::string_view text) const;

    /// Field has finitely many elements.
    bool is_finite() const { return is_prime(); }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_zero(const Scalar& x);
bool is_zero(const Vec& v);
std::string to_string(const Scalar& x);
std::string to_string(const Vec& v);

/// Raw (unreduced) vector helpers; follow with Field::reduce.
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);

/// Calls `fn(v)` for every vector in GF(p)^n in lexicographic order, stopping
/// early when fn returns false. Returns the number of vectors visited.
template <class Fn>
std::uint64_t enumerate_vectors(const Field& field, std::size_t n, Fn&& fn) {
    const std::uint64_t p = field.characteristic();
    std::vector<std::uint64_t> digits(n, 0);
    Vec v = field.zeros(n);
    std::uint64_t visited = 0;
    while (true) {
        ++visited;
        if (!fn(static_cast<const Vec&>(v)))
            return visited;
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) {
                v[pos] = Scalar(static_cast<unsigned long>(digits[pos]));
                break;
            }
            digits[pos] = 0;
            v[pos] = 0;
            if (pos == 0)
                return visited;
        }
        if (n == 0)
            return visited;
    }
}

/// p^n, saturating at UINT64_MAX.
std::uint64_t field_power(const Field& field, std::size_t n);

} // namespace liederiv
