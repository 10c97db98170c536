#include "liederiv/field.hpp"

#include "liederiv/errors.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace liederiv {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

mpz_class parse_integer(const std::string& s, std::string_view context) {
    if (s.empty())
        throw InputError("empty integer in scalar '" + std::string(context) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw InputError("malformed scalar '" + std::string(context) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw InputError("malformed scalar '" + std::string(context) + "'");
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31))
        throw InputError("prime modulus too large (must be < 2^31): " + std::to_string(p));
    if (!is_prime_u64(p))
        throw InputError("GF(p) needs a prime modulus, got " + std::to_string(p));
    return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text) {
    std::string t = trim(text);
    std::string upper;
    for (char c : t)
        if (!std::isspace(static_cast<unsigned char>(c)))
            upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "Q" || upper == "QQ" || upper == "RATIONALS")
        return rationals();
    std::string digits;
    if (upper.rfind("GF(", 0) == 0 && upper.back() == ')')
        digits = upper.substr(3, upper.size() - 4);
    else if (upper.rfind("GF", 0) == 0)
        digits = upper.substr(2);
    else if (upper.rfind("F_", 0) == 0)
        digits = upper.substr(2);
    else
        digits = upper;
    if (digits.empty() || digits.size() > 12)
        throw InputError("unknown field '" + t + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("unknown field '" + t + "'");
    return prime(std::stoull(digits));
}

std::string Field::name() const {
    if (kind_ == Kind::Rationals)
        return "Q";
    return "GF(" + std::to_string(p_) + ")";
}

Scalar Field::reduce(const Scalar& x) const {
    if (kind_ == Kind::Rationals) {
        Scalar r = x;
        r.canonicalize();
        return r;
    }
    const mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = x.get_num();
    mpz_class den = x.get_den();
    mpz_class r;
    if (den != 1) {
        mpz_class d = den % p;
        if (d < 0)
            d += p;
        if (d == 0)
            throw InputError("denominator divisible by the characteristic in " + x.get_str());
        mpz_class dinv;
        mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        num *= dinv;
    }
    r = num % p;
    if (r < 0)
        r += p;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& x) const {
    if (is_zero(x))
        throw InputError("division by zero");
    if (kind_ == Kind::Rationals)
        return Scalar(1) / x;
    const mpz_class p(static_cast<unsigned long>(p_));
    mpz_class a = reduce(x).get_num();
    mpz_class out;
    mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return Scalar(out);
}

Vec Field::reduce(Vec v) const {
    for (auto& x : v)
        x = reduce(x);
    return v;
}

Vec Field::unit_vector(std::size_t n, std::size_t i) const {
    Vec v = zeros(n);
    v.at(i) = 1;
    return v;
}

Scalar Field::parse_scalar(std::string_view text) const {
    std::string t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string::npos)
        return reduce(Scalar(parse_integer(t, text)));
    mpz_class num = parse_integer(trim(t.substr(0, slash)), text);
    mpz_class den = parse_integer(trim(t.substr(slash + 1)), text);
    if (den == 0)
        throw InputError("zero denominator in scalar '" + t + "'");
    if (kind_ == Kind::Prime) {
        Scalar n = reduce(Scalar(num));
        return mul(n, inv(reduce(Scalar(den))));
    }
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

bool is_zero(const Scalar& x) { return sgn(x) == 0; }

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i].get_str();
    os << ']';
    return os.str();
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw InputError("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw InputError("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Scalar& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

std::uint64_t field_power(const Field& field, std::size_t n) {
    if (!field.is_finite())
        return std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    const std::uint64_t p = field.characteristic();
    for (std::size_t i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p)
            return std::numeric_limits<std::uint64_t>::max();
        r *= p;
    }
    return r;
}

} // namespace liederiv
