#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chaingeo {

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Correctly rounded toward zero (GMP mpq_get_d semantics).
    double to_double() const { return v_.get_d(); }

    /// "num/den", or just "num" when the denominator is one.
    std::string to_string() const;
    /// Always "num/den", the serialization form.
    std::string to_fraction_string() const;

    /// Non-negative rational square root when one exists.
    std::optional<Rational> sqrt() const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.v_)); }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y)
    {
        const int c = cmp(x.v_, y.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x)
    {
        return os << x.to_string();
    }

private:
    mpq_class v_;
};

/// Exact square root of a non-negative integer, if it is a perfect square.
std::optional<mpz_class> exact_isqrt(const mpz_class& v);

} // namespace chaingeo
