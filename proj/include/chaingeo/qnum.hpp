#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "chaingeo/rational.hpp"

namespace chaingeo {

using Radicand = std::uint64_t;

/// An element p + q*sqrt(n) of the real quadratic field Q(sqrt n).
///
/// The radicand travels with every value and arithmetic between different
/// radicands throws RadicandMismatch. When n is a perfect square k*k the
/// irrational part is folded into p at construction (q*sqrt(k*k) -> q*k),
/// so two values are equal exactly when their fields are equal.
class QNum {
public:
    QNum() = default;
    QNum(Rational p, Rational q, Radicand n);

    static QNum rational(Rational p, Radicand n) { return QNum(std::move(p), Rational(0), n); }
    /// sqrt(n) itself.
    static QNum root(Radicand n) { return QNum(Rational(0), Rational(1), n); }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    Radicand radicand() const { return n_; }

    bool is_rational() const { return q_.is_zero(); }
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    /// Same value viewed in Q(sqrt target). Allowed when the radicands already
    /// agree or the value is rational; anything else throws RadicandMismatch.
    QNum promoted_to(Radicand target) const;

    /// Exact sign of the real number, -1, 0 or +1.
    int sign() const;

    /// Galois conjugate p - q*sqrt(n).
    QNum conjugate() const { return QNum(p_, -q_, n_); }
    /// Field norm p^2 - q^2 n.
    Rational norm() const;

    QNum abs() const { return sign() < 0 ? -*this : *this; }

    /// Principal square root in Q(sqrt n), or nullopt if the root lies outside
    /// the field. Throws ArithmeticError for negative input.
    std::optional<QNum> sqrt() const;

    /// Double evaluation with relative error within a few ulps, also when
    /// p and q*sqrt(n) nearly cancel.
    double to_double() const;

    /// "p + q*sqrt(n)" in reduced form; rational values print as just p.
    std::string to_string() const;

    QNum& operator+=(const QNum& o);
    QNum& operator-=(const QNum& o);
    QNum& operator*=(const QNum& o);
    QNum& operator/=(const QNum& o);

    friend QNum operator+(QNum x, const QNum& y) { return x += y; }
    friend QNum operator-(QNum x, const QNum& y) { return x -= y; }
    friend QNum operator*(QNum x, const QNum& y) { return x *= y; }
    friend QNum operator/(QNum x, const QNum& y) { return x /= y; }
    friend QNum operator-(const QNum& x) { return QNum(-x.p_, -x.q_, x.n_); }

    // Scalar operations keep the radicand of the QNum operand.
    friend QNum operator*(QNum x, const Rational& r) { return x *= QNum::rational(r, x.n_); }
    friend QNum operator*(const Rational& r, QNum x) { return x *= QNum::rational(r, x.n_); }
    friend QNum operator/(QNum x, const Rational& r) { return x /= QNum::rational(r, x.n_); }
    friend QNum operator+(QNum x, const Rational& r) { return x += QNum::rational(r, x.n_); }
    friend QNum operator-(QNum x, const Rational& r) { return x -= QNum::rational(r, x.n_); }
    friend QNum operator-(const Rational& r, const QNum& x) { return QNum::rational(r, x.n_) - x; }

    /// Structural equality, which is value equality thanks to canonical form.
    friend bool operator==(const QNum& x, const QNum& y) = default;

    friend std::ostream& operator<<(std::ostream& os, const QNum& x) { return os << x.to_string(); }

private:
    void check_same_field(const QNum& o, const char* op) const;

    Rational p_;
    Rational q_;
    Radicand n_ = 0;
};

/// Exact comparison helpers; both operands must share a radicand.
int compare(const QNum& x, const QNum& y);

/// Integer square root when n is a perfect square.
std::optional<Radicand> square_root_of_radicand(Radicand n);

} // namespace chaingeo
