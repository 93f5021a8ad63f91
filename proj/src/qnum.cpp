#include "chaingeo/qnum.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "chaingeo/errors.hpp"

namespace chaingeo {

namespace {

Rational from_radicand(Radicand n)
{
    mpz_class z;
    mpz_set_ui(z.get_mpz_t(), n);
    return Rational(z, mpz_class(1));
}

mpf_class to_mpf(const Rational& r, mp_bitcnt_t prec)
{
    mpf_class out(0, prec);
    mpf_set_q(out.get_mpf_t(), r.raw().get_mpq_t());
    return out;
}

} // namespace

std::optional<Radicand> square_root_of_radicand(Radicand n)
{
    auto r = static_cast<Radicand>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    if (r * r == n)
        return r;
    return std::nullopt;
}

QNum::QNum(Rational p, Rational q, Radicand n) : p_(std::move(p)), q_(std::move(q)), n_(n)
{
    if (q_.is_zero())
        return;
    if (auto k = square_root_of_radicand(n_)) {
        p_ += q_ * from_radicand(*k);
        q_ = Rational(0);
    }
}

QNum QNum::promoted_to(Radicand target) const
{
    if (target == n_)
        return *this;
    if (!is_rational())
        throw RadicandMismatch("cannot move " + to_string() + " into Q(sqrt " +
                               std::to_string(target) + ")");
    return QNum::rational(p_, target);
}

Rational QNum::norm() const
{
    return p_ * p_ - q_ * q_ * from_radicand(n_);
}

int QNum::sign() const
{
    const int sp = p_.sign();
    const int sq = q_.sign();
    if (sq == 0)
        return sp;
    if (sp == 0 || sp == sq)
        return sq;
    // Opposite signs: the term of larger magnitude wins.
    const Rational p2 = p_ * p_;
    const Rational q2n = q_ * q_ * from_radicand(n_);
    if (p2 > q2n)
        return sp;
    if (p2 < q2n)
        return sq;
    return 0;
}

std::optional<QNum> QNum::sqrt() const
{
    const int s = sign();
    if (s < 0)
        throw ArithmeticError("square root of negative number " + to_string());
    if (s == 0)
        return QNum::rational(Rational(0), n_);

    if (q_.is_zero()) {
        if (auto u = p_.sqrt())
            return QNum::rational(*u, n_);
        if (square_root_of_radicand(n_))
            return std::nullopt;
        // p = v^2 n
        if (auto v = (p_ / from_radicand(n_)).sqrt())
            return QNum(Rational(0), *v, n_);
        return std::nullopt;
    }

    // (u + v sqrt n)^2 = p + q sqrt n  <=>  u^2 + v^2 n = p, 2uv = q.
    // Eliminating v gives 4u^4 - 4p u^2 + q^2 n = 0, so
    // u^2 = (p +- sqrt(p^2 - q^2 n)) / 2 must be a rational square.
    const auto disc = norm().sqrt();
    if (!disc)
        return std::nullopt;
    const std::array<Rational, 2> candidates{(p_ + *disc) / Rational(2), (p_ - *disc) / Rational(2)};
    for (const auto& u2 : candidates) {
        if (u2.sign() <= 0)
            continue;
        const auto u = u2.sqrt();
        if (!u)
            continue;
        const Rational v = q_ / (Rational(2) * *u);
        QNum y(*u, v, n_);
        if (y * y == *this)
            return y.abs();
    }
    return std::nullopt;
}

double QNum::to_double() const
{
    if (q_.is_zero())
        return p_.to_double();
    constexpr mp_bitcnt_t prec = 256;
    mpf_class root(0, prec);
    mpf_set_ui(root.get_mpf_t(), n_);
    root = ::sqrt(root);
    const mpf_class p = to_mpf(p_, prec);
    const mpf_class q = to_mpf(q_, prec);
    mpf_class value(0, prec);
    if (p_.sign() * q_.sign() >= 0) {
        value = p + q * root;
    } else {
        // p + q sqrt n = (p^2 - q^2 n) / (p - q sqrt n); the denominator adds
        // two terms of equal sign, so nothing cancels.
        value = to_mpf(norm(), prec) / (p - q * root);
    }
    return value.get_d();
}

std::string QNum::to_string() const
{
    if (q_.is_zero())
        return p_.to_string();
    std::ostringstream os;
    if (!p_.is_zero())
        os << p_.to_string() << (q_.sign() < 0 ? " - " : " + ");
    else if (q_.sign() < 0)
        os << "-";
    const Rational mag = q_.abs();
    if (mag != Rational(1))
        os << mag.to_string() << "*";
    os << "sqrt(" << n_ << ")";
    return os.str();
}

void QNum::check_same_field(const QNum& o, const char* op) const
{
    if (n_ != o.n_)
        throw RadicandMismatch(std::string(op) + " between Q(sqrt " + std::to_string(n_) +
                               ") and Q(sqrt " + std::to_string(o.n_) + ")");
}

QNum& QNum::operator+=(const QNum& o)
{
    check_same_field(o, "addition");
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QNum& QNum::operator-=(const QNum& o)
{
    check_same_field(o, "subtraction");
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QNum& QNum::operator*=(const QNum& o)
{
    check_same_field(o, "multiplication");
    // Both operands are canonical, so q = 0 whenever n is a perfect square and
    // the product stays canonical.
    Rational p = p_ * o.p_ + q_ * o.q_ * from_radicand(n_);
    Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QNum& QNum::operator/=(const QNum& o)
{
    check_same_field(o, "division");
    if (o.is_zero())
        throw ArithmeticError("division by zero in Q(sqrt " + std::to_string(n_) + ")");
    const Rational den = o.norm();
    *this *= o.conjugate();
    p_ /= den;
    q_ /= den;
    return *this;
}

int compare(const QNum& x, const QNum& y)
{
    return (x - y).sign();
}

} // namespace chaingeo
