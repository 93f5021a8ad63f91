#include "chaingeo/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace chaingeo {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den) : v_(num, den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(n, d);
}

std::string Rational::to_string() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return to_fraction_string();
}

std::string Rational::to_fraction_string() const
{
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<Rational> Rational::sqrt() const
{
    if (sign() < 0)
        return std::nullopt;
    // Reduced form: p/q is a square iff p and q both are.
    auto n = exact_isqrt(v_.get_num());
    if (!n)
        return std::nullopt;
    auto d = exact_isqrt(v_.get_den());
    if (!d)
        return std::nullopt;
    return Rational(*n, *d);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::optional<mpz_class> exact_isqrt(const mpz_class& v)
{
    if (sgn(v) < 0 || !mpz_perfect_square_p(v.get_mpz_t()))
        return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

} // namespace chaingeo
