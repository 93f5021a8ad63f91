#pragma once

// Hand-rolled random generators for property tests. Seeds are fixed so every
// run sees the same cases.

#include <array>
#include <random>

#include "chaingeo/qnum.hpp"

namespace chaingeo::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rational rational(long max_num = 60, long max_den = 24)
    {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Rational positive_rational(long max_num = 60, long max_den = 24)
    {
        return Rational(integer(1, max_num), integer(1, max_den));
    }

    /// Mostly square-free radicands, with a few perfect squares mixed in to
    /// exercise canonicalization.
    Radicand radicand()
    {
        static constexpr std::array<Radicand, 12> pool{2, 3, 5, 6, 7, 10, 11, 13, 1, 4, 9, 0};
        return pool[static_cast<std::size_t>(integer(0, pool.size() - 1))];
    }

    QNum qnum(Radicand n) { return QNum(rational(), rational(), n); }

    QNum nonzero_qnum(Radicand n)
    {
        for (;;) {
            QNum x = qnum(n);
            if (!x.is_zero())
                return x;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace chaingeo::testing
