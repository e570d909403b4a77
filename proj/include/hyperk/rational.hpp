#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace hyperk {

using BigInt = mpz_class;

/// Exact fraction, always in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t value);
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt &num, const BigInt &den);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_negative() const { return sgn(value_) < 0; }
    bool is_zero() const { return sgn(value_) == 0; }

    BigInt floor() const;
    BigInt ceil() const;
    /// x - floor(x), in [0, 1).
    Rational frac() const;

    double to_double() const { return value_.get_d(); }
    /// "num/den"; integers render as "num/1".
    std::string str() const;

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v);
    mpq_class value_{0};
};

/// Value of a big integer as int64 when it fits.
std::optional<std::int64_t> to_int64(const BigInt &v);

BigInt binomial(unsigned n, unsigned k);

} // namespace hyperk
