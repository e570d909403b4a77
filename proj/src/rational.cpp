#include "hyperk/rational.hpp"

#include <stdexcept>

namespace hyperk {

namespace {

mpz_class from_i64(std::int64_t v)
{
    // mpz_class has no portable int64 constructor on every platform.
    return mpz_class(std::to_string(v));
}

} // namespace

Rational::Rational(std::int64_t value)
    : value_(from_i64(value))
{}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(from_i64(num), from_i64(den))
{}

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v)
    : value_(std::move(v))
{
    value_.canonicalize();
}

BigInt Rational::floor() const
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

BigInt Rational::ceil() const
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const
{
    return *this - Rational(floor(), 1);
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o)
{
    value_ += o.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    value_ -= o.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    value_ *= o.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::optional<std::int64_t> to_int64(const BigInt &v)
{
    static const BigInt lo(std::to_string(INT64_MIN));
    static const BigInt hi(std::to_string(INT64_MAX));
    if (v < lo || v > hi)
        return std::nullopt;
    return std::stoll(v.get_str());
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace hyperk
