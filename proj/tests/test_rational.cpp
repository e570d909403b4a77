#include <doctest.h>

#include "hyperk/rational.hpp"

using hyperk::BigInt;
using hyperk::Rational;

TEST_CASE("rational is always reduced with positive denominator")
{
    const Rational r(192, 105);
    CHECK(r.num() == 64);
    CHECK(r.den() == 35);

    const Rational neg(3, -6);
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 2);
    CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("floor, ceil and fractional part")
{
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(7, 2).frac() == Rational(1, 2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK(Rational(4).frac().is_zero());
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("arithmetic and ordering")
{
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 4) == Rational(1, 4));
    CHECK(Rational(1, 3) / Rational(2) == Rational(1, 6));
    CHECK(Rational(2, 3) > Rational(3, 5));
    CHECK(-Rational(2, 3) < Rational(0));
    CHECK(Rational(5, 2).str() == "5/2");
    CHECK(Rational(3).str() == "3/1");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("big values survive without overflow")
{
    Rational acc(1);
    for (int i = 1; i <= 40; ++i)
        acc *= Rational(2 * i + 1, 2 * i + 3);
    CHECK(acc == Rational(3, 83));
    CHECK(!hyperk::to_int64(hyperk::binomial(200, 100)).has_value());
    CHECK(hyperk::to_int64(hyperk::binomial(10, 3)) == 120);
}
