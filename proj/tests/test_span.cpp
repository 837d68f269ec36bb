#include "oracles.hpp"

#include "hexspan/errors.hpp"
#include "hexspan/span.hpp"

#include <doctest.h>

using namespace hexspan;

TEST_CASE("nearest-integer bracket rounds halves up")
{
    CHECK(nearest_int_bracket(Rational(5, 2)) == 3);
    CHECK(nearest_int_bracket(Rational(-5, 2)) == -2);
    CHECK(nearest_int_bracket(Rational(7, 3)) == 2);
    CHECK(nearest_int_bracket(Rational(8, 3)) == 3);
    CHECK(nearest_int_bracket(Rational(4)) == 4);
    CHECK(nearest_int_bracket(Rational(-1, 3)) == 0);
}

TEST_CASE("formula argument")
{
    CHECK(span_formula_argument(8) == Rational(392, 12));
    CHECK(span_formula_argument(0) == Rational(2, 3));
}

TEST_CASE("span spot values")
{
    CHECK(span_even(8).span == 33);
    CHECK(span_even(10).span == 48);
    CHECK(span_even(12).span == 67);
    const SpanCertificate c = span_even(10);
    CHECK(c.p == 5);
    CHECK(c.clique_size == 46);
    CHECK(c.extra == 2);
    CHECK(c.parity_case == "p=2q+1");
    CHECK(c.q == 2);
    CHECK(span_even(8).parity_case == "p=2q");
}

TEST_CASE("span agrees with integer arithmetic and both parity forms")
{
    for (long long l = 8; l <= 2000; l += 2) {
        const SpanCertificate c = span_even(l);
        CAPTURE(l);
        CHECK(c.consistent());
        CHECK(c.span == oracle::span_integer(l));
        CHECK(c.span == 1 + 3 * c.p * (c.p + 1) / 2 + c.p / 2);
    }
}

TEST_CASE("span domain")
{
    CHECK_THROWS_AS(span_even(9), RangeError);
    CHECK_THROWS_AS(span_even(6), RangeError);
    CHECK_THROWS_AS(span_even(-4), RangeError);
}
