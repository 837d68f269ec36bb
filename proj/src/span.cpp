#include "hexspan/span.hpp"

#include "hexspan/errors.hpp"
#include "hexspan/shell.hpp"

namespace hexspan {

namespace {

long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

long long nearest_int_bracket(const Rational& x)
{
    const Rational shifted = x + Rational(1, 2);
    return floor_div(shifted.numerator(), shifted.denominator());
}

Rational span_formula_argument(long long l)
{
    const Rational t = Rational(l) + Rational(4, 3);
    return Rational(3, 8) * t * t;
}

SpanCertificate span_even(long long l)
{
    if (l % 2 != 0)
        throw RangeError("l", "odd l = " + std::to_string(l) +
                                  " is out of scope: odd spans come from earlier work and no formula is implemented here");
    if (l < 8)
        throw RangeError("l", "even l = " + std::to_string(l) + " is out of scope: the closed form covers even l >= 8 only");

    SpanCertificate cert;
    cert.l = l;
    cert.p = l / 2;
    cert.clique_size = clique_size(cert.p);
    cert.extra = cert.p / 2;
    cert.span = cert.clique_size + cert.extra;
    cert.formula_value = nearest_int_bracket(span_formula_argument(l));
    cert.q = cert.p / 2;
    const long long q = cert.q;
    if (cert.p % 2 == 0) {
        cert.parity_case = "p=2q";
        cert.parity_case_value = 6 * q * q + 4 * q + 1;
    } else {
        cert.parity_case = "p=2q+1";
        cert.parity_case_value = 6 * q * q + 10 * q + 4;
    }
    return cert;
}

} // namespace hexspan
