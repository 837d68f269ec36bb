#pragma once

// Closed-form span arithmetic for even l, in exact rationals.

#include <boost/rational.hpp>

#include <string>

namespace hexspan {

using Rational = boost::rational<long long>;

// [x]: the unique integer n with x - 1/2 < n <= x + 1/2, i.e. floor(x + 1/2).
long long nearest_int_bracket(const Rational& x);

// 3/8 * (l + 4/3)^2
Rational span_formula_argument(long long l);

struct SpanCertificate {
    long long l = 0;
    long long p = 0;
    long long clique_size = 0;
    long long extra = 0;          // floor(p / 2)
    long long span = 0;           // clique_size + extra
    long long formula_value = 0;  // [3/8 (l + 4/3)^2]
    std::string parity_case;      // "p=2q" or "p=2q+1"
    long long q = 0;
    long long parity_case_value = 0;  // 6q^2+4q+1 or 6q^2+10q+4

    bool consistent() const { return span == formula_value && span == parity_case_value; }
};

// Defined for even l >= 8. Odd l and even l <= 6 throw RangeError.
SpanCertificate span_even(long long l);

} // namespace hexspan
