#pragma once

#include <gmpxx.h>

#include <string>

namespace lpont {

using Rational = mpq_class;

// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace lpont
