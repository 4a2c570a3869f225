#pragma once

// Exact scalar arithmetic used throughout the library. Integers and
// rationals are GMP-backed; rationals are always canonical (lowest terms,
// positive denominator, zero is 0/1), so equality is value equality.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace midcube {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Construct num/den in canonical form. The two-Integer constructor of
// mpq_rational canonicalizes; plain int pairs with a negative denominator
// do not convert safely, hence this helper is the only sanctioned spelling.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(std::move(num), std::move(den));
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline Integer to_integer(const Rational& r) {
    if (!is_integral(r)) throw std::domain_error("rational " + r.str() + " is not an integer");
    return numerator(r);
}

// Serialized form: "num/den", "/den" omitted when den == 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    Integer num{std::string(s.substr(0, slash))};
    Integer den{std::string(s.substr(slash + 1))};
    return make_rational(std::move(num), std::move(den));
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact at every step
    }
    return b;
}

}  // namespace midcube
