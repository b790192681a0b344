#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace stringcone {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int rat_num(const Rat& q) { return Int(numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(denominator(q)); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int r = n / d;
    if (n % d != 0 && n < 0) --r;
    return r;
}

// Smallest integer >= q.
inline Int rat_ceil(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int r = n / d;
    if (n % d != 0 && n > 0) ++r;
    return r;
}

// "p/q" for proper fractions, plain integer string otherwise.
inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

using Vec = std::vector<Rat>;

}  // namespace stringcone
