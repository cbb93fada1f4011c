#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hopfdual {

// Exact rational scalar. GMP keeps the canonical form we rely on
// (positive denominator, gcd(num, den) = 1, zero as 0/1).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "m", "-m", "m/n". Throws std::invalid_argument on anything else.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

} // namespace hopfdual
