#pragma once

#include "hopfdual/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace hopfdual {

// Integer polynomials, dense, index = degree. Used for the cyclotomic
// polynomials Phi_N and nothing else.
using ZPoly = std::vector<mpz_class>;

// Phi_N, computed by exact division of x^N - 1 by the Phi_d for proper
// divisors d | N. Cached per order.
const ZPoly& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

// An element of Q(zeta_N), stored as the canonical residue of degree
// < phi(N) modulo Phi_N. coeffs()[k] is the coefficient of zeta_N^k.
// Arithmetic between different orders embeds both into lcm(N, M) via
// zeta_M -> zeta_L^(L/M).
class Cyc {
public:
    Cyc() : order_(1), c_(1) {}                       // zero of order 1
    explicit Cyc(const Rat& r) : order_(1), c_{r} {}  // rational scalar
    Cyc(unsigned order, std::vector<Rat> raw);        // reduces mod Phi_N

    static Cyc zero() { return Cyc(); }
    static Cyc one() { return Cyc(Rat(1)); }
    // zeta_N^k
    static Cyc root_of_unity(unsigned order, long k = 1);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;  // no zeta part after reduction
    // Only valid when is_rational(); constant coefficient.
    const Rat& rational_part() const { return c_[0]; }

    Cyc embedded(unsigned target_order) const;  // order must divide target

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }

    // Multiplicative inverse via the extended Euclidean algorithm on the
    // representative polynomial and Phi_N. Throws ZeroInverse on zero.
    Cyc inv() const;
    Cyc pow(long e) const;  // negative exponents go through inv()

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    std::string to_string() const;  // human-readable, for diagnostics

private:
    unsigned order_;
    std::vector<Rat> c_;  // size euler_phi(order_)

    void reduce_raw(std::vector<Rat> raw);
};

std::ostream& operator<<(std::ostream& os, const Cyc& c);

struct ZeroInverse : std::runtime_error {
    ZeroInverse() : std::runtime_error("inverse of zero in Q(zeta_N)") {}
};

} // namespace hopfdual
