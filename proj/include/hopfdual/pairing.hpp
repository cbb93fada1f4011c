#pragma once

#include "hopfdual/hopf.hpp"

namespace hopfdual {

// A Hopf pairing omega : A ox B -> 1, optionally with the inverse
// copairing omega' : 1 -> B ox A when non-degenerate.
struct Pairing {
    HopfPtr a, b;
    Morphism omega;                        // shape 1 x (dim A * dim B)
    std::optional<Morphism> omega_prime;   // shape (dim B * dim A) x 1

    Morphism matrix() const;  // dim A x dim B matrix W with W[i][j] = omega(e_i, e_j)
};

struct Degenerate : std::runtime_error {
    Degenerate() : std::runtime_error("the Hopf pairing is degenerate") {}
};

Pairing make_pairing(HopfPtr a, HopfPtr b, Morphism omega);  // verifies

// The four pairing axioms, antipode compatibility, and when the inverse
// copairing is present also the copairing axioms and both inverse laws.
Report verify_pairing(const Pairing& p);

// Computes omega'(1) = sum_{i,j} (W^-1)_{ji} b_j ox a_i; throws Degenerate.
Pairing invert_pairing(Pairing p);

// omega+ = omega . c_{B,A} . (S_B ox S_A) and
// omega- = omega . c^-1_{A,B} . (S^-1_B ox S^-1_A), both B ox A -> 1,
// with their inverse copairings (S^-1 ox S^-1) c^-1 omega' resp.
// (S ox S) c omega'. Requires omega_prime.
std::pair<Pairing, Pairing> pairing_variants(const Pairing& p);

// comodule (X, delta) over p.b turned into a module over p.a^cop:
// rho = (omega ox id_X) . (id_A ox delta). The inverse functor,
// delta = (id_B ox rho) . (omega' ox id_X), recovers the coaction.
Morphism dualize_comodule(const Pairing& p, const Space& x, const Morphism& delta);
Morphism dualize_comodule_inverse(const Pairing& p, const Space& x, const Morphism& rho);

} // namespace hopfdual
