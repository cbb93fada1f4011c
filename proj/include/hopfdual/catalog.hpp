#pragma once

#include "hopfdual/partialdual.hpp"

namespace hopfdual::catalog {

struct BadParams : std::runtime_error {
    explicit BadParams(const std::string& what) : std::runtime_error(what) {}
};

// A finite group by its multiplication table. Group axioms are verified
// on construction.
struct GroupPresentation {
    uint32_t order = 0;
    std::vector<std::vector<uint32_t>> table;  // table[i][j] = index of g_i g_j
    uint32_t identity = 0;
    std::vector<std::string> labels;

    uint32_t inverse(uint32_t i) const;
};

GroupPresentation make_group(std::vector<std::vector<uint32_t>> table,
                             std::vector<std::string> labels = {});
GroupPresentation cyclic_group(unsigned n);
// N x| Q with Q acting by automorphisms; element (n, q) has index n*|Q|+q.
GroupPresentation semidirect_product(const GroupPresentation& n, const GroupPresentation& q,
                                     const std::vector<std::vector<uint32_t>>& action);
GroupPresentation symmetric_group_s3();  // as Z3 x| Z2

HopfPtr unit_hopf();
HopfPtr group_algebra(const GroupPresentation& g, const std::string& name);
// Functions on the group with the dual basis e_g.
HopfPtr function_algebra(const GroupPresentation& g, const std::string& name);

// The Taft algebra T_zeta (dimension d^2) with zeta = zeta_d^zeta_power.
HopfPtr taft(unsigned d, unsigned zeta_power = 1);
// The central extension: g^N = 1, x^d = 0, gx = zeta xg, Delta x = g ox x + x ox 1
// with q = zeta_N and zeta = q^c.
HopfPtr hat_taft(unsigned N, unsigned d, unsigned c);
// Same algebra with gx = q xg and Delta x = g^c ox x + x ox 1.
HopfPtr check_taft(unsigned N, unsigned d, unsigned c);

// omega(g^n, g^m) = q^{nm} on C[Z_N] ox C[Z_N] with q = zeta_N^qpow,
// inverse copairing included.
Pairing cyclic_pairing(unsigned N, unsigned q_power = 1);
Pairing cyclic_pairing(HopfPtr a, HopfPtr b, unsigned N, unsigned q_power);
// Canonical evaluation C[Q] ox C^Q (abelian Q).
Pairing evaluation_pairing(HopfPtr group_alg, HopfPtr function_alg,
                           const GroupPresentation& g);

// The Prop. 5.5 datum: hat_taft -> C[Z_N] with the cyclic pairing.
PartialDualizationDatum taft_datum(unsigned N, unsigned d, unsigned c);
// The group-algebra datum: C[S3] -> C[Z2] with the evaluation pairing.
PartialDualizationDatum s3_datum();
// pi = id (complete dualization) on C[Z_N].
PartialDualizationDatum complete_datum_cyclic(unsigned N);
// A = unit (trivial dualization) for an arbitrary H.
PartialDualizationDatum trivial_datum(HopfPtr h);

} // namespace hopfdual::catalog
