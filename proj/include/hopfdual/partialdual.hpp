#pragma once

#include "hopfdual/radford.hpp"

namespace hopfdual {

struct NotAProjection : std::runtime_error {
    explicit NotAProjection(const std::string& w) : std::runtime_error("pi is not a Hopf projection: " + w) {}
};
struct NotASection : std::runtime_error {
    explicit NotASection(const std::string& w) : std::runtime_error("iota is not a Hopf section: " + w) {}
};
struct DegeneratePairing : std::runtime_error {
    DegeneratePairing() : std::runtime_error("the pairing of the datum is degenerate") {}
};

// (H --pi--> A, B, omega): a split Hopf projection together with a
// non-degenerately paired partner B.
struct PartialDualizationDatum {
    HopfPtr h, a, b;
    Morphism pi, iota;
    Pairing omega;  // carries the inverse copairing
};

PartialDualizationDatum make_datum(HopfPtr h, HopfPtr a, HopfPtr b, Morphism pi,
                                   Morphism iota, Pairing omega);

struct PartialDualResult {
    HopfPtr rh;                    // L x| B
    CoinvariantDecomposition k;    // step 1
    BraidedHopf l;                 // step 2: Omega(K) with transported tensors
    BiproductPresentation bp;      // step 3
    std::vector<std::string> provenance;  // which construction produced each tensor
};

// K = coinvariants, L = Omega(K) with mu_L = mu_K Omega_2 and
// Delta_L = Omega_2^{-1} Delta_K, r(H) = L x| B.
PartialDualResult partial_dualize(const PartialDualizationDatum& d);

enum class ReverseSign { Plus, Minus };

// (r(H) --pi'--> B, A, omega^{+/-}).
PartialDualizationDatum reverse_datum(const PartialDualizationDatum& d,
                                      const PartialDualResult& result, ReverseSign sign);

struct InvolutivityResult {
    PartialDualResult second;  // r_{A^-}(r_A(H))
    Morphism iso;              // theta_K ox id_A followed by the reassembly
    Report report;
};

// Computes the two-fold dualization along the minus datum and verifies
// that theta_K ox id_A is an exact Hopf isomorphism onto H.
InvolutivityResult involutivity_check(const PartialDualizationDatum& d);

// YD module over H to YD module over r(H), through the nest / Omega /
// unnest pipeline; preserves the underlying space.
YdModule transport_yd_module(const PartialDualizationDatum& d,
                             const PartialDualResult& result, const YdModule& m);

} // namespace hopfdual
