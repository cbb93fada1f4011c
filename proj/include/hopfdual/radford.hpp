#pragma once

#include "hopfdual/yd.hpp"

namespace hopfdual {

// A Hopf algebra inside the category of Yetter-Drinfel'd modules over
// `over`: the underlying structure tensors live on `space`, yd carries
// the (left) A-structures, ambient_yd the base structures when `over`
// itself sits in YdOver. The braided bialgebra axioms use the YD
// self-braiding; flattened() materializes the object for verification,
// bosonizing one level when needed to stay within a single YdOver.
struct BraidedHopf {
    std::string name;
    Space space;
    std::vector<std::string> labels;
    Morphism mu, eta, Delta, eps, S, Sinv;
    HopfPtr over;
    Yd yd;
    std::optional<Yd> ambient_yd;

    YdModule as_module() const;
    // The ambient the bosonization K x| A lives in (= over's ambient).
    const Ambient& outer_ambient() const { return over->ambient; }
    // Hopf object with ambient YdOver(A), or YdOver(A x| G) after
    // flattening when A lives in YdOver(G). Verifies.
    HopfPtr flattened() const;
};

struct BiproductPresentation {
    BraidedHopf k;
    HopfPtr result;        // K x| A in the outer ambient
    Morphism pi_prime;     // eps_K ox id : result -> A
    Morphism injection;    // eta_K ox id : A -> result
    Morphism k_injection;  // id ox eta_A : K-space -> result
    Report report;         // antipode cross-check and morphism checks
};

// The bosonization K x| A on the space K ox A. The antipode is computed
// both from the diagram and by the convolution solver; they must agree.
BiproductPresentation biproduct(const BraidedHopf& k);

struct ClosureViolation : std::runtime_error {
    explicit ClosureViolation(const std::string& what) : std::runtime_error(what) {}
};

struct CoinvariantDecomposition {
    HopfPtr h, a;
    Morphism pi, iota;
    BraidedHopf k;
    Morphism inclusion;       // K-space -> H, the kernel basis columns
    BiproductPresentation reassembled;
    Morphism reassembly_iso;  // K ox A -> H, k ox a -> k * iota(a)
    Report report;
};

// Coinvariants K = ker(r -> r_(1) ox pi(r_(2)) - r ox 1) of a split Hopf
// projection, with the transported Hopf-in-YD structure, re-expressed in
// the kernel basis; verifies K and the reassembly isomorphism.
CoinvariantDecomposition coinvariants(HopfPtr h, HopfPtr a, const Morphism& pi,
                                      const Morphism& iota);

// A Yetter-Drinfel'd module over K x| A, nested into its A-level module
// structure plus the K-structures inside YD_A.
struct NestedYd {
    YdModule base;     // over A
    Morphism k_rho;    // K ox X -> X
    Morphism k_delta;  // X -> K ox X
};

NestedYd yd_nest(const BiproductPresentation& bp, const YdModule& m);
YdModule yd_unnest(const BiproductPresentation& bp, const NestedYd& n);
// All the layered verifications of a nested module (used by both).
Report verify_nested(const BiproductPresentation& bp, const NestedYd& n);

} // namespace hopfdual
