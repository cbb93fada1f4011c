#pragma once

#include "hopfdual/diagram.hpp"
#include "hopfdual/report.hpp"

#include <memory>
#include <optional>

namespace hopfdual {

class Hopf;
using HopfPtr = std::shared_ptr<const Hopf>;

// An action/coaction pair. For side = left: rho : A ox X -> X and
// delta : X -> A ox X; for side = right: rho : X ox A -> X and
// delta : X -> X ox A.
struct Yd {
    Morphism rho;
    Morphism delta;
};

enum class Side { Left, Right };

// Where a Hopf algebra lives: the base category of exact vector spaces,
// or Yetter-Drinfel'd modules over a Hopf algebra in the base category
// (one nesting level; bosonization flattens anything deeper). The
// reversed flag selects the mirror category with inverse braiding, which
// is where the op/cop variants live.
struct Ambient {
    enum class Kind { Vect, YdOver };
    Kind kind = Kind::Vect;
    HopfPtr base;    // set when kind == YdOver
    bool reversed = false;

    static Ambient vect() { return {}; }
    static Ambient yd_over(HopfPtr b, bool rev = false) {
        return {Kind::YdOver, std::move(b), rev};
    }
    bool is_vect() const { return kind == Kind::Vect; }
};

// A Hopf algebra by structure constants: dimension, basis labels and the
// six structure tensors, together with its ambient braided context.
// self_yd carries the (left) action and coaction of the ambient base when
// the ambient is YdOver; the self-braiding is computed from it.
class Hopf {
public:
    std::string name;
    uint32_t dim = 0;
    std::vector<std::string> basis_labels;
    Morphism mu, eta, Delta, eps, S, Sinv;
    Ambient ambient;
    std::optional<Yd> self_yd;

    Space space() const { return Space{name, dim}; }
    // c_{H,H} and its inverse in the ambient context.
    std::pair<Morphism, Morphism> self_braiding() const;
};

// The braiding of the ambient category between two objects carrying
// base-module structure. For Vect ambient both structures are ignored and
// the flip is returned. Both Yd arguments must be left-sided over `base`.
std::pair<Morphism, Morphism> ambient_braiding(const Ambient& amb,
                                               const Space& x, const Yd* x_yd,
                                               const Space& y, const Yd* y_yd);

// Environment with the structure morphisms of h bound as mu[name], ...,
// plus act[name]/coact[name] and the base algebra's generators when the
// ambient is YdOver. The self-braiding is registered for (name, name).
Environment hopf_env(const Hopf& h);
// Bind another Hopf algebra's generators into an existing environment.
void bind_hopf(Environment& env, const Hopf& h);

// All of the Hopf algebra axioms in the ambient context, one check per
// displayed identity; for YdOver ambient additionally the Yetter-Drinfel'd
// axioms of self_yd and the compatibility of the structure maps with the
// base (co)action.
Report verify_hopf(const Hopf& h);

// Construct and verify; throws VerificationError when any axiom fails.
HopfPtr make_hopf(std::string name, uint32_t dim, std::vector<std::string> labels,
                  Morphism mu, Morphism eta, Morphism Delta, Morphism eps,
                  Morphism S, Morphism Sinv, Ambient ambient = Ambient::vect(),
                  std::optional<Yd> self_yd = std::nullopt);

// As make_hopf, but computes the antipode from the bialgebra data.
HopfPtr make_hopf_solve_antipode(std::string name, uint32_t dim,
                                 std::vector<std::string> labels, Morphism mu,
                                 Morphism eta, Morphism Delta, Morphism eps,
                                 Ambient ambient = Ambient::vect(),
                                 std::optional<Yd> self_yd = std::nullopt);

struct NoAntipode : std::runtime_error {
    NoAntipode() : std::runtime_error("the convolution system for the antipode is inconsistent") {}
};
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

// Solves mu (S ox id) Delta = eta eps for S as a linear system (the
// convolution inverse of the identity), then inverts it.
std::pair<Morphism, Morphism> solve_antipode(const Morphism& mu, const Morphism& eta,
                                             const Morphism& Delta, const Morphism& eps);

// (A, mu . c^-1, Delta) and (A, mu, c^-1 . Delta) in the mirror ambient.
std::pair<HopfPtr, HopfPtr> op_cop_variants(const HopfPtr& h);

// Algebra map + coalgebra map on all basis vectors.
Report verify_hopf_morphism(const Morphism& f, const Hopf& dom, const Hopf& cod);

} // namespace hopfdual
