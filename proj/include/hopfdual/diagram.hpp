#pragma once

#include "hopfdual/morphism.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfdual {

// Expression language for string diagrams. Texts are read the way the
// diagrams are drawn: "f . g" applies g first (g is the lower part of
// the picture), "*" is horizontal juxtaposition.
//
//   expr   := tensor { "." tensor }
//   tensor := atom { "*" atom }
//   atom   := NAME [ "[" NAME {"," NAME} "]" ] | "(" expr ")"
//
// Comments run from '#' to end of line.
struct DiagramExpr {
    enum class Kind { Generator, Identity, Compose, Tensor };
    Kind kind;
    std::string name;                 // Generator
    std::vector<std::string> args;    // Generator space arguments
    std::string space;                // Identity
    std::shared_ptr<const DiagramExpr> upper, lower;  // Compose
    std::shared_ptr<const DiagramExpr> left, right;   // Tensor

    // filled in by typecheck
    std::optional<SpaceList> dom, cod;
};

using ExprPtr = std::shared_ptr<const DiagramExpr>;

ExprPtr parse_expr(const std::string& source);
std::string print_expr(const ExprPtr& e);

struct SyntaxError : std::runtime_error {
    int line, column;
    SyntaxError(int line, int column, const std::string& what);
};

struct TypeError : std::runtime_error {
    explicit TypeError(const std::string& what) : std::runtime_error(what) {}
};

struct LookupError : std::runtime_error {
    explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Immutable evaluation context: spaces, generator bindings and the
// braiding provider. Braidings are registered per ordered pair of space
// names and checked to be mutually inverse; unregistered pairs fall back
// to the flip of plain vector spaces.
class Environment {
public:
    void add_space(const Space& s);
    bool has_space(const std::string& name) const;
    const Space& space(const std::string& name) const;

    // key is the rendered generator name, e.g. "mu[H]" or "omega".
    void bind(const std::string& key, Morphism m);
    bool has_generator(const std::string& key) const;
    const Morphism& generator(const std::string& key) const;

    void register_braiding(const std::string& x, const std::string& y,
                           Morphism c, Morphism c_inv);
    bool has_braiding(const std::string& x, const std::string& y) const;
    // c_{X,Y} : X ox Y -> Y ox X and its inverse.
    std::pair<Morphism, Morphism> braiding(const std::string& x, const std::string& y) const;

    void set_flip_fallback(bool on) { flip_fallback_ = on; }

private:
    std::map<std::string, Space> spaces_;
    std::map<std::string, Morphism> gens_;
    std::map<std::pair<std::string, std::string>, std::pair<Morphism, Morphism>> braids_;
    bool flip_fallback_ = true;
};

// Returns a copy of the tree with every node annotated by its resolved
// domain and codomain; throws TypeError with the offending sub-diagram.
ExprPtr typecheck_expr(const ExprPtr& e, const Environment& env);

// Requires a type-checked tree (as produced by typecheck_expr).
Morphism eval_expr(const ExprPtr& typed, const Environment& env);

// Parse + typecheck + eval in one go.
Morphism eval_source(const std::string& source, const Environment& env);

struct CheckResult {
    bool equal = true;
    std::optional<Morphism::Mismatch> witness;
};

CheckResult check_equal(const std::string& lhs, const std::string& rhs,
                        const Environment& env);

} // namespace hopfdual
