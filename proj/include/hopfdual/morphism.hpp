#pragma once

#include "hopfdual/cyclotomic.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopfdual {

// One tensor factor of a (co)domain: a named space with its dimension.
struct Space {
    std::string name;
    uint32_t dim = 0;
};

inline bool operator==(const Space& a, const Space& b) {
    return a.name == b.name && a.dim == b.dim;
}
inline bool operator!=(const Space& a, const Space& b) { return !(a == b); }

using SpaceList = std::vector<Space>;

size_t total_dim(const SpaceList& factors);  // empty list = unit object, dim 1
bool same_dims(const SpaceList& a, const SpaceList& b);
std::string space_list_to_string(const SpaceList& s);

// An exact matrix with a factored tensor domain and codomain over Q(zeta).
// Rows are indexed by the codomain, columns by the domain; the tensor
// index order is row-major with the leftmost factor most significant.
// Stored as sorted sparse rows with a dense fallback once fill-in
// exceeds one half (RREF intermediates are where that matters).
class Morphism {
public:
    Morphism() = default;
    Morphism(SpaceList codomain, SpaceList domain);  // zero morphism

    static Morphism identity(const SpaceList& sp);
    static Morphism scalar(const Cyc& value);  // unit -> unit
    // The flip x (tensor) y -> y (tensor) x; the braiding of plain vector spaces.
    static Morphism flip(const Space& x, const Space& y);

    const SpaceList& codomain() const { return cod_; }
    const SpaceList& domain() const { return dom_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool is_dense() const { return dense_; }
    double fill_ratio() const;

    void set(size_t r, size_t c, Cyc v);   // overwrite
    void add(size_t r, size_t c, const Cyc& v);
    Cyc entry(size_t r, size_t c) const;   // zero when absent

    void for_each(const std::function<void(size_t, size_t, const Cyc&)>& fn) const;
    void for_row(size_t r, const std::function<void(size_t, const Cyc&)>& fn) const;

    // Re-label the factor lists without touching entries; total dimensions
    // must match. Used when transporting structure maps between spaces
    // that are identified by construction.
    Morphism retagged(SpaceList codomain, SpaceList domain) const;

    Morphism operator+(const Morphism& o) const;
    Morphism operator-(const Morphism& o) const;
    Morphism scaled(const Cyc& s) const;

    // this after first: (this . first)(v) = this(first(v)).
    Morphism compose(const Morphism& first) const;
    Morphism tensor(const Morphism& o) const;  // Kronecker product

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Morphism& o) const;  // dims + entries, names ignored
    bool operator!=(const Morphism& o) const { return !(*this == o); }

    // First differing entry against another morphism of the same shape.
    struct Mismatch {
        size_t row = 0, col = 0;
        Cyc lhs, rhs;
    };
    std::optional<Mismatch> first_difference(const Morphism& o) const;

    Morphism column(size_t c) const;  // as a morphism unit -> codomain
    std::vector<Cyc> column_vector(size_t c) const;

    size_t nonzero_count() const;

    // Storage control. Finalize normalizes (drops zeros, sorts, picks
    // sparse or dense); operations call it on their results.
    void finalize();

    std::string to_string() const;  // diagnostics

private:
    SpaceList cod_, dom_;
    size_t rows_ = 1, cols_ = 1;
    bool dense_ = false;
    // sparse: rows of (col, value) sorted by col; dense: row-major values
    std::vector<std::vector<std::pair<uint32_t, Cyc>>> sp_;
    std::vector<Cyc> dn_;

    void ensure_shape();
    friend class MorphismBuilder;
};

// Accumulating builder; cheaper than repeated Morphism::add for the
// structure-constant loaders.
class MorphismBuilder {
public:
    MorphismBuilder(SpaceList codomain, SpaceList domain);
    void add(size_t r, size_t c, const Cyc& v);
    Morphism take();

private:
    Morphism m_;
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hopfdual
