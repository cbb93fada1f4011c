#pragma once

#include "hopfdual/morphism.hpp"

#include <optional>
#include <vector>

namespace hopfdual {

// Exact linear-algebra kernels. The hot inner loops (row products and
// elimination updates) are OpenMP-parallel; tests hold them against the
// serial reference implementations in kernels_serial.hpp.
namespace kernels {

// a after b, entries only; the caller re-tags factor lists.
Morphism mat_mul(const Morphism& a, const Morphism& b);
Morphism kron(const Morphism& a, const Morphism& b);

struct RrefResult {
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    // Exact kernel basis, one column vector per free column, in free-column
    // order with a 1 at the free coordinate.
    std::vector<std::vector<Cyc>> kernel;
};

// Fraction-free row reduction (pivot-row cross-multiplication with content
// removal per row, which keeps the coefficients integral the way the
// Bareiss scheme does after clearing rational denominators).
RrefResult rref_kernel(const Morphism& m);

// Solve a * x = rhs for each column of rhs; nullopt when inconsistent.
// Free variables are set to zero.
std::optional<Morphism> solve(const Morphism& a, const Morphism& rhs);

std::optional<Morphism> inverse(const Morphism& m);

// Exact coordinates of target in the span of basis columns, or nullopt.
// basis columns are required to be linearly independent.
std::optional<std::vector<Cyc>> solve_in_span(const std::vector<std::vector<Cyc>>& basis,
                                              const std::vector<Cyc>& target);

} // namespace kernels

// Serial reference implementations, kept for testing and benchmarks.
namespace reference {

Morphism mat_mul_serial(const Morphism& a, const Morphism& b);
// Plain rational Gauss-Jordan without the fraction-free scheme.
kernels::RrefResult rref_kernel_serial(const Morphism& m);

} // namespace reference

} // namespace hopfdual
