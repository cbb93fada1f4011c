#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfdual/kernels.hpp"

#include <random>

using namespace hopfdual;

namespace {

Morphism random_matrix(std::mt19937_64& rng, uint32_t r, uint32_t c, unsigned order,
                       int density_pct) {
    Morphism m({Space{"R", r}}, {Space{"C", c}});
    std::uniform_int_distribution<int> val(-5, 5);
    for (uint32_t i = 0; i < r; ++i)
        for (uint32_t j = 0; j < c; ++j)
            if ((int)(rng() % 100) < density_pct) {
                Cyc v = Cyc(rat(val(rng), 1 + (int)(rng() % 2))) *
                        Cyc::root_of_unity(order, (long)(rng() % order));
                m.set(i, j, v);
            }
    m.finalize();
    return m;
}

} // namespace

TEST_CASE("parallel mat_mul matches the serial reference") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 6; ++t) {
        Morphism a = random_matrix(rng, 17, 23, 6, 40);
        Morphism b = random_matrix(rng, 23, 11, 6, 40);
        CHECK(kernels::mat_mul(a, b) == reference::mat_mul_serial(a, b));
    }
    // a shape crossing the parallel cutoff
    Morphism a = random_matrix(rng, 80, 90, 4, 20);
    Morphism b = random_matrix(rng, 90, 70, 4, 20);
    CHECK(kernels::mat_mul(a, b) == reference::mat_mul_serial(a, b));
}

TEST_CASE("fraction-free rref matches the plain Gauss-Jordan reference") {
    std::mt19937_64 rng(555);
    for (int t = 0; t < 8; ++t) {
        unsigned order = (t % 3 == 0) ? 1 : (t % 3 == 1 ? 4 : 12);
        Morphism m = random_matrix(rng, 12, 15, order, 35);
        auto fast = kernels::rref_kernel(m);
        auto slow = reference::rref_kernel_serial(m);
        CHECK(fast.rank == slow.rank);
        CHECK(fast.pivot_cols == slow.pivot_cols);
        REQUIRE(fast.kernel.size() == slow.kernel.size());
        for (size_t k = 0; k < fast.kernel.size(); ++k)
            for (size_t i = 0; i < fast.kernel[k].size(); ++i)
                CHECK(fast.kernel[k][i] == slow.kernel[k][i]);
    }
}

TEST_CASE("rref on a rank-deficient stacked matrix") {
    std::mt19937_64 rng(7);
    Morphism a = random_matrix(rng, 6, 10, 4, 50);
    // duplicate rows with scalar multiples: rank must stay that of a
    Morphism m({Space{"R", 12}}, {Space{"C", 10}});
    a.for_each([&](size_t i, size_t j, const Cyc& v) {
        m.set(i, j, v);
        m.set(i + 6, j, v * Cyc(Rat(3)));
    });
    auto fast = kernels::rref_kernel(m);
    auto base = kernels::rref_kernel(a);
    CHECK(fast.rank == base.rank);
}

TEST_CASE("solve and inverse") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 6; ++t) {
        Morphism a = random_matrix(rng, 8, 8, 4, 60);
        auto inv = kernels::inverse(a);
        auto rr = kernels::rref_kernel(a);
        if (rr.rank < 8) {
            CHECK_FALSE(inv.has_value());
            continue;
        }
        REQUIRE(inv.has_value());
        CHECK(kernels::mat_mul(a, *inv).is_identity());
        CHECK(kernels::mat_mul(*inv, a).is_identity());
    }
    // inconsistent system
    Morphism a({Space{"R", 2}}, {Space{"C", 1}});
    a.set(0, 0, Cyc::one());
    Morphism rhs({Space{"R", 2}}, {Space{"N", 1}});
    rhs.set(1, 0, Cyc::one());
    CHECK_FALSE(kernels::solve(a, rhs).has_value());
}
