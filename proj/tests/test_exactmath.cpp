#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfdual/cyclotomic.hpp"
#include "hopfdual/kernels.hpp"
#include "hopfdual/morphism.hpp"

#include <random>

using namespace hopfdual;

namespace {

// Independent integer-polynomial long division used as the oracle for the
// cyclotomic polynomials; deliberately separate from the library routine.
using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_div(Poly num, const Poly& den) {
    Poly quot(num.size() - den.size() + 1, 0);
    for (size_t s = quot.size(); s-- > 0;) {
        long long q = num[s + den.size() - 1] / den.back();
        quot[s] = q;
        for (size_t j = 0; j < den.size(); ++j) num[s + j] -= q * den[j];
    }
    for (long long c : num) REQUIRE(c == 0);
    return quot;
}

ZPoly to_zpoly(const Poly& p) {
    ZPoly z(p.size());
    for (size_t i = 0; i < p.size(); ++i) z[i] = (long)p[i];
    return z;
}

Cyc random_cyc(std::mt19937_64& rng, unsigned order) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rat> c(euler_phi(order));
    for (Rat& r : c) r = rat(num(rng), den(rng));
    return Cyc(order, std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ZPoly{-1, 1});        // x - 1
    CHECK(cyclotomic_polynomial(4) == ZPoly{1, 0, 1});      // x^2 + 1

    // Phi_12 by dividing x^12 - 1 by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6.
    Poly x12m1(13, 0);
    x12m1[0] = -1;
    x12m1[12] = 1;
    Poly prod{1};
    for (Poly f : {Poly{-1, 1}, Poly{1, 1}, Poly{1, 1, 1}, Poly{1, 0, 1}, Poly{1, -1, 1}})
        prod = poly_mul(prod, f);
    Poly phi12 = poly_div(x12m1, prod);
    CHECK(cyclotomic_polynomial(12) == to_zpoly(phi12));
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("canonicalization") {
    // zeta_4^2 = -1
    Cyc i2 = Cyc::root_of_unity(4).pow(2);
    CHECK(i2 == Cyc(Rat(-1)));
    // zeta_3 + zeta_3^2 = -1
    Cyc z3 = Cyc::root_of_unity(3);
    CHECK(z3 + z3.pow(2) == Cyc(Rat(-1)));
    // zeta_6^3 = -1, via reduction mod Phi_6 = x^2 - x + 1: the oracle
    // division gives x^3 = (x + 1)(x^2 - x + 1) - 1.
    Cyc z6cubed = Cyc(6, {Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(z6cubed == Cyc(Rat(-1)));
    // idempotent
    Cyc again(z6cubed.order(), z6cubed.coeffs());
    CHECK(again == z6cubed);
}

TEST_CASE("inverses") {
    Cyc i = Cyc::root_of_unity(4);
    CHECK(i.inv() == -i);
    CHECK(Cyc(Rat(2)).inv() == Cyc(rat(1, 2)));
    Cyc a = Cyc::one() + Cyc::root_of_unity(5);
    CHECK(a * a.inv() == Cyc::one());
    CHECK_THROWS_AS(Cyc::zero().inv(), ZeroInverse);
}

TEST_CASE("field axioms on random values, orders up to 24") {
    std::mt19937_64 rng(71);
    for (unsigned order : {2u, 3u, 4u, 6u, 8u, 12u, 15u, 24u}) {
        for (int trial = 0; trial < 20; ++trial) {
            Cyc a = random_cyc(rng, order), b = random_cyc(rng, order), c = random_cyc(rng, order);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inv() == Cyc::one());
        }
    }
}

TEST_CASE("roots of unity have exact order") {
    for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        Cyc z = Cyc::root_of_unity(n);
        CHECK(z.pow(n) == Cyc::one());
        for (unsigned k = 1; k < n; ++k) CHECK(z.pow(k) != Cyc::one());
    }
}

TEST_CASE("mixed-order arithmetic embeds into the lcm") {
    Cyc z4 = Cyc::root_of_unity(4);
    Cyc z6 = Cyc::root_of_unity(6);
    Cyc prod = z4 * z6;  // = zeta_12^(3+2)
    CHECK(prod == Cyc::root_of_unity(12, 5));
    CHECK(prod.order() == 12);
}

TEST_CASE("rref rank and kernel basics") {
    Morphism id3 = Morphism::identity({Space{"V", 3}});
    auto r = kernels::rref_kernel(id3);
    CHECK(r.rank == 3);
    CHECK(r.kernel.empty());

    Morphism m({Space{"W", 2}}, {Space{"V", 2}});
    m.set(0, 0, Cyc::one());
    m.set(0, 1, Cyc::one());
    m.set(1, 0, Cyc::one());
    m.set(1, 1, Cyc::one());
    auto r2 = kernels::rref_kernel(m);
    CHECK(r2.rank == 1);
    REQUIRE(r2.kernel.size() == 1);
    // spanned by (1, -1)
    CHECK(r2.kernel[0][0] * Cyc(Rat(-1)) == r2.kernel[0][1]);

    // 1 + q11 with q11 = -1 on a 1-dim space: the x^2 = 0 relation in degree 2
    Morphism q({Space{"M", 1}}, {Space{"M", 1}});
    q.set(0, 0, Cyc::one() + Cyc(Rat(-1)));
    auto r3 = kernels::rref_kernel(q);
    CHECK(r3.rank == 0);
    CHECK(r3.kernel.size() == 1);
}

TEST_CASE("kernel vectors are exact and rank is stable under row scrambling") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        unsigned order = trial % 2 ? 4 : 3;
        size_t nr = 5, nc = 7;
        Morphism m({Space{"R", (uint32_t)nr}}, {Space{"C", (uint32_t)nc}});
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j)
                if (rng() % 3 == 0)
                    m.set(i, j, Cyc(Rat(val(rng))) * Cyc::root_of_unity(order, (long)(rng() % order)));
        auto r = kernels::rref_kernel(m);
        CHECK(r.rank + r.kernel.size() == nc);
        for (const auto& v : r.kernel) {
            for (size_t i = 0; i < nr; ++i) {
                Cyc acc;
                for (size_t j = 0; j < nc; ++j) acc += m.entry(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
        // permute and rescale rows; rank must not move
        Morphism p({Space{"R", (uint32_t)nr}}, {Space{"C", (uint32_t)nc}});
        std::vector<size_t> perm(nr);
        for (size_t i = 0; i < nr; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (size_t i = 0; i < nr; ++i) {
            Cyc scale = Cyc(Rat(1 + (int)(rng() % 3))) * Cyc::root_of_unity(order, (long)(rng() % order));
            for (size_t j = 0; j < nc; ++j) {
                Cyc v = m.entry(perm[i], j);
                if (!v.is_zero()) p.set(i, j, v * scale);
            }
        }
        CHECK(kernels::rref_kernel(p).rank == r.rank);
    }
}

TEST_CASE("solve_in_span") {
    std::vector<Cyc> e1{Cyc::one(), Cyc::zero()};
    std::vector<Cyc> e1e2{Cyc::one(), Cyc::one()};
    auto c = kernels::solve_in_span({e1}, e1);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Cyc::one());
    CHECK_FALSE(kernels::solve_in_span({e1e2}, e1).has_value());
}

TEST_CASE("kron") {
    Morphism id2 = Morphism::identity({Space{"A", 2}});
    Morphism id3 = Morphism::identity({Space{"B", 3}});
    CHECK(id2.tensor(id3) == Morphism::identity({Space{"A", 2}, Space{"B", 3}}));

    // extra 1-dim factor acts as the strict unit
    Morphism f({Space{"A", 2}}, {Space{"A", 2}});
    f.set(0, 1, Cyc::root_of_unity(4));
    f.set(1, 0, Cyc(Rat(3)));
    Morphism one = Morphism::identity({Space{"I", 1}});
    CHECK(f.tensor(one) == f);

    // flip(2,2) tensor id2 sends e1*e2*e1 to e2*e1*e1
    Space v{"V", 2};
    Morphism fl = Morphism::flip(v, v).tensor(Morphism::identity({v}));
    // e1 = index 0, e2 = index 1; e1*e2*e1 -> column 0*4 + 1*2 + 0 = 2
    std::vector<Cyc> col = fl.column_vector(2);
    // expected e2*e1*e1 -> row 1*4 + 0*2 + 0 = 4
    for (size_t i = 0; i < col.size(); ++i)
        CHECK(col[i] == (i == 4 ? Cyc::one() : Cyc::zero()));
}

TEST_CASE("kron functoriality on random pairs") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> val(-2, 2);
    auto rand_m = [&](uint32_t r, uint32_t c) {
        Morphism m({Space{"R", r}}, {Space{"C", c}});
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t j = 0; j < c; ++j)
                if (rng() % 2) m.set(i, j, Cyc(Rat(val(rng))));
        return m;
    };
    for (int t = 0; t < 8; ++t) {
        Morphism f = rand_m(2, 3), fp = rand_m(3, 2);
        Morphism g = rand_m(3, 2), gp = rand_m(2, 3);
        Morphism lhs = f.tensor(g).compose(fp.tensor(gp));
        Morphism rhs = f.compose(fp).tensor(g.compose(gp));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dense fallback kicks in on heavy fill") {
    Morphism m({Space{"R", 8}}, {Space{"C", 8}});
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) m.set(i, j, Cyc(Rat((int)(i + j + 1))));
    m.finalize();
    CHECK(m.is_dense());
    CHECK(m.fill_ratio() == 1.0);
    Morphism sparse({Space{"R", 8}}, {Space{"C", 8}});
    sparse.set(0, 0, Cyc::one());
    sparse.finalize();
    CHECK_FALSE(sparse.is_dense());
    // arithmetic must agree across storages
    CHECK(m.compose(Morphism::identity({Space{"C", 8}})) == m);
}
