#include "hopfdual/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hopfdual::catalog {

uint32_t GroupPresentation::inverse(uint32_t i) const {
    for (uint32_t j = 0; j < order; ++j)
        if (table[i][j] == identity) return j;
    throw BadParams("element without inverse");
}

GroupPresentation make_group(std::vector<std::vector<uint32_t>> table,
                             std::vector<std::string> labels) {
    GroupPresentation g;
    g.order = (uint32_t)table.size();
    g.table = std::move(table);
    for (const auto& row : g.table)
        if (row.size() != g.order) throw BadParams("multiplication table is not square");
    // identity
    bool found = false;
    for (uint32_t e = 0; e < g.order && !found; ++e) {
        bool ok = true;
        for (uint32_t i = 0; i < g.order; ++i)
            if (g.table[e][i] != i || g.table[i][e] != i) { ok = false; break; }
        if (ok) { g.identity = e; found = true; }
    }
    if (!found) throw BadParams("no identity element");
    for (uint32_t i = 0; i < g.order; ++i)
        for (uint32_t j = 0; j < g.order; ++j)
            for (uint32_t k = 0; k < g.order; ++k)
                if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
                    throw BadParams("multiplication table is not associative");
    for (uint32_t i = 0; i < g.order; ++i) g.inverse(i);  // throws when missing
    g.labels = std::move(labels);
    if (g.labels.empty())
        for (uint32_t i = 0; i < g.order; ++i) g.labels.push_back("g" + std::to_string(i));
    return g;
}

GroupPresentation cyclic_group(unsigned n) {
    std::vector<std::vector<uint32_t>> t(n, std::vector<uint32_t>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    std::vector<std::string> labels;
    for (unsigned i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    return make_group(std::move(t), std::move(labels));
}

GroupPresentation semidirect_product(const GroupPresentation& n, const GroupPresentation& q,
                                     const std::vector<std::vector<uint32_t>>& action) {
    // (n1, q1) (n2, q2) = (n1 * (q1 |> n2), q1 q2); index (a, b) = a*|Q| + b
    if (action.size() != q.order) throw BadParams("action table has wrong size");
    for (const auto& row : action)
        if (row.size() != n.order) throw BadParams("action table has wrong size");
    // each q acts by an automorphism of N
    for (uint32_t b = 0; b < q.order; ++b)
        for (uint32_t i = 0; i < n.order; ++i)
            for (uint32_t j = 0; j < n.order; ++j)
                if (action[b][n.table[i][j]] != n.table[action[b][i]][action[b][j]])
                    throw BadParams("the action is not by automorphisms");
    uint32_t ord = n.order * q.order;
    std::vector<std::vector<uint32_t>> t(ord, std::vector<uint32_t>(ord));
    for (uint32_t a1 = 0; a1 < n.order; ++a1)
        for (uint32_t b1 = 0; b1 < q.order; ++b1)
            for (uint32_t a2 = 0; a2 < n.order; ++a2)
                for (uint32_t b2 = 0; b2 < q.order; ++b2) {
                    uint32_t a = n.table[a1][action[b1][a2]];
                    uint32_t b = q.table[b1][b2];
                    t[a1 * q.order + b1][a2 * q.order + b2] = a * q.order + b;
                }
    std::vector<std::string> labels;
    for (uint32_t a = 0; a < n.order; ++a)
        for (uint32_t b = 0; b < q.order; ++b)
            labels.push_back(n.labels[a] + "." + q.labels[b]);
    return make_group(std::move(t), std::move(labels));
}

GroupPresentation symmetric_group_s3() {
    GroupPresentation z3 = cyclic_group(3);
    GroupPresentation z2 = cyclic_group(2);
    // the nontrivial element of Z2 inverts Z3
    std::vector<std::vector<uint32_t>> action{{0, 1, 2}, {0, 2, 1}};
    return semidirect_product(z3, z2, action);
}

HopfPtr unit_hopf() {
    Morphism one = Morphism::scalar(Cyc::one());
    return make_hopf("unit", 1, {"1"}, one.retagged({Space{"unit", 1}}, {Space{"unit", 1}, Space{"unit", 1}}),
                     one.retagged({Space{"unit", 1}}, {}),
                     one.retagged({Space{"unit", 1}, Space{"unit", 1}}, {Space{"unit", 1}}),
                     one.retagged({}, {Space{"unit", 1}}),
                     one.retagged({Space{"unit", 1}}, {Space{"unit", 1}}),
                     one.retagged({Space{"unit", 1}}, {Space{"unit", 1}}));
}

HopfPtr group_algebra(const GroupPresentation& g, const std::string& name) {
    uint32_t d = g.order;
    Space s{name, d};
    MorphismBuilder mu({s}, {s, s});
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) mu.add(g.table[i][j], (size_t)i * d + j, Cyc::one());
    MorphismBuilder eta({s}, {});
    eta.add(g.identity, 0, Cyc::one());
    MorphismBuilder Delta({s, s}, {s});
    for (uint32_t i = 0; i < d; ++i) Delta.add((size_t)i * d + i, i, Cyc::one());
    MorphismBuilder eps({}, {s});
    for (uint32_t i = 0; i < d; ++i) eps.add(0, i, Cyc::one());
    MorphismBuilder S({s}, {s});
    MorphismBuilder Sinv({s}, {s});
    for (uint32_t i = 0; i < d; ++i) {
        S.add(g.inverse(i), i, Cyc::one());
        Sinv.add(g.inverse(i), i, Cyc::one());
    }
    return make_hopf(name, d, g.labels, mu.take(), eta.take(), Delta.take(), eps.take(),
                     S.take(), Sinv.take());
}

HopfPtr function_algebra(const GroupPresentation& g, const std::string& name) {
    uint32_t d = g.order;
    Space s{name, d};
    MorphismBuilder mu({s}, {s, s});
    for (uint32_t i = 0; i < d; ++i) mu.add(i, (size_t)i * d + i, Cyc::one());
    MorphismBuilder eta({s}, {});
    for (uint32_t i = 0; i < d; ++i) eta.add(i, 0, Cyc::one());
    MorphismBuilder Delta({s, s}, {s});
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) Delta.add((size_t)i * d + j, g.table[i][j], Cyc::one());
    MorphismBuilder eps({}, {s});
    eps.add(0, g.identity, Cyc::one());
    MorphismBuilder S({s}, {s});
    for (uint32_t i = 0; i < d; ++i) S.add(g.inverse(i), i, Cyc::one());
    Morphism Sm = S.take();
    std::vector<std::string> labels;
    for (uint32_t i = 0; i < d; ++i) labels.push_back("e_" + g.labels[i]);
    return make_hopf(name, d, labels, mu.take(), eta.take(), Delta.take(), eps.take(), Sm, Sm);
}

namespace {

// column-indexed product access for extending coproducts multiplicatively
struct AlgebraOps {
    size_t dim;
    std::vector<std::vector<std::pair<uint32_t, Cyc>>> by_col;  // mu columns

    explicit AlgebraOps(const Morphism& mu) : dim(mu.rows()), by_col(mu.cols()) {
        mu.for_each([&](size_t r, size_t c, const Cyc& v) {
            by_col[c].emplace_back((uint32_t)r, v);
        });
    }

    using Vec = std::vector<std::pair<uint32_t, Cyc>>;  // sparse, sorted

    // product of two elements of H ox H using mu componentwise
    Vec mul2(const Vec& u, const Vec& v) const {
        std::map<uint32_t, Cyc> acc;
        for (const auto& [uc, uval] : u) {
            uint32_t a = uc / (uint32_t)dim, b = uc % (uint32_t)dim;
            for (const auto& [vc, vval] : v) {
                uint32_t c = vc / (uint32_t)dim, e = vc % (uint32_t)dim;
                for (const auto& [r1, m1] : by_col[(size_t)a * dim + c])
                    for (const auto& [r2, m2] : by_col[(size_t)b * dim + e]) {
                        Cyc term = uval * vval * m1 * m2;
                        if (term.is_zero()) continue;
                        acc[r1 * (uint32_t)dim + r2] += term;
                    }
            }
        }
        Vec out;
        for (auto& [k, val] : acc)
            if (!val.is_zero()) out.emplace_back(k, std::move(val));
        return out;
    }
};

struct TaftFamilyParams {
    unsigned N, d, c;
    Cyc q, zeta;
};

TaftFamilyParams taft_params(unsigned N, unsigned d, unsigned c) {
    if (N == 0 || d == 0) throw BadParams("N and d must be positive");
    if (N % d != 0) throw BadParams("d must divide N");
    unsigned cc = c % N;
    unsigned g = cc == 0 ? N : std::gcd(N, cc);
    if (N / g != d)
        throw BadParams("zeta = q^c must be a primitive d-th root: need N/gcd(N,c) = d");
    TaftFamilyParams p;
    p.N = N; p.d = d; p.c = c;
    p.q = Cyc::root_of_unity(N);
    p.zeta = p.q.pow(c);
    return p;
}

// Shared builder for hat/check Taft: algebra x^n g^m with gx = kappa xg,
// Delta(x) = g^a ox x + x ox 1, Delta(g) = g ox g.
HopfPtr taft_like(const std::string& name, unsigned N, unsigned d, const Cyc& kappa,
                  unsigned coproduct_power) {
    uint32_t dim = (uint32_t)(d * N);
    Space s{name, dim};
    auto idx = [N](unsigned n, unsigned m) { return (size_t)n * N + m; };
    MorphismBuilder mu({s}, {s, s});
    for (unsigned n1 = 0; n1 < d; ++n1)
        for (unsigned m1 = 0; m1 < N; ++m1)
            for (unsigned n2 = 0; n2 < d; ++n2)
                for (unsigned m2 = 0; m2 < N; ++m2) {
                    if (n1 + n2 >= d) continue;  // x^d = 0
                    Cyc coeff = kappa.pow((long)m1 * (long)n2);
                    mu.add(idx(n1 + n2, (m1 + m2) % N), idx(n1, m1) * dim + idx(n2, m2), coeff);
                }
    Morphism mum = mu.take();
    MorphismBuilder eta({s}, {});
    eta.add(idx(0, 0), 0, Cyc::one());
    MorphismBuilder eps({}, {s});
    for (unsigned m = 0; m < N; ++m) eps.add(0, idx(0, m), Cyc::one());

    // Delta by multiplicative extension from the generators
    AlgebraOps ops(mum);
    AlgebraOps::Vec delta_g{{(uint32_t)(idx(0, 1) * dim + idx(0, 1)), Cyc::one()}};
    AlgebraOps::Vec delta_x{
        {(uint32_t)(idx(0, coproduct_power % N) * dim + idx(1, 0)), Cyc::one()},
        {(uint32_t)(idx(1, 0) * dim + idx(0, 0)), Cyc::one()}};
    MorphismBuilder Delta({s, s}, {s});
    for (unsigned n = 0; n < d; ++n)
        for (unsigned m = 0; m < N; ++m) {
            AlgebraOps::Vec v{{(uint32_t)(idx(0, 0) * dim + idx(0, 0)), Cyc::one()}};
            for (unsigned i = 0; i < n; ++i) v = ops.mul2(v, delta_x);
            for (unsigned i = 0; i < m; ++i) v = ops.mul2(v, delta_g);
            for (const auto& [row, val] : v) Delta.add(row, idx(n, m), val);
        }
    std::vector<std::string> labels;
    for (unsigned n = 0; n < d; ++n)
        for (unsigned m = 0; m < N; ++m) {
            std::string l;
            if (n) l += n == 1 ? "x" : "x^" + std::to_string(n);
            if (m) l += (l.empty() ? "" : "*") + (m == 1 ? std::string("g") : "g^" + std::to_string(m));
            labels.push_back(l.empty() ? "1" : l);
        }
    return make_hopf_solve_antipode(name, dim, labels, mum, eta.take(), Delta.take(),
                                    eps.take());
}

} // namespace

HopfPtr hat_taft(unsigned N, unsigned d, unsigned c) {
    TaftFamilyParams p = taft_params(N, d, c);
    return taft_like("hatT_" + std::to_string(N) + "_" + std::to_string(d) + "_" + std::to_string(c),
                     N, d, p.zeta, 1);
}

HopfPtr check_taft(unsigned N, unsigned d, unsigned c) {
    TaftFamilyParams p = taft_params(N, d, c);
    return taft_like("checkT_" + std::to_string(N) + "_" + std::to_string(d) + "_" + std::to_string(c),
                     N, d, p.q, c);
}

HopfPtr taft(unsigned d, unsigned zeta_power) {
    if (std::gcd(d, zeta_power) != 1)
        throw BadParams("zeta_power must be coprime to d for a primitive root");
    Cyc zeta = Cyc::root_of_unity(d).pow(zeta_power);
    return taft_like("T_" + std::to_string(d) + "_" + std::to_string(zeta_power), d, d, zeta, 1);
}

Pairing cyclic_pairing(HopfPtr a, HopfPtr b, unsigned N, unsigned q_power) {
    if (std::gcd(N, q_power) != 1) throw BadParams("q must be a primitive N-th root");
    Cyc q = Cyc::root_of_unity(N).pow(q_power);
    MorphismBuilder om({}, {a->space(), b->space()});
    for (unsigned n = 0; n < N; ++n)
        for (unsigned m = 0; m < N; ++m)
            om.add(0, (size_t)n * N + m, q.pow((long)n * (long)m));
    Pairing p = make_pairing(std::move(a), std::move(b), om.take());
    return invert_pairing(std::move(p));
}

Pairing cyclic_pairing(unsigned N, unsigned q_power) {
    HopfPtr a = group_algebra(cyclic_group(N), "CZ" + std::to_string(N));
    HopfPtr b = group_algebra(cyclic_group(N), "CZ" + std::to_string(N) + "_dual");
    return cyclic_pairing(std::move(a), std::move(b), N, q_power);
}

Pairing evaluation_pairing(HopfPtr group_alg, HopfPtr function_alg,
                           const GroupPresentation& g) {
    MorphismBuilder om({}, {group_alg->space(), function_alg->space()});
    for (uint32_t i = 0; i < g.order; ++i) om.add(0, (size_t)i * g.order + i, Cyc::one());
    Pairing p = make_pairing(std::move(group_alg), std::move(function_alg), om.take());
    return invert_pairing(std::move(p));
}

PartialDualizationDatum taft_datum(unsigned N, unsigned d, unsigned c) {
    HopfPtr h = hat_taft(N, d, c);
    HopfPtr a = group_algebra(cyclic_group(N), "A_CZ" + std::to_string(N));
    HopfPtr b = group_algebra(cyclic_group(N), "B_CZ" + std::to_string(N));
    uint32_t dim = h->dim;
    MorphismBuilder pi({a->space()}, {h->space()});
    for (unsigned m = 0; m < N; ++m) pi.add(m, m, Cyc::one());  // x^0 g^m -> g^m
    MorphismBuilder iota({h->space()}, {a->space()});
    for (unsigned m = 0; m < N; ++m) iota.add(m, m, Cyc::one());
    (void)dim;
    Pairing om = cyclic_pairing(a, b, N, 1);
    return make_datum(h, a, b, pi.take(), iota.take(), std::move(om));
}

PartialDualizationDatum s3_datum() {
    GroupPresentation s3 = symmetric_group_s3();
    GroupPresentation z2 = cyclic_group(2);
    HopfPtr h = group_algebra(s3, "CS3");
    HopfPtr a = group_algebra(z2, "CZ2");
    HopfPtr b = function_algebra(z2, "FZ2");
    // (n, q) has index n*2 + q; pi drops the normal part
    MorphismBuilder pi({a->space()}, {h->space()});
    for (uint32_t n = 0; n < 3; ++n)
        for (uint32_t q = 0; q < 2; ++q) pi.add(q, (size_t)n * 2 + q, Cyc::one());
    MorphismBuilder iota({h->space()}, {a->space()});
    for (uint32_t q = 0; q < 2; ++q) iota.add(q, q, Cyc::one());
    Pairing om = evaluation_pairing(a, b, z2);
    return make_datum(h, a, b, pi.take(), iota.take(), std::move(om));
}

PartialDualizationDatum complete_datum_cyclic(unsigned N) {
    HopfPtr h = group_algebra(cyclic_group(N), "H_CZ" + std::to_string(N));
    HopfPtr a = group_algebra(cyclic_group(N), "A_CZ" + std::to_string(N));
    HopfPtr b = group_algebra(cyclic_group(N), "B_CZ" + std::to_string(N));
    Morphism id = Morphism::identity({h->space()});
    Pairing om = cyclic_pairing(a, b, N, 1);
    return make_datum(h, a, b, id.retagged({a->space()}, {h->space()}),
                      id.retagged({h->space()}, {a->space()}), std::move(om));
}

PartialDualizationDatum trivial_datum(HopfPtr h) {
    HopfPtr a = unit_hopf();
    HopfPtr b = unit_hopf();
    Morphism omega = Morphism::scalar(Cyc::one()).retagged({}, {a->space(), b->space()});
    Pairing p{a, b, omega, Morphism::scalar(Cyc::one()).retagged({b->space(), a->space()}, {})};
    Report rep = verify_pairing(p);
    if (!rep.ok()) throw VerificationError(std::move(rep));
    Morphism pi = h->eps.retagged({a->space()}, {h->space()});
    Morphism iota = h->eta.retagged({h->space()}, {a->space()});
    return make_datum(std::move(h), a, b, pi, iota, std::move(p));
}

} // namespace hopfdual::catalog
