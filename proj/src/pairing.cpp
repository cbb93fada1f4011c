#include "hopfdual/pairing.hpp"

#include "hopfdual/detail/subst.hpp"
#include "hopfdual/kernels.hpp"
#include "hopfdual/yd.hpp"

namespace hopfdual {

using detail::subst;

void bind_hopf_as(Environment& env, const Hopf& h, const std::string& alias);

Morphism Pairing::matrix() const {
    Morphism w({Space{"A", a->dim}}, {Space{"B", b->dim}});
    omega.for_row(0, [&](size_t col, const Cyc& v) {
        w.set(col / b->dim, col % b->dim, v);
    });
    w.finalize();
    return w;
}

Pairing make_pairing(HopfPtr a, HopfPtr b, Morphism omega) {
    Morphism om = omega.retagged({}, {a->space(), b->space()});
    Pairing p{std::move(a), std::move(b), std::move(om), std::nullopt};
    Report rep = verify_pairing(p);
    if (!rep.ok()) throw VerificationError(std::move(rep));
    return p;
}

Report verify_pairing(const Pairing& p) {
    Report rep;
    const Hopf& a = *p.a;
    const Hopf& b = *p.b;
    if (a.ambient.kind != b.ambient.kind || a.ambient.base != b.ambient.base ||
        a.ambient.reversed != b.ambient.reversed) {
        rep.add("common-ambient", false, "paired algebras live in different ambients");
        return rep;
    }
    Environment env;
    bind_hopf_as(env, a, "PA");
    bind_hopf_as(env, b, "PB");
    Space as{"PA", a.dim}, bs{"PB", b.dim};
    env.bind("omega", p.omega.retagged({}, {as, bs}));
    if (p.omega_prime) env.bind("omegainv", p.omega_prime->retagged({bs, as}, {}));
    {
        const Yd* a_yd = a.self_yd ? &*a.self_yd : nullptr;
        const Yd* b_yd = b.self_yd ? &*b.self_yd : nullptr;
        auto [cab, cab_inv] = ambient_braiding(a.ambient, as, a_yd, bs, b_yd);
        auto [cba, cba_inv] = ambient_braiding(a.ambient, bs, b_yd, as, a_yd);
        env.register_braiding("PA", "PB", cab, cab_inv);
        env.register_braiding("PB", "PA", cba, cba_inv);
    }

    auto eq = [&](const std::string& check, const std::string& lhs, const std::string& rhs) {
        CheckResult r = check_equal(lhs, rhs, env);
        std::string witness;
        if (!r.equal && r.witness)
            witness = "entry (" + std::to_string(r.witness->row) + "," +
                      std::to_string(r.witness->col) + "): " + r.witness->lhs.to_string() +
                      " vs " + r.witness->rhs.to_string();
        rep.add(check, r.equal, witness);
    };

    eq("pairing-mu-A", "omega . (mu[PA] * id[PB])",
       "omega . (id[PA] * omega * id[PB]) . (id[PA] * id[PA] * Delta[PB])");
    eq("pairing-eta-A", "omega . (eta[PA] * id[PB])", "eps[PB]");
    eq("pairing-mu-B", "omega . (id[PA] * mu[PB])",
       "omega . (id[PA] * omega * id[PB]) . (Delta[PA] * id[PB] * id[PB])");
    eq("pairing-eta-B", "omega . (id[PA] * eta[PB])", "eps[PA]");
    eq("pairing-antipode", "omega . (S[PA] * id[PB])", "omega . (id[PA] * S[PB])");

    if (!a.ambient.is_vect()) {
        // omega must be a morphism of the ambient category
        const Hopf& g = *a.ambient.base;
        Yd diag = yd_tensor_raw(g, as, *a.self_yd, bs, *b.self_yd, Side::Left, g.ambient,
                                nullptr, nullptr);
        Yd unit_yd{g.eps, g.eta};
        Report sub = verify_yd_morphism_raw(g, p.omega, Space{"AB", (uint32_t)(a.dim * b.dim)},
                                            diag, Space{"one", 1}, unit_yd, Side::Left);
        rep.merge(sub, "omega ambient-morphism: ");
    }

    if (p.omega_prime) {
        eq("copairing-Delta-B", "(Delta[PB] * id[PA]) . omegainv",
           "(id[PB] * id[PB] * mu[PA]) . (id[PB] * omegainv * id[PA]) . omegainv");
        eq("copairing-eps-B", "(eps[PB] * id[PA]) . omegainv", "eta[PA]");
        eq("copairing-Delta-A", "(id[PB] * Delta[PA]) . omegainv",
           "(mu[PB] * id[PA] * id[PA]) . (id[PB] * omegainv * id[PA]) . omegainv");
        eq("copairing-eps-A", "(id[PB] * eps[PA]) . omegainv", "eta[PB]");
        eq("inverse-law-A", "(omega * id[PA]) . (id[PA] * omegainv)", "id[PA]");
        eq("inverse-law-B", "(id[PB] * omega) . (omegainv * id[PB])", "id[PB]");
    }
    return rep;
}

Pairing invert_pairing(Pairing p) {
    Morphism w = p.matrix();
    auto winv = kernels::inverse(w);
    if (!winv) throw Degenerate();
    Morphism op({Space{"B", p.b->dim}, Space{"A", p.a->dim}}, {});
    for (size_t j = 0; j < p.b->dim; ++j)
        for (size_t i = 0; i < p.a->dim; ++i) {
            Cyc v = winv->entry(j, i);
            if (!v.is_zero()) op.set(j * p.a->dim + i, 0, v);
        }
    op.finalize();
    p.omega_prime = op.retagged({p.b->space(), p.a->space()}, {});
    Report rep = verify_pairing(p);
    if (!rep.ok()) throw VerificationError(std::move(rep));
    return p;
}

std::pair<Pairing, Pairing> pairing_variants(const Pairing& p) {
    if (!p.omega_prime) throw Degenerate();
    const Hopf& a = *p.a;
    const Hopf& b = *p.b;
    Space as = a.space(), bs = b.space();
    const Yd* a_yd = a.self_yd ? &*a.self_yd : nullptr;
    const Yd* b_yd = b.self_yd ? &*b.self_yd : nullptr;
    auto [c_ba, c_ba_inv] = ambient_braiding(a.ambient, bs, b_yd, as, a_yd);
    auto [c_ab, c_ab_inv] = ambient_braiding(a.ambient, as, a_yd, bs, b_yd);
    Morphism omega = p.omega.retagged({}, {as, bs});
    Morphism omega_prime = p.omega_prime->retagged({bs, as}, {});

    // omega+ = omega c_{B,A} (S_B ox S_A), omega- = omega c^{-1}_{A,B} (S^{-1}_B ox S^{-1}_A)
    Morphism plus = omega.compose(c_ba).compose(b.S.tensor(a.S));
    Morphism minus = omega.compose(c_ab_inv).compose(b.Sinv.tensor(a.Sinv));
    // inverse copairings: (S^{-1} ox S^{-1}) c^{-1}_{A,B} omega'  resp. (S ox S) c_{B,A} omega'
    Morphism plus_prime = a.Sinv.tensor(b.Sinv).compose(c_ab_inv).compose(omega_prime);
    Morphism minus_prime = a.S.tensor(b.S).compose(c_ba).compose(omega_prime);

    Pairing pp{p.b, p.a, plus.retagged({}, {bs, as}), plus_prime.retagged({as, bs}, {})};
    Pairing pm{p.b, p.a, minus.retagged({}, {bs, as}), minus_prime.retagged({as, bs}, {})};
    Report rp = verify_pairing(pp);
    if (!rp.ok()) throw VerificationError(std::move(rp));
    Report rm = verify_pairing(pm);
    if (!rm.ok()) throw VerificationError(std::move(rm));
    return {pp, pm};
}

Morphism dualize_comodule(const Pairing& p, const Space& x, const Morphism& delta) {
    Morphism idx = Morphism::identity({x});
    Morphism ida = Morphism::identity({p.a->space()});
    Morphism omega = p.omega.retagged({}, {p.a->space(), p.b->space()});
    return omega.tensor(idx).compose(ida.tensor(delta.retagged({p.b->space(), x}, {x})));
}

Morphism dualize_comodule_inverse(const Pairing& p, const Space& x, const Morphism& rho) {
    if (!p.omega_prime) throw Degenerate();
    Morphism idx = Morphism::identity({x});
    Morphism idb = Morphism::identity({p.b->space()});
    Morphism op = p.omega_prime->retagged({p.b->space(), p.a->space()}, {});
    return idb.tensor(rho.retagged({x}, {p.a->space(), x})).compose(op.tensor(idx));
}

} // namespace hopfdual
