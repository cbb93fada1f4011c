#include "hopfdual/hopf.hpp"

#include "hopfdual/detail/subst.hpp"
#include "hopfdual/kernels.hpp"
#include "hopfdual/yd.hpp"

namespace hopfdual {

using detail::subst;

std::pair<Morphism, Morphism> ambient_braiding(const Ambient& amb,
                                               const Space& x, const Yd* x_yd,
                                               const Space& y, const Yd* y_yd) {
    auto forward = [&](const Space& sx, const Yd* gx, const Space& sy, const Yd* gy)
        -> std::pair<Morphism, Morphism> {
        if (amb.is_vect())
            return {Morphism::flip(sx, sy), Morphism::flip(sy, sx)};
        const Hopf& g = *amb.base;
        if (!gx || !gy)
            throw TypeError("braiding in a YdOver ambient needs base structures on both objects");
        Space gs = g.space();
        Morphism rho_y = gy->rho.retagged({sy}, {gs, sy});
        Morphism delta_x = gx->delta.retagged({gs, sx}, {sx});
        Morphism idx = Morphism::identity({sx});
        Morphism idy = Morphism::identity({sy});
        Morphism idg = Morphism::identity({gs});
        // c_{X,Y} = (rho_Y ox id_X) (id_G ox flip_{X,Y}) (delta_X ox id_Y)
        Morphism c = rho_y.tensor(idx)
                         .compose(idg.tensor(Morphism::flip(sx, sy)))
                         .compose(delta_x.tensor(idy));
        // inverse via the S^-1 formula of the Yetter-Drinfel'd braiding:
        // flip^{-1}_{X,Y} (rho_Y ox id_X) (flip^{-1}_{G,Y} ox id_X)
        // (id_Y ox S^{-1} ox id_X) (id_Y ox delta_X)
        Morphism sinv = g.Sinv.retagged({gs}, {gs});
        Morphism inv = Morphism::flip(sy, sx)
                           .compose(rho_y.tensor(idx))
                           .compose(Morphism::flip(sy, gs).tensor(idx))
                           .compose(idy.tensor(sinv).tensor(idx))
                           .compose(idy.tensor(delta_x));
        if (!inv.compose(c).is_identity())
            throw TypeError("ambient braiding is not invertible by the S^-1 formula");
        return {c, inv};
    };
    if (!amb.reversed) return forward(x, x_yd, y, y_yd);
    // mirror category: \bar{c}_{X,Y} = c^{-1}_{Y,X}
    auto [c_yx, c_yx_inv] = forward(y, y_yd, x, x_yd);
    return {c_yx_inv, c_yx};
}

std::pair<Morphism, Morphism> Hopf::self_braiding() const {
    const Yd* yd = self_yd ? &*self_yd : nullptr;
    return ambient_braiding(ambient, space(), yd, space(), yd);
}

void bind_hopf_as(Environment& env, const Hopf& h, const std::string& alias) {
    Space s{alias, h.dim};
    env.add_space(s);
    env.bind("mu[" + alias + "]", h.mu.retagged({s}, {s, s}));
    env.bind("eta[" + alias + "]", h.eta.retagged({s}, {}));
    env.bind("Delta[" + alias + "]", h.Delta.retagged({s, s}, {s}));
    env.bind("eps[" + alias + "]", h.eps.retagged({}, {s}));
    env.bind("S[" + alias + "]", h.S.retagged({s}, {s}));
    env.bind("Sinv[" + alias + "]", h.Sinv.retagged({s}, {s}));
    auto [c, ci] = h.self_braiding();
    env.register_braiding(alias, alias, c.retagged({s, s}, {s, s}), ci.retagged({s, s}, {s, s}));
}

void bind_hopf(Environment& env, const Hopf& h) { bind_hopf_as(env, h, h.name); }

Environment hopf_env(const Hopf& h) {
    Environment env;
    bind_hopf(env, h);
    if (!h.ambient.is_vect()) {
        const Hopf& base = *h.ambient.base;
        bind_hopf(env, base);
        Space s = h.space();
        Space gs = base.space();
        env.bind("act[" + h.name + "]", h.self_yd->rho.retagged({s}, {gs, s}));
        env.bind("coact[" + h.name + "]", h.self_yd->delta.retagged({gs, s}, {s}));
    }
    return env;
}

Report verify_hopf(const Hopf& h) {
    Report rep;
    // shape sanity first
    auto shape_ok = [&](const Morphism& m, size_t r, size_t c) { return m.rows() == r && m.cols() == c; };
    size_t d = h.dim;
    if (!shape_ok(h.mu, d, d * d) || !shape_ok(h.eta, d, 1) || !shape_ok(h.Delta, d * d, d) ||
        !shape_ok(h.eps, 1, d) || !shape_ok(h.S, d, d) || !shape_ok(h.Sinv, d, d)) {
        throw ShapeError("structure tensors of " + h.name + " have inconsistent shapes");
    }

    Environment env = hopf_env(h);
    const std::string N = h.name;
    auto eq = [&](const std::string& check, const char* lhs, const char* rhs) {
        CheckResult r = check_equal(subst(lhs, {{"H", N}}), subst(rhs, {{"H", N}}), env);
        std::string witness;
        if (!r.equal && r.witness)
            witness = "entry (" + std::to_string(r.witness->row) + "," +
                      std::to_string(r.witness->col) + "): " + r.witness->lhs.to_string() +
                      " vs " + r.witness->rhs.to_string();
        rep.add(check, r.equal, witness);
    };

    eq("associativity", "mu[{H}] . (mu[{H}] * id[{H}])", "mu[{H}] . (id[{H}] * mu[{H}])");
    eq("unit-left", "mu[{H}] . (eta[{H}] * id[{H}])", "id[{H}]");
    eq("unit-right", "mu[{H}] . (id[{H}] * eta[{H}])", "id[{H}]");
    eq("coassociativity", "(Delta[{H}] * id[{H}]) . Delta[{H}]",
       "(id[{H}] * Delta[{H}]) . Delta[{H}]");
    eq("counit-left", "(eps[{H}] * id[{H}]) . Delta[{H}]", "id[{H}]");
    eq("counit-right", "(id[{H}] * eps[{H}]) . Delta[{H}]", "id[{H}]");
    eq("bialgebra", "Delta[{H}] . mu[{H}]",
       "(mu[{H}] * mu[{H}]) . (id[{H}] * braid[{H},{H}] * id[{H}]) . (Delta[{H}] * Delta[{H}])");
    eq("eps-multiplicative", "eps[{H}] . mu[{H}]", "eps[{H}] * eps[{H}]");
    eq("Delta-unit", "Delta[{H}] . eta[{H}]", "eta[{H}] * eta[{H}]");
    {
        bool ok = h.eps.compose(h.eta) == Morphism::scalar(Cyc::one());
        rep.add("eps-unit", ok, ok ? "" : "eps(1) != 1");
    }
    eq("antipode-left", "mu[{H}] . (S[{H}] * id[{H}]) . Delta[{H}]", "eta[{H}] . eps[{H}]");
    eq("antipode-right", "mu[{H}] . (id[{H}] * S[{H}]) . Delta[{H}]", "eta[{H}] . eps[{H}]");
    {
        bool ok = h.S.compose(h.Sinv).is_identity() && h.Sinv.compose(h.S).is_identity();
        rep.add("antipode-invertible", ok, ok ? "" : "S.Sinv != id");
    }

    if (!h.ambient.is_vect()) {
        const Hopf& base = *h.ambient.base;
        const Yd& yd = *h.self_yd;
        Report sub = verify_yd_raw(base, h.space(), yd, Side::Left, base.ambient, nullptr);
        rep.merge(sub, "base-structure: ");

        // the structure maps are morphisms of base modules/comodules
        Yd diag = yd_tensor_raw(base, h.space(), yd, h.space(), yd, Side::Left,
                                base.ambient, nullptr, nullptr);
        Space hh{"HH", (uint32_t)(d * d)};
        // trivial structure on the unit object
        Yd unit_yd{base.eps, base.eta};

        Report m1 = verify_yd_morphism_raw(base, h.mu, hh, diag, h.space(), yd, Side::Left);
        rep.merge(m1, "mu base-morphism: ");
        Report m2 = verify_yd_morphism_raw(base, h.Delta, h.space(), yd, hh, diag, Side::Left);
        rep.merge(m2, "Delta base-morphism: ");
        Report m3 = verify_yd_morphism_raw(base, h.eta, Space{"one", 1}, unit_yd, h.space(), yd,
                                           Side::Left);
        rep.merge(m3, "eta base-morphism: ");
        Report m4 = verify_yd_morphism_raw(base, h.eps, h.space(), yd, Space{"one", 1}, unit_yd,
                                           Side::Left);
        rep.merge(m4, "eps base-morphism: ");
        Report m5 = verify_yd_morphism_raw(base, h.S, h.space(), yd, h.space(), yd, Side::Left);
        rep.merge(m5, "S base-morphism: ");
    }
    return rep;
}

HopfPtr make_hopf(std::string name, uint32_t dim, std::vector<std::string> labels,
                  Morphism mu, Morphism eta, Morphism Delta, Morphism eps, Morphism S,
                  Morphism Sinv, Ambient ambient, std::optional<Yd> self_yd) {
    auto h = std::make_shared<Hopf>();
    h->name = std::move(name);
    h->dim = dim;
    h->basis_labels = std::move(labels);
    if (h->basis_labels.empty())
        for (uint32_t i = 0; i < dim; ++i) h->basis_labels.push_back("e" + std::to_string(i));
    Space s = h->space();
    h->mu = mu.retagged({s}, {s, s});
    h->eta = eta.retagged({s}, {});
    h->Delta = Delta.retagged({s, s}, {s});
    h->eps = eps.retagged({}, {s});
    h->S = S.retagged({s}, {s});
    h->Sinv = Sinv.retagged({s}, {s});
    h->ambient = std::move(ambient);
    h->self_yd = std::move(self_yd);
    if (!h->ambient.is_vect() && !h->self_yd)
        throw TypeError("a Hopf algebra in a YdOver ambient needs self_yd structures");
    Report rep = verify_hopf(*h);
    if (!rep.ok()) throw VerificationError(std::move(rep));
    return h;
}

HopfPtr make_hopf_solve_antipode(std::string name, uint32_t dim,
                                 std::vector<std::string> labels, Morphism mu, Morphism eta,
                                 Morphism Delta, Morphism eps, Ambient ambient,
                                 std::optional<Yd> self_yd) {
    auto [S, Sinv] = solve_antipode(mu, eta, Delta, eps);
    return make_hopf(std::move(name), dim, std::move(labels), std::move(mu), std::move(eta),
                     std::move(Delta), std::move(eps), std::move(S), std::move(Sinv),
                     std::move(ambient), std::move(self_yd));
}

std::pair<Morphism, Morphism> solve_antipode(const Morphism& mu, const Morphism& eta,
                                             const Morphism& Delta, const Morphism& eps) {
    size_t d = mu.rows();
    // unknowns u[b*d + s] = S^s_b; equation (k,a):
    //   sum_{b,c,s} Delta^{bc}_a mu^k_{sc} S^s_b = eta^k eps_a
    std::vector<std::vector<std::pair<size_t, Cyc>>> mu_by_c(d);
    mu.for_each([&](size_t k, size_t col, const Cyc& v) {
        size_t s = col / d, c = col % d;
        mu_by_c[c].push_back({k * d + s, v});  // encodes (k, s)
    });
    Morphism sys({Space{"eq", (uint32_t)(d * d)}}, {Space{"u", (uint32_t)(d * d)}});
    Delta.for_each([&](size_t bc, size_t a, const Cyc& dv) {
        size_t b = bc / d, c = bc % d;
        for (const auto& [ks, mv] : mu_by_c[c]) {
            size_t k = ks / d, s = ks % d;
            sys.add(k * d + a, b * d + s, dv * mv);
        }
    });
    sys.finalize();
    Morphism rhs({Space{"eq", (uint32_t)(d * d)}}, {Space{"one", 1}});
    for (size_t k = 0; k < d; ++k) {
        Cyc ek = eta.entry(k, 0);
        if (ek.is_zero()) continue;
        for (size_t a = 0; a < d; ++a) {
            Cyc ea = eps.entry(0, a);
            if (!ea.is_zero()) rhs.set(k * d + a, 0, ek * ea);
        }
    }
    auto sol = kernels::solve(sys, rhs);
    if (!sol) throw NoAntipode();
    Morphism S({Space{"H", (uint32_t)d}}, {Space{"H", (uint32_t)d}});
    for (size_t b = 0; b < d; ++b)
        for (size_t s = 0; s < d; ++s) {
            Cyc v = sol->entry(b * d + s, 0);
            if (!v.is_zero()) S.set(s, b, v);
        }
    S.finalize();
    // the solver enforced the left antipode law; insist on the right one too
    Morphism idd = Morphism::identity({Space{"H", (uint32_t)d}});
    Morphism right = mu.compose(idd.tensor(S)).compose(Delta);
    Morphism target = eta.compose(eps);
    if (right.retagged(target.codomain(), target.domain()) != target) throw NoAntipode();
    auto Sinv = kernels::inverse(S);
    if (!Sinv) throw NotInvertible("antipode is a singular matrix");
    return {S, *Sinv};
}

std::pair<HopfPtr, HopfPtr> op_cop_variants(const HopfPtr& h) {
    auto [c, cinv] = h->self_braiding();
    Ambient mirror = h->ambient;
    mirror.reversed = !mirror.reversed;
    HopfPtr op = make_hopf(h->name + "_op", h->dim, h->basis_labels, h->mu.compose(cinv),
                           h->eta, h->Delta, h->eps, h->Sinv, h->S, mirror, h->self_yd);
    HopfPtr cop = make_hopf(h->name + "_cop", h->dim, h->basis_labels, h->mu, h->eta,
                            cinv.compose(h->Delta), h->eps, h->Sinv, h->S, mirror, h->self_yd);
    return {op, cop};
}

Report verify_hopf_morphism(const Morphism& f, const Hopf& dom, const Hopf& cod) {
    Report rep;
    auto check = [&](const std::string& name, const Morphism& lhs, const Morphism& rhs) {
        auto diff = lhs.retagged(rhs.codomain(), rhs.domain()).first_difference(rhs);
        rep.add(name, !diff.has_value(),
                diff ? "entry (" + std::to_string(diff->row) + "," + std::to_string(diff->col) +
                           "): " + diff->lhs.to_string() + " vs " + diff->rhs.to_string()
                     : "");
    };
    check("algebra-map", f.compose(dom.mu), cod.mu.compose(f.tensor(f)));
    check("unit-map", f.compose(dom.eta), cod.eta);
    check("coalgebra-map", cod.Delta.compose(f), f.tensor(f).compose(dom.Delta));
    check("counit-map", cod.eps.compose(f), dom.eps);
    check("antipode-commutes", f.compose(dom.S), cod.S.compose(f));
    return rep;
}

} // namespace hopfdual
