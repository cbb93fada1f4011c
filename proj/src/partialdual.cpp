#include "hopfdual/partialdual.hpp"

#include "hopfdual/kernels.hpp"

namespace hopfdual {

PartialDualizationDatum make_datum(HopfPtr h, HopfPtr a, HopfPtr b, Morphism pi,
                                   Morphism iota, Pairing omega) {
    Morphism pi_t = pi.retagged({a->space()}, {h->space()});
    Morphism iota_t = iota.retagged({h->space()}, {a->space()});
    {
        Report r = verify_hopf_morphism(pi_t, *h, *a);
        if (!r.ok()) throw NotAProjection(r.first_failure());
    }
    {
        Report r = verify_hopf_morphism(iota_t, *a, *h);
        if (!r.ok()) throw NotASection(r.first_failure());
        if (!pi_t.compose(iota_t).is_identity())
            throw NotASection("pi . iota is not the identity of A");
    }
    if (omega.a.get() != a.get() || omega.b.get() != b.get())
        throw TypeError("the pairing does not pair A with B");
    if (!omega.omega_prime) {
        auto w = kernels::inverse(omega.matrix());
        if (!w) throw DegeneratePairing();
        omega = invert_pairing(std::move(omega));
    }
    {
        Report r = verify_pairing(omega);
        if (!r.ok()) throw DegeneratePairing();
    }
    return PartialDualizationDatum{std::move(h), std::move(a), std::move(b),
                                   std::move(pi_t), std::move(iota_t), std::move(omega)};
}

PartialDualResult partial_dualize(const PartialDualizationDatum& d) {
    PartialDualResult res;
    res.k = coinvariants(d.h, d.a, d.pi, d.iota);
    res.provenance.push_back("K: coinvariant kernel basis of pi, structure maps re-expressed in it");

    const BraidedHopf& k = res.k.k;
    YdModule kmod = k.as_module();
    YdModule lmod = omega_functor(d.omega, kmod, OmegaVariant::Omega);
    Morphism om2 = omega_monoidal(d.omega, kmod, kmod, OmegaVariant::Omega);
    auto om2_inv = kernels::inverse(om2);
    if (!om2_inv) throw NotInvertible("Omega_2(K,K) is singular");

    BraidedHopf l;
    l.name = "L_" + k.name;
    l.space = k.space;
    l.labels = k.labels;
    l.mu = k.mu.compose(om2.retagged(k.mu.domain(), k.mu.domain()));
    l.Delta = om2_inv->retagged(k.Delta.codomain(), k.Delta.codomain()).compose(k.Delta);
    l.eta = k.eta;
    l.eps = k.eps;
    l.S = k.S;
    l.Sinv = k.Sinv;
    l.over = d.b;
    l.yd = lmod.yd;
    l.ambient_yd = lmod.ambient_yd;
    HopfPtr l_check = l.flattened();  // verifies L as a Hopf algebra in YD_B
    (void)l_check;
    res.provenance.push_back("L: Omega(K) with mu_L = mu_K Omega_2, Delta_L = Omega_2^{-1} Delta_K");

    res.l = l;
    res.bp = biproduct(l);
    res.rh = res.bp.result;
    res.provenance.push_back("r(H): bosonization L x| B with the diagrammatic antipode cross-checked");
    return res;
}

PartialDualizationDatum reverse_datum(const PartialDualizationDatum& d,
                                      const PartialDualResult& result, ReverseSign sign) {
    auto [plus, minus] = pairing_variants(d.omega);
    const Pairing& om = sign == ReverseSign::Plus ? plus : minus;
    return make_datum(result.rh, d.b, d.a, result.bp.pi_prime, result.bp.injection, om);
}

InvolutivityResult involutivity_check(const PartialDualizationDatum& d) {
    InvolutivityResult out;
    PartialDualResult first = partial_dualize(d);
    PartialDualizationDatum d2 = reverse_datum(d, first, ReverseSign::Minus);
    out.second = partial_dualize(d2);

    // identify the second coinvariants with K through (id_L ox eps_B) incl
    const BraidedHopf& k = first.k.k;
    Space ks = k.space;
    Morphism idl = Morphism::identity({ks});
    Morphism to_l = idl.tensor(d.b->eps)
                        .retagged({ks}, {first.rh->space()})
                        .compose(out.second.k.inclusion);
    YdModule kmod = k.as_module();
    auto [th, thinv] = theta(kmod);
    Morphism ident = th.compose(to_l);  // K'' -> K
    Morphism iso = first.k.reassembly_iso.compose(
        ident.tensor(Morphism::identity({d.a->space()})));
    iso = iso.retagged({d.h->space()}, {out.second.rh->space()});

    Report rep;
    {
        auto inv = kernels::inverse(iso);
        rep.add("iso-bijective", inv.has_value());
    }
    rep.merge(verify_hopf_morphism(iso, *out.second.rh, *d.h), "theta_K ox id: ");
    out.iso = iso;
    out.report = rep;
    return out;
}

YdModule transport_yd_module(const PartialDualizationDatum& d,
                             const PartialDualResult& result, const YdModule& m) {
    if (m.over.get() != d.h.get()) throw TypeError("module is not over the datum's H");
    // carry the module across the reassembly isomorphism H = K x| A
    Morphism psi = result.k.reassembly_iso;
    auto psi_inv = kernels::inverse(psi);
    if (!psi_inv) throw NotInvertible("reassembly isomorphism is singular");
    Space xs = m.space;
    Morphism idx = Morphism::identity({xs});
    const HopfPtr& kxa = result.k.reassembled.result;
    Yd conj{m.yd.rho.retagged({xs}, {d.h->space(), xs}).compose(psi.tensor(idx)),
            psi_inv->tensor(idx).compose(m.yd.delta.retagged({d.h->space(), xs}, {xs}))};
    YdModule over_kxa = make_yd_module(kxa, xs, Side::Left,
                                       Yd{conj.rho.retagged({xs}, {kxa->space(), xs}),
                                          conj.delta.retagged({kxa->space(), xs}, {xs})},
                                       m.ambient_yd);

    NestedYd n = yd_nest(result.k.reassembled, over_kxa);

    // A-level structures through Omega, K-level structures through the
    // monoidal isomorphism
    YdModule xb = omega_functor(d.omega, n.base, OmegaVariant::Omega);
    YdModule kmod = result.k.k.as_module();
    Morphism om2_kx = omega_monoidal(d.omega, kmod, n.base, OmegaVariant::Omega);
    auto om2_kx_inv = kernels::inverse(om2_kx);
    if (!om2_kx_inv) throw NotInvertible("Omega_2(K,X) is singular");
    NestedYd nl;
    nl.base = xb;
    nl.k_rho = n.k_rho.compose(om2_kx.retagged(n.k_rho.domain(), n.k_rho.domain()));
    nl.k_delta = om2_kx_inv->retagged(n.k_delta.codomain(), n.k_delta.codomain())
                     .compose(n.k_delta);
    YdModule out = yd_unnest(result.bp, nl);
    return out;
}

} // namespace hopfdual
