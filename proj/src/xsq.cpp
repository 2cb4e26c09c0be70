#include "xsq.hpp"

#include <algorithm>

namespace xalg {

namespace {

bool square_shape_ok(const CrossedSquare& s) {
    if (!same_group(*s.lambda.dom, *s.l) || !same_group(*s.lambda.cod, *s.m)) return false;
    if (!same_group(*s.lambda_p.dom, *s.l) || !same_group(*s.lambda_p.cod, *s.n)) return false;
    if (!same_group(*s.mu.dom, *s.m) || !same_group(*s.mu.cod, *s.p)) return false;
    if (!same_group(*s.nu.dom, *s.n) || !same_group(*s.nu.cod, *s.p)) return false;
    if (!same_group(*s.act_pl.actor, *s.p) || !same_group(*s.act_pl.space, *s.l)) return false;
    if (!same_group(*s.act_pm.actor, *s.p) || !same_group(*s.act_pm.space, *s.m)) return false;
    if (!same_group(*s.act_pn.actor, *s.p) || !same_group(*s.act_pn.space, *s.n)) return false;
    if (static_cast<int>(s.h.size()) != s.m->order) return false;
    for (const auto& row : s.h) {
        if (static_cast<int>(row.size()) != s.n->order) return false;
        for (int v : row)
            if (v < 0 || v >= s.l->order) return false;
    }
    return true;
}

}  // namespace

CheckReport check_square(const CrossedSquare& s) {
    CheckReport r;
    if (!square_shape_ok(s)) return r.fail("ShapeError", {});
    const FiniteGroup& gl = *s.l;
    const FiniteGroup& gm = *s.m;
    const FiniteGroup& gn = *s.n;
    const FiniteGroup& gp = *s.p;

    for (int ll = 0; ll < gl.order; ++ll) {
        ++r.checks;
        if (s.nu(s.lambda_p(ll)) != s.mu(s.lambda(ll))) return r.fail("SquareCommuteFail", {ll});
    }
    if (!r.absorb(check_action(s.act_pl), "act_pl.")) return r;
    if (!r.absorb(check_action(s.act_pm), "act_pm.")) return r;
    if (!r.absorb(check_action(s.act_pn), "act_pn.")) return r;

    // (i) equivariance of lambda and lambda_p, and the three vertical
    // crossed modules (M,P,mu), (N,P,nu), (L,P,mu∘lambda).
    for (int pp = 0; pp < gp.order; ++pp)
        for (int ll = 0; ll < gl.order; ++ll) {
            ++r.checks;
            if (s.lambda(s.act_pl.act(pp, ll)) != s.act_pm.act(pp, s.lambda(ll)))
                return r.fail("Axiom1LambdaEquivFail", {pp, ll});
            ++r.checks;
            if (s.lambda_p(s.act_pl.act(pp, ll)) != s.act_pn.act(pp, s.lambda_p(ll)))
                return r.fail("Axiom1LambdaPEquivFail", {pp, ll});
        }
    {
        CrossedModule mu_mod{s.m, s.p, s.mu, s.act_pm, ""};
        if (!r.absorb(check_xmod(mu_mod), "Axiom1Mu.")) return r;
        CrossedModule nu_mod{s.n, s.p, s.nu, s.act_pn, ""};
        if (!r.absorb(check_xmod(nu_mod), "Axiom1Nu.")) return r;
        CrossedModule kappa_mod{s.l, s.p, compose(s.mu, s.lambda), s.act_pl, ""};
        if (!r.absorb(check_xmod(kappa_mod), "Axiom1Kappa.")) return r;
    }
    // (ii) lambda∘h and lambda_p∘h.
    for (int mm = 0; mm < gm.order; ++mm)
        for (int nn = 0; nn < gn.order; ++nn) {
            ++r.checks;
            if (s.lambda(s.h[mm][nn]) != gm.op(mm, s.act_n_on_m(nn, gm.inv(mm))))
                return r.fail("Axiom2aFail", {mm, nn});
            ++r.checks;
            if (s.lambda_p(s.h[mm][nn]) != gn.op(s.act_m_on_n(mm, nn), gn.inv(nn)))
                return r.fail("Axiom2bFail", {mm, nn});
        }
    // (iii) h on boundary images.
    for (int ll = 0; ll < gl.order; ++ll)
        for (int nn = 0; nn < gn.order; ++nn) {
            ++r.checks;
            if (s.h[s.lambda(ll)][nn] != gl.op(ll, s.act_n_on_l(nn, gl.inv(ll))))
                return r.fail("Axiom3aFail", {ll, nn});
        }
    for (int mm = 0; mm < gm.order; ++mm)
        for (int ll = 0; ll < gl.order; ++ll) {
            ++r.checks;
            if (s.h[mm][s.lambda_p(ll)] != gl.op(s.act_m_on_l(mm, ll), gl.inv(ll)))
                return r.fail("Axiom3bFail", {mm, ll});
        }
    // (iv) h is a crossed pairing.
    for (int mm = 0; mm < gm.order; ++mm)
        for (int m2 = 0; m2 < gm.order; ++m2)
            for (int nn = 0; nn < gn.order; ++nn) {
                ++r.checks;
                if (s.h[gm.op(mm, m2)][nn] != gl.op(s.act_m_on_l(mm, s.h[m2][nn]), s.h[mm][nn]))
                    return r.fail("Axiom4aFail", {mm, m2, nn});
            }
    for (int mm = 0; mm < gm.order; ++mm)
        for (int nn = 0; nn < gn.order; ++nn)
            for (int n2 = 0; n2 < gn.order; ++n2) {
                ++r.checks;
                if (s.h[mm][gn.op(nn, n2)] != gl.op(s.h[mm][nn], s.act_n_on_l(nn, s.h[mm][n2])))
                    return r.fail("Axiom4bFail", {mm, nn, n2});
            }
    // (v) P-equivariance of h.
    for (int pp = 0; pp < gp.order; ++pp)
        for (int mm = 0; mm < gm.order; ++mm)
            for (int nn = 0; nn < gn.order; ++nn) {
                ++r.checks;
                if (s.h[s.act_pm.act(pp, mm)][s.act_pn.act(pp, nn)] !=
                    s.act_pl.act(pp, s.h[mm][nn]))
                    return r.fail("Axiom5Fail", {pp, mm, nn});
            }
    return r;
}

CheckReport full_check_square(const CrossedSquare& s) {
    CheckReport r;
    if (!square_shape_ok(s)) return r.fail("ShapeError", {});
    if (!r.absorb(check_group(*s.l), "l.")) return r;
    if (!r.absorb(check_group(*s.m), "m.")) return r;
    if (!r.absorb(check_group(*s.n), "n.")) return r;
    if (!r.absorb(check_group(*s.p), "p.")) return r;
    if (!r.absorb(check_hom(s.lambda), "lambda.")) return r;
    if (!r.absorb(check_hom(s.lambda_p), "lambda_p.")) return r;
    if (!r.absorb(check_hom(s.mu), "mu.")) return r;
    if (!r.absorb(check_hom(s.nu), "nu.")) return r;
    r.absorb(check_square(s));
    return r;
}

XSqPtr make_square(CrossedSquare s) {
    if (!square_shape_ok(s)) throw input_error("ShapeError", "crossed square data does not fit");
    return std::make_shared<CrossedSquare>(std::move(s));
}

CheckReport check_square_morphism(const XSqMorphism& f) {
    CheckReport r;
    const CrossedSquare& s = *f.source;
    const CrossedSquare& t = *f.target;
    if (!same_group(*f.f_l.dom, *s.l) || !same_group(*f.f_l.cod, *t.l) ||
        !same_group(*f.f_m.dom, *s.m) || !same_group(*f.f_m.cod, *t.m) ||
        !same_group(*f.f_n.dom, *s.n) || !same_group(*f.f_n.cod, *t.n) ||
        !same_group(*f.f_p.dom, *s.p) || !same_group(*f.f_p.cod, *t.p))
        return r.fail("ShapeError", {});
    if (!r.absorb(check_hom(f.f_l), "f_l.")) return r;
    if (!r.absorb(check_hom(f.f_m), "f_m.")) return r;
    if (!r.absorb(check_hom(f.f_n), "f_n.")) return r;
    if (!r.absorb(check_hom(f.f_p), "f_p.")) return r;
    for (int ll = 0; ll < s.l->order; ++ll) {
        ++r.checks;
        if (f.f_m(s.lambda(ll)) != t.lambda(f.f_l(ll))) return r.fail("LambdaSquareFail", {ll});
        ++r.checks;
        if (f.f_n(s.lambda_p(ll)) != t.lambda_p(f.f_l(ll))) return r.fail("LambdaPSquareFail", {ll});
    }
    for (int nn = 0; nn < s.n->order; ++nn) {
        ++r.checks;
        if (f.f_p(s.nu(nn)) != t.nu(f.f_n(nn))) return r.fail("NuSquareFail", {nn});
    }
    for (int mm = 0; mm < s.m->order; ++mm) {
        ++r.checks;
        if (f.f_p(s.mu(mm)) != t.mu(f.f_m(mm))) return r.fail("MuSquareFail", {mm});
    }
    for (int pp = 0; pp < s.p->order; ++pp) {
        for (int ll = 0; ll < s.l->order; ++ll) {
            ++r.checks;
            if (f.f_l(s.act_pl.act(pp, ll)) != t.act_pl.act(f.f_p(pp), f.f_l(ll)))
                return r.fail("LActionCompatFail", {pp, ll});
        }
        for (int mm = 0; mm < s.m->order; ++mm) {
            ++r.checks;
            if (f.f_m(s.act_pm.act(pp, mm)) != t.act_pm.act(f.f_p(pp), f.f_m(mm)))
                return r.fail("MActionCompatFail", {pp, mm});
        }
        for (int nn = 0; nn < s.n->order; ++nn) {
            ++r.checks;
            if (f.f_n(s.act_pn.act(pp, nn)) != t.act_pn.act(f.f_p(pp), f.f_n(nn)))
                return r.fail("NActionCompatFail", {pp, nn});
        }
    }
    for (int mm = 0; mm < s.m->order; ++mm)
        for (int nn = 0; nn < s.n->order; ++nn) {
            ++r.checks;
            if (f.f_l(s.h[mm][nn]) != t.h[f.f_m(mm)][f.f_n(nn)])
                return r.fail("HCompatFail", {mm, nn});
        }
    return r;
}

XSqMorphism identity_square_morphism(XSqPtr s) {
    return XSqMorphism{s, s, identity_hom(s->l), identity_hom(s->m), identity_hom(s->n),
                       identity_hom(s->p)};
}

bool is_bijective(const XSqMorphism& f) {
    return is_bijective(f.f_l) && is_bijective(f.f_m) && is_bijective(f.f_n) && is_bijective(f.f_p);
}

XSqPtr catxmod_to_square(const CatXMod& c) {
    const CrossedModule& c1 = *c.c1;
    const CrossedModule& c0 = *c.c0;
    std::string name = c.name.empty() ? "eta" : "eta_" + c.name;

    Subgroup ker_sa = hom_kernel(c.s.f_a);
    Subgroup ker_sb = hom_kernel(c.s.f_b);
    auto [gl, incl_l] = subgroup_to_group(ker_sa, name + "_l");
    auto [gm, incl_m] = subgroup_to_group(ker_sb, name + "_m");
    GroupPtr gn = c0.a;
    GroupPtr gp = c0.b;

    std::vector<int> lambda(gl->order), lambda_p(gl->order), mu(gm->order);
    for (int i = 0; i < gl->order; ++i) {
        int v = subgroup_index(ker_sb, c1.alpha(ker_sa.members[i]));
        if (v < 0) throw internal_error("boundary left ker s_B");
        lambda[i] = v;
        lambda_p[i] = c.t.f_a(ker_sa.members[i]);
    }
    for (int i = 0; i < gm->order; ++i) mu[i] = c.t.f_b(ker_sb.members[i]);

    const FiniteGroup& a1 = *c1.a;
    const FiniteGroup& b1 = *c1.b;
    std::vector<std::vector<int>> act_pl(gp->order, std::vector<int>(gl->order));
    std::vector<std::vector<int>> act_pm(gp->order, std::vector<int>(gm->order));
    for (int pp = 0; pp < gp->order; ++pp) {
        int e = c.eps.f_b(pp);
        for (int i = 0; i < gl->order; ++i) {
            int v = subgroup_index(ker_sa, c1.act(e, ker_sa.members[i]));
            if (v < 0) throw internal_error("identity action left ker s_A");
            act_pl[pp][i] = v;
        }
        for (int i = 0; i < gm->order; ++i) {
            int v = subgroup_index(ker_sb, b1.conj(e, ker_sb.members[i]));
            if (v < 0) throw internal_error("identity conjugation left ker s_B");
            act_pm[pp][i] = v;
        }
    }
    std::vector<std::vector<int>> h(gm->order, std::vector<int>(gn->order));
    for (int i = 0; i < gm->order; ++i)
        for (int nn = 0; nn < gn->order; ++nn) {
            int one_n = c.eps.f_a(nn);
            int v = subgroup_index(ker_sa, a1.op(c1.act(ker_sb.members[i], one_n), a1.inv(one_n)));
            if (v < 0) throw internal_error("h value left ker s_A");
            h[i][nn] = v;
        }

    CrossedSquare sq{gl,
                     gm,
                     gn,
                     gp,
                     GroupHom{gl, gm, std::move(lambda)},
                     GroupHom{gl, gn, std::move(lambda_p)},
                     GroupHom{gm, gp, std::move(mu)},
                     c0.alpha,
                     GroupAction{gp, gl, std::move(act_pl)},
                     GroupAction{gp, gm, std::move(act_pm)},
                     c0.action,
                     std::move(h),
                     name};
    XSqPtr out = make_square(std::move(sq));
    CheckReport r = full_check_square(*out);
    if (!r.ok)
        throw internal_error("catxmod_to_square output failed " + r.tag + " at " +
                             witness_string(r.witness));
    return out;
}

CatPtr square_to_catxmod(const CrossedSquare& s) {
    std::string name = s.name.empty() ? "psi_sq" : "psi_sq_" + s.name;
    const FiniteGroup& gl = *s.l;
    const FiniteGroup& gm = *s.m;
    const FiniteGroup& gn = *s.n;
    const FiniteGroup& gp = *s.p;

    // A1 = L⋊N along nu, B1 = M⋊P along the P-action on M.
    std::vector<std::vector<int>> nl(gn.order, std::vector<int>(gl.order));
    for (int nn = 0; nn < gn.order; ++nn)
        for (int ll = 0; ll < gl.order; ++ll) nl[nn][ll] = s.act_n_on_l(nn, ll);
    SemidirectProduct a1 = semidirect_product(GroupAction{s.n, s.l, std::move(nl)}, name + "_a1");
    SemidirectProduct b1 = semidirect_product(s.act_pm, name + "_b1");

    std::vector<int> alpha1(a1.group->order);
    for (int ll = 0; ll < gl.order; ++ll)
        for (int nn = 0; nn < gn.order; ++nn)
            alpha1[ll * gn.order + nn] = s.lambda(ll) * gp.order + s.nu(nn);

    std::vector<std::vector<int>> act1(b1.group->order, std::vector<int>(a1.group->order));
    for (int mm = 0; mm < gm.order; ++mm)
        for (int pp = 0; pp < gp.order; ++pp)
            for (int ll = 0; ll < gl.order; ++ll)
                for (int nn = 0; nn < gn.order; ++nn) {
                    int pl = s.act_pl.act(pp, ll);
                    int pn = s.act_pn.act(pp, nn);
                    int first = gl.op(s.act_m_on_l(mm, pl), s.h[mm][pn]);
                    act1[mm * gp.order + pp][ll * gn.order + nn] = first * gn.order + pn;
                }

    XModPtr c1 = make_xmod(a1.group, b1.group, GroupHom{a1.group, b1.group, std::move(alpha1)},
                           GroupAction{b1.group, a1.group, std::move(act1)}, name + "_c1");
    XModPtr c0 = make_xmod(s.n, s.p, s.nu, s.act_pn, name + "_c0");

    std::vector<int> ta(a1.group->order), tb(b1.group->order);
    for (int ll = 0; ll < gl.order; ++ll)
        for (int nn = 0; nn < gn.order; ++nn)
            ta[ll * gn.order + nn] = gn.op(s.lambda_p(ll), nn);
    for (int mm = 0; mm < gm.order; ++mm)
        for (int pp = 0; pp < gp.order; ++pp) tb[mm * gp.order + pp] = gp.op(s.mu(mm), pp);

    XModMorphism sm{c1, c0, a1.proj_actor, b1.proj_actor};
    XModMorphism tm{c1, c0, GroupHom{a1.group, s.n, std::move(ta)},
                    GroupHom{b1.group, s.p, std::move(tb)}};
    XModMorphism em{c0, c1, a1.inj_actor, b1.inj_actor};
    CatPtr out = make_catxmod(c1, c0, std::move(sm), std::move(tm), std::move(em), name);
    CheckReport r = full_check_catxmod(*out);
    if (!r.ok)
        throw internal_error("square_to_catxmod output failed " + r.tag + " at " +
                             witness_string(r.witness));
    return out;
}

XSqMorphism catxmod_to_square_morphism(const CatXModMorphism& f, XSqPtr es, XSqPtr et) {
    const CatXMod& c = *f.source;
    const CatXMod& d = *f.target;
    Subgroup ker_sa_c = hom_kernel(c.s.f_a), ker_sb_c = hom_kernel(c.s.f_b);
    Subgroup ker_sa_d = hom_kernel(d.s.f_a), ker_sb_d = hom_kernel(d.s.f_b);
    std::vector<int> fl(ker_sa_c.members.size()), fm(ker_sb_c.members.size());
    for (size_t i = 0; i < ker_sa_c.members.size(); ++i) {
        int v = subgroup_index(ker_sa_d, f.f1.f_a(ker_sa_c.members[i]));
        if (v < 0) throw internal_error("morphism does not preserve ker s_A");
        fl[i] = v;
    }
    for (size_t i = 0; i < ker_sb_c.members.size(); ++i) {
        int v = subgroup_index(ker_sb_d, f.f1.f_b(ker_sb_c.members[i]));
        if (v < 0) throw internal_error("morphism does not preserve ker s_B");
        fm[i] = v;
    }
    return XSqMorphism{es, et, GroupHom{es->l, et->l, std::move(fl)},
                       GroupHom{es->m, et->m, std::move(fm)},
                       GroupHom{es->n, et->n, f.f0.f_a.map}, GroupHom{es->p, et->p, f.f0.f_b.map}};
}

CatXModMorphism square_to_catxmod_morphism(const XSqMorphism& f, CatPtr cs, CatPtr ct) {
    const CrossedSquare& s = *f.source;
    const CrossedSquare& t = *f.target;
    std::vector<int> f1a(cs->c1->a->order), f1b(cs->c1->b->order);
    for (int ll = 0; ll < s.l->order; ++ll)
        for (int nn = 0; nn < s.n->order; ++nn)
            f1a[ll * s.n->order + nn] = f.f_l(ll) * t.n->order + f.f_n(nn);
    for (int mm = 0; mm < s.m->order; ++mm)
        for (int pp = 0; pp < s.p->order; ++pp)
            f1b[mm * s.p->order + pp] = f.f_m(mm) * t.p->order + f.f_p(pp);
    XModMorphism f1{cs->c1, ct->c1, GroupHom{cs->c1->a, ct->c1->a, std::move(f1a)},
                    GroupHom{cs->c1->b, ct->c1->b, std::move(f1b)}};
    XModMorphism f0{cs->c0, ct->c0, GroupHom{cs->c0->a, ct->c0->a, f.f_n.map},
                    GroupHom{cs->c0->b, ct->c0->b, f.f_p.map}};
    return CatXModMorphism{cs, ct, std::move(f1), std::move(f0)};
}

CatXModMorphism unit_iso(CatPtr c) {
    XSqPtr sq = catxmod_to_square(*c);
    CatPtr d = square_to_catxmod(*sq);
    Subgroup ker_sa = hom_kernel(c->s.f_a);
    Subgroup ker_sb = hom_kernel(c->s.f_b);
    const FiniteGroup& a1 = *c->c1->a;
    const FiniteGroup& b1 = *c->c1->b;
    int n_order = c->c0->a->order;
    int p_order = c->c0->b->order;
    std::vector<int> f1a(a1.order), f1b(b1.order);
    for (int x = 0; x < a1.order; ++x) {
        int l = subgroup_index(ker_sa, a1.op(x, a1.inv(c->eps.f_a(c->s.f_a(x)))));
        if (l < 0) throw internal_error("arrow does not factor through ker s_A");
        f1a[x] = l * n_order + c->s.f_a(x);
    }
    for (int x = 0; x < b1.order; ++x) {
        int l = subgroup_index(ker_sb, b1.op(x, b1.inv(c->eps.f_b(c->s.f_b(x)))));
        if (l < 0) throw internal_error("arrow does not factor through ker s_B");
        f1b[x] = l * p_order + c->s.f_b(x);
    }
    XModMorphism f1{c->c1, d->c1, GroupHom{c->c1->a, d->c1->a, std::move(f1a)},
                    GroupHom{c->c1->b, d->c1->b, std::move(f1b)}};
    std::vector<int> ida(n_order), idb(p_order);
    for (int i = 0; i < n_order; ++i) ida[i] = i;
    for (int i = 0; i < p_order; ++i) idb[i] = i;
    XModMorphism f0{c->c0, d->c0, GroupHom{c->c0->a, d->c0->a, std::move(ida)},
                    GroupHom{c->c0->b, d->c0->b, std::move(idb)}};
    CatXModMorphism u{c, d, std::move(f1), std::move(f0)};
    CheckReport r = check_catxmod_morphism(u);
    if (!r.ok)
        throw internal_error("unit iso failed " + r.tag + " at " + witness_string(r.witness));
    if (!is_bijective(u)) throw internal_error("unit iso is not bijective");
    return u;
}

XSqMorphism counit_iso(XSqPtr s) {
    CatPtr c = square_to_catxmod(*s);
    XSqPtr e = catxmod_to_square(*c);
    // ker s_A sits inside L⋊N as pairs (l, 0); the component maps are the
    // first projections on L and M, identities on N and P.
    Subgroup ker_sa = hom_kernel(c->s.f_a);
    Subgroup ker_sb = hom_kernel(c->s.f_b);
    std::vector<int> fl(ker_sa.members.size()), fm(ker_sb.members.size());
    for (size_t i = 0; i < ker_sa.members.size(); ++i) fl[i] = ker_sa.members[i] / s->n->order;
    for (size_t i = 0; i < ker_sb.members.size(); ++i) fm[i] = ker_sb.members[i] / s->p->order;
    XSqMorphism t{e, s, GroupHom{e->l, s->l, std::move(fl)}, GroupHom{e->m, s->m, std::move(fm)},
                  identity_hom(s->n), identity_hom(s->p)};
    CheckReport r = check_square_morphism(t);
    if (!r.ok)
        throw internal_error("counit iso failed " + r.tag + " at " + witness_string(r.witness));
    if (!is_bijective(t)) throw internal_error("counit iso is not bijective");
    return t;
}

bool unit_iso_natural(const CatXModMorphism& f, std::string* diagnostic) {
    CatPtr c = f.source;
    CatPtr d = f.target;
    CatXModMorphism uc = unit_iso(c);
    CatXModMorphism ud = unit_iso(d);
    XSqPtr es = catxmod_to_square(*c);
    XSqPtr et = catxmod_to_square(*d);
    XSqMorphism ef = catxmod_to_square_morphism(f, es, et);
    CatXModMorphism pef = square_to_catxmod_morphism(ef, uc.target, ud.target);
    auto mismatch = [&](const GroupHom& left_outer, const GroupHom& left_inner,
                        const GroupHom& right_outer, const GroupHom& right_inner,
                        const std::string& which) {
        for (size_t x = 0; x < left_inner.map.size(); ++x)
            if (left_outer.map[left_inner.map[x]] != right_outer.map[right_inner.map[x]]) {
                if (diagnostic)
                    *diagnostic = which + " disagrees at " + std::to_string(x);
                return true;
            }
        return false;
    };
    if (mismatch(ud.f1.f_a, f.f1.f_a, pef.f1.f_a, uc.f1.f_a, "f1.f_a")) return false;
    if (mismatch(ud.f1.f_b, f.f1.f_b, pef.f1.f_b, uc.f1.f_b, "f1.f_b")) return false;
    if (mismatch(ud.f0.f_a, f.f0.f_a, pef.f0.f_a, uc.f0.f_a, "f0.f_a")) return false;
    if (mismatch(ud.f0.f_b, f.f0.f_b, pef.f0.f_b, uc.f0.f_b, "f0.f_b")) return false;
    return true;
}

XSqPtr identity_square(XModPtr x, std::string name) {
    if (name.empty()) name = "identity_sq_" + x->name;
    const FiniteGroup& a = *x->a;
    const FiniteGroup& b = *x->b;
    std::vector<std::vector<int>> h(b.order, std::vector<int>(a.order));
    for (int bb = 0; bb < b.order; ++bb)
        for (int aa = 0; aa < a.order; ++aa) h[bb][aa] = a.op(x->act(bb, aa), a.inv(aa));
    CrossedSquare sq{x->a,          x->b,
                     x->a,          x->b,
                     x->alpha,      identity_hom(x->a),
                     identity_hom(x->b), x->alpha,
                     x->action,     conjugation_action(x->b),
                     x->action,     std::move(h),
                     name};
    return make_square(std::move(sq));
}

XSqPtr trivial_square(XModPtr x, std::string name) {
    if (name.empty()) name = "trivial_sq_" + x->name;
    GroupPtr one = make_trivial();
    std::vector<std::vector<int>> h(x->a->order, std::vector<int>(1, 0));
    CrossedSquare sq{one,
                     x->a,
                     one,
                     x->b,
                     zero_hom(one, x->a),
                     zero_hom(one, one),
                     x->alpha,
                     zero_hom(one, x->b),
                     trivial_action(x->b, one),
                     x->action,
                     trivial_action(x->b, one),
                     std::move(h),
                     name};
    return make_square(std::move(sq));
}

XSqPtr normal_inclusion_square(XModPtr x, const SubXMod& s, std::string name) {
    CheckReport nr = check_normal_subxmod(s);
    if (!nr.ok) throw Error("NotNormal", "sub data is not a normal subcrossed module: " + nr.tag,
                            nr.witness);
    if (!same_group(*s.ambient->a, *x->a) || !same_group(*s.ambient->b, *x->b))
        throw input_error("ShapeError", "sub data does not belong to the crossed module");
    if (name.empty()) name = "normsq_" + x->name;
    SubXModAsXMod sub = subxmod_to_xmod(s, name + "_sub");
    GroupPtr gl = sub.xmod->a;
    GroupPtr gm = sub.xmod->b;
    const FiniteGroup& a = *x->a;

    std::vector<std::vector<int>> act_pl(x->b->order, std::vector<int>(gl->order));
    std::vector<std::vector<int>> act_pm(x->b->order, std::vector<int>(gm->order));
    for (int bb = 0; bb < x->b->order; ++bb) {
        for (int i = 0; i < gl->order; ++i) {
            int v = subgroup_index(s.s_members, x->act(bb, s.s_members.members[i]));
            if (v < 0) throw internal_error("action left the normal sub data");
            act_pl[bb][i] = v;
        }
        for (int i = 0; i < gm->order; ++i) {
            int v = subgroup_index(s.t_members, x->b->conj(bb, s.t_members.members[i]));
            if (v < 0) throw internal_error("conjugation left the normal sub data");
            act_pm[bb][i] = v;
        }
    }
    std::vector<std::vector<int>> h(gm->order, std::vector<int>(a.order));
    for (int i = 0; i < gm->order; ++i)
        for (int aa = 0; aa < a.order; ++aa) {
            int v = subgroup_index(s.s_members,
                                   a.op(x->act(s.t_members.members[i], aa), a.inv(aa)));
            if (v < 0) throw internal_error("h value left the normal sub data");
            h[i][aa] = v;
        }
    CrossedSquare sq{gl,
                     gm,
                     x->a,
                     x->b,
                     sub.xmod->alpha,
                     sub.inclusion.f_a,
                     sub.inclusion.f_b,
                     x->alpha,
                     GroupAction{x->b, gl, std::move(act_pl)},
                     GroupAction{x->b, gm, std::move(act_pm)},
                     x->action,
                     std::move(h),
                     name};
    return make_square(std::move(sq));
}

}  // namespace xalg
