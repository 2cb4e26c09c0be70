#include "xmod.hpp"

#include <algorithm>
#include <map>

namespace xalg {

CheckReport check_xmod(const CrossedModule& x) {
    CheckReport r;
    const FiniteGroup& a = *x.a;
    const FiniteGroup& b = *x.b;
    for (int bb = 0; bb < b.order; ++bb)
        for (int aa = 0; aa < a.order; ++aa) {
            ++r.checks;
            if (x.alpha(x.act(bb, aa)) != b.conj(bb, x.alpha(aa))) return r.fail("CM1Fail", {bb, aa});
        }
    for (int aa = 0; aa < a.order; ++aa)
        for (int a2 = 0; a2 < a.order; ++a2) {
            ++r.checks;
            if (x.act(x.alpha(aa), a2) != a.conj(aa, a2)) return r.fail("CM2Fail", {aa, a2});
        }
    return r;
}

CheckReport full_check_xmod(const CrossedModule& x) {
    CheckReport r;
    if (!same_group(*x.alpha.dom, *x.a) || !same_group(*x.alpha.cod, *x.b) ||
        !same_group(*x.action.actor, *x.b) || !same_group(*x.action.space, *x.a))
        return r.fail("ShapeError", {});
    if (!r.absorb(check_group(*x.a), "a.")) return r;
    if (!r.absorb(check_group(*x.b), "b.")) return r;
    if (!r.absorb(check_hom(x.alpha), "alpha.")) return r;
    if (!r.absorb(check_action(x.action), "action.")) return r;
    r.absorb(check_xmod(x));
    return r;
}

XModPtr make_xmod(GroupPtr a, GroupPtr b, GroupHom alpha, GroupAction action, std::string name) {
    auto x = std::make_shared<CrossedModule>(
        CrossedModule{std::move(a), std::move(b), std::move(alpha), std::move(action), std::move(name)});
    return x;
}

XModPtr inclusion_xmod(GroupPtr g, const Subgroup& n, std::string name) {
    NormalityReport nr = is_normal(n);
    if (!nr.normal)
        throw Error("NotNormal", "subgroup is not normal", {nr.conjugator, nr.member});
    auto [ngrp, incl] = subgroup_to_group(n, name.empty() ? "" : name + "_a");
    std::vector<std::vector<int>> t(g->order, std::vector<int>(ngrp->order));
    for (int x = 0; x < g->order; ++x)
        for (int i = 0; i < ngrp->order; ++i) {
            int v = subgroup_index(n, g->conj(x, n.members[i]));
            if (v < 0) throw internal_error("conjugation left a normal subgroup");
            t[x][i] = v;
        }
    GroupAction act{g, ngrp, std::move(t)};
    return make_xmod(ngrp, g, incl, std::move(act),
                     name.empty() ? "incl_" + g->name : std::move(name));
}

XModPtr inner_automorphism_xmod(GroupPtr g, std::string name) {
    AutomorphismGroup aut = automorphism_group(g);
    std::vector<int> boundary(g->order);
    for (int x = 0; x < g->order; ++x) {
        std::vector<int> conj_by_x(g->order);
        for (int y = 0; y < g->order; ++y) conj_by_x[y] = g->conj(x, y);
        auto it = std::lower_bound(aut.maps.begin(), aut.maps.end(), conj_by_x);
        if (it == aut.maps.end() || *it != conj_by_x)
            throw internal_error("inner automorphism missing from Aut(G)");
        boundary[x] = static_cast<int>(it - aut.maps.begin());
    }
    GroupHom alpha{g, aut.group, std::move(boundary)};
    return make_xmod(g, aut.group, std::move(alpha), std::move(aut.eval),
                     name.empty() ? "inner_" + g->name : std::move(name));
}

XModPtr trivial_module_xmod(GroupPtr m, GroupPtr g, const GroupAction& act, std::string name) {
    std::pair<int, int> w;
    if (!is_abelian(*m, &w)) throw Error("NotAbelian", "module is not abelian", {w.first, w.second});
    if (!same_group(*act.actor, *g) || !same_group(*act.space, *m))
        throw input_error("ShapeError", "action does not match the module carriers");
    return make_xmod(m, g, zero_hom(m, g), act,
                     name.empty() ? "trivmod_" + m->name + "_" + g->name : std::move(name));
}

CheckReport check_xmod_morphism(const XModMorphism& f) {
    CheckReport r;
    const CrossedModule& s = *f.source;
    const CrossedModule& t = *f.target;
    if (!same_group(*f.f_a.dom, *s.a) || !same_group(*f.f_a.cod, *t.a) ||
        !same_group(*f.f_b.dom, *s.b) || !same_group(*f.f_b.cod, *t.b))
        return r.fail("ShapeError", {});
    if (!r.absorb(check_hom(f.f_a), "f_a.")) return r;
    if (!r.absorb(check_hom(f.f_b), "f_b.")) return r;
    for (int aa = 0; aa < s.a->order; ++aa) {
        ++r.checks;
        if (f.f_b(s.alpha(aa)) != t.alpha(f.f_a(aa))) return r.fail("SquareFail", {aa});
    }
    for (int bb = 0; bb < s.b->order; ++bb)
        for (int aa = 0; aa < s.a->order; ++aa) {
            ++r.checks;
            if (f.f_a(s.act(bb, aa)) != t.act(f.f_b(bb), f.f_a(aa)))
                return r.fail("EquivarianceFail", {bb, aa});
        }
    return r;
}

XModMorphism make_xmod_morphism(XModPtr source, XModPtr target, GroupHom f_a, GroupHom f_b) {
    XModMorphism f{std::move(source), std::move(target), std::move(f_a), std::move(f_b)};
    CheckReport r = check_xmod_morphism(f);
    if (!r.ok)
        throw Error(r.tag, "invalid crossed module morphism at " + witness_string(r.witness),
                    r.witness);
    return f;
}

XModMorphism identity_xmod_morphism(XModPtr x) {
    return XModMorphism{x, x, identity_hom(x->a), identity_hom(x->b)};
}

bool is_bijective(const XModMorphism& f) { return is_bijective(f.f_a) && is_bijective(f.f_b); }

CheckReport check_subxmod(const SubXMod& s) {
    CheckReport r;
    const CrossedModule& x = *s.ambient;
    if (!same_group(*s.s_members.ambient, *x.a) || !same_group(*s.t_members.ambient, *x.b))
        return r.fail("ShapeError", {});
    for (int m : s.s_members.members) {
        ++r.checks;
        if (!subgroup_contains(s.t_members, x.alpha(m))) return r.fail("AlphaNotIntoT", {m});
    }
    for (int t : s.t_members.members)
        for (int m : s.s_members.members) {
            ++r.checks;
            if (!subgroup_contains(s.s_members, x.act(t, m))) return r.fail("ActionNotClosed", {t, m});
        }
    return r;
}

CheckReport check_normal_subxmod(const SubXMod& s) {
    CheckReport r;
    if (!r.absorb(check_subxmod(s))) return r;
    const CrossedModule& x = *s.ambient;
    for (int b = 0; b < x.b->order; ++b)
        for (int t : s.t_members.members) {
            ++r.checks;
            if (!subgroup_contains(s.t_members, x.b->conj(b, t))) return r.fail("Cond1Fail", {b, t});
        }
    for (int b = 0; b < x.b->order; ++b)
        for (int m : s.s_members.members) {
            ++r.checks;
            if (!subgroup_contains(s.s_members, x.act(b, m))) return r.fail("Cond2Fail", {b, m});
        }
    for (int t : s.t_members.members)
        for (int a = 0; a < x.a->order; ++a) {
            ++r.checks;
            if (!subgroup_contains(s.s_members, x.a->op(x.act(t, a), x.a->inv(a))))
                return r.fail("Cond3Fail", {t, a});
        }
    return r;
}

SubXMod kernel_xmod(const XModMorphism& f) {
    return SubXMod{f.source, hom_kernel(f.f_a), hom_kernel(f.f_b)};
}

SubXMod image_xmod(const XModMorphism& f) {
    return SubXMod{f.target, hom_image(f.f_a), hom_image(f.f_b)};
}

SubXModAsXMod subxmod_to_xmod(const SubXMod& s, std::string name) {
    const CrossedModule& x = *s.ambient;
    if (name.empty()) name = x.name + "_sub";
    auto [agrp, incl_a] = subgroup_to_group(s.s_members, name + "_a");
    auto [bgrp, incl_b] = subgroup_to_group(s.t_members, name + "_b");
    std::vector<int> alpha(agrp->order);
    for (int i = 0; i < agrp->order; ++i) {
        int v = subgroup_index(s.t_members, x.alpha(s.s_members.members[i]));
        if (v < 0) throw Error("AlphaNotIntoT", "alpha leaves the sub data", {i});
        alpha[i] = v;
    }
    std::vector<std::vector<int>> act(bgrp->order, std::vector<int>(agrp->order));
    for (int t = 0; t < bgrp->order; ++t)
        for (int i = 0; i < agrp->order; ++i) {
            int v = subgroup_index(s.s_members, x.act(s.t_members.members[t], s.s_members.members[i]));
            if (v < 0) throw Error("ActionNotClosed", "restricted action leaves the sub data", {t, i});
            act[t][i] = v;
        }
    XModPtr sub = make_xmod(agrp, bgrp, GroupHom{agrp, bgrp, std::move(alpha)},
                            GroupAction{bgrp, agrp, std::move(act)}, name);
    XModMorphism incl{sub, s.ambient, incl_a, incl_b};
    return SubXModAsXMod{sub, std::move(incl)};
}

XModPtr product_xmod(XModPtr x, XModPtr y, std::string name) {
    if (name.empty()) name = x->name + "x" + y->name;
    GroupPtr a = direct_product(x->a, y->a, name + "_a");
    GroupPtr b = direct_product(x->b, y->b, name + "_b");
    int na2 = y->a->order, nb2 = y->b->order;
    std::vector<int> alpha(a->order);
    for (int i = 0; i < x->a->order; ++i)
        for (int j = 0; j < na2; ++j)
            alpha[i * na2 + j] = x->alpha(i) * nb2 + y->alpha(j);
    std::vector<std::vector<int>> act(b->order, std::vector<int>(a->order));
    for (int u = 0; u < x->b->order; ++u)
        for (int v = 0; v < nb2; ++v)
            for (int i = 0; i < x->a->order; ++i)
                for (int j = 0; j < na2; ++j)
                    act[u * nb2 + v][i * na2 + j] = x->act(u, i) * na2 + y->act(v, j);
    return make_xmod(a, b, GroupHom{a, b, std::move(alpha)}, GroupAction{b, a, std::move(act)},
                     name);
}

XModPullback pullback_xmod(const XModMorphism& f, const XModMorphism& g) {
    if (!same_group(*f.target->a, *g.target->a) || !same_group(*f.target->b, *g.target->b))
        throw input_error("TargetMismatch", "pullback legs have different targets");
    PullbackGroup pa = pullback_group(f.f_a, g.f_a);
    PullbackGroup pb = pullback_group(f.f_b, g.f_b);
    std::map<std::pair<int, int>, int> bidx;
    for (int i = 0; i < pb.group->order; ++i) bidx[pb.elements[i]] = i;
    std::vector<int> alpha(pa.group->order);
    for (int i = 0; i < pa.group->order; ++i) {
        auto [xa, ya] = pa.elements[i];
        auto it = bidx.find({f.source->alpha(xa), g.source->alpha(ya)});
        if (it == bidx.end()) throw internal_error("pullback boundary leaves the pullback");
        alpha[i] = it->second;
    }
    std::vector<std::vector<int>> act(pb.group->order, std::vector<int>(pa.group->order));
    std::map<std::pair<int, int>, int> aidx;
    for (int i = 0; i < pa.group->order; ++i) aidx[pa.elements[i]] = i;
    for (int u = 0; u < pb.group->order; ++u)
        for (int i = 0; i < pa.group->order; ++i) {
            auto [xb, yb] = pb.elements[u];
            auto [xa, ya] = pa.elements[i];
            auto it = aidx.find({f.source->act(xb, xa), g.source->act(yb, ya)});
            if (it == aidx.end()) throw internal_error("pullback action leaves the pullback");
            act[u][i] = it->second;
        }
    std::string name = f.source->name + "_pb_" + g.source->name;
    XModPtr px = make_xmod(pa.group, pb.group, GroupHom{pa.group, pb.group, std::move(alpha)},
                           GroupAction{pb.group, pa.group, std::move(act)}, name);
    XModMorphism p1{px, f.source, pa.pi1, pb.pi1};
    XModMorphism p2{px, g.source, pa.pi2, pb.pi2};
    return XModPullback{px, std::move(p1), std::move(p2)};
}

}  // namespace xalg
