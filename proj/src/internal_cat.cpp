#include "internal_cat.hpp"

#include <algorithm>

namespace xalg {

namespace {

// b∘a = b ∘ 1_{s(b)}⁻¹ ∘ a, no composability or validity guards.
int compose_raw(const GroupGroupoid& g, int b, int a) {
    int e = g.eps(g.s(b));
    return g.g1->op(g.g1->op(b, g.g1->inv(e)), a);
}

int compose_raw_swapped(const GroupGroupoid& g, int b, int a) {
    int e = g.eps(g.s(b));
    return g.g1->op(g.g1->op(a, g.g1->inv(e)), b);
}

int inverse_raw(const GroupGroupoid& g, int a) {
    const FiniteGroup& g1 = *g.g1;
    return g1.op(g1.op(g.eps(g.s(a)), g1.inv(a)), g.eps(g.t(a)));
}

int inverse_raw_swapped(const GroupGroupoid& g, int a) {
    const FiniteGroup& g1 = *g.g1;
    return g1.op(g1.op(g.eps(g.t(a)), g1.inv(a)), g.eps(g.s(a)));
}

bool groupoid_shape_ok(const GroupGroupoid& g) {
    return same_group(*g.s.dom, *g.g1) && same_group(*g.s.cod, *g.g0) &&
           same_group(*g.t.dom, *g.g1) && same_group(*g.t.cod, *g.g0) &&
           same_group(*g.eps.dom, *g.g0) && same_group(*g.eps.cod, *g.g1);
}

}  // namespace

CheckReport check_groupoid(const GroupGroupoid& g) {
    CheckReport r;
    if (!groupoid_shape_ok(g)) return r.fail("ShapeError", {});
    const FiniteGroup& g1 = *g.g1;
    const FiniteGroup& g0 = *g.g0;
    for (int y = 0; y < g0.order; ++y) {
        ++r.checks;
        if (g.s(g.eps(y)) != y || g.t(g.eps(y)) != y) return r.fail("IdentitySectionFail", {y});
    }
    std::vector<int> ker_s, ker_t;
    for (int x = 0; x < g1.order; ++x) {
        if (g.s(x) == 0) ker_s.push_back(x);
        if (g.t(x) == 0) ker_t.push_back(x);
    }
    for (int ks : ker_s)
        for (int kt : ker_t) {
            ++r.checks;
            if (g1.op(ks, kt) != g1.op(kt, ks)) return r.fail("KernelCommutationFail", {ks, kt});
        }
    PullbackGroup pb = pullback_group(g.s, g.t);
    const auto& pairs = pb.elements;
    for (const auto& [b, a] : pairs) {
        int m1 = compose_raw(g, b, a);
        int m2 = compose_raw_swapped(g, b, a);
        ++r.checks;
        if (m1 != m2) return r.fail("CategoryAxiomFail(forms)", {b, a});
        ++r.checks;
        if (g.s(m1) != g.s(a) || g.t(m1) != g.t(b)) return r.fail("CategoryAxiomFail(st)", {b, a});
    }
    for (int x = 0; x < g1.order; ++x) {
        ++r.checks;
        if (compose_raw(g, g.eps(g.t(x)), x) != x || compose_raw(g, x, g.eps(g.s(x))) != x)
            return r.fail("CategoryAxiomFail(unit)", {x});
    }
    std::vector<std::vector<int>> fiber_t(g0.order);
    for (int x = 0; x < g1.order; ++x) fiber_t[g.t(x)].push_back(x);
    for (const auto& [c, b] : pairs)
        for (int a : fiber_t[g.s(b)]) {
            ++r.checks;
            if (compose_raw(g, compose_raw(g, c, b), a) != compose_raw(g, c, compose_raw(g, b, a)))
                return r.fail("CategoryAxiomFail(assoc)", {c, b, a});
        }
    // Interchange: the derived composition is a homomorphism on the pullback.
    for (const auto& [b, a] : pairs)
        for (const auto& [b2, a2] : pairs) {
            ++r.checks;
            if (compose_raw(g, g1.op(b, b2), g1.op(a, a2)) !=
                g1.op(compose_raw(g, b, a), compose_raw(g, b2, a2)))
                return r.fail("CategoryAxiomFail(interchange)", {b, a, b2, a2});
        }
    return r;
}

CheckReport full_check_groupoid(const GroupGroupoid& g) {
    CheckReport r;
    if (!groupoid_shape_ok(g)) return r.fail("ShapeError", {});
    if (!r.absorb(check_group(*g.g1), "g1.")) return r;
    if (!r.absorb(check_group(*g.g0), "g0.")) return r;
    if (!r.absorb(check_hom(g.s), "s.")) return r;
    if (!r.absorb(check_hom(g.t), "t.")) return r;
    if (!r.absorb(check_hom(g.eps), "eps.")) return r;
    r.absorb(check_groupoid(g));
    return r;
}

GgpdPtr make_groupoid(GroupPtr g1, GroupPtr g0, GroupHom s, GroupHom t, GroupHom eps,
                      std::string name) {
    GroupGroupoid g{std::move(g1), std::move(g0), std::move(s), std::move(t), std::move(eps),
                    std::move(name)};
    if (!groupoid_shape_ok(g)) throw input_error("ShapeError", "groupoid structure maps do not fit");
    return std::make_shared<GroupGroupoid>(std::move(g));
}

int groupoid_compose(const GroupGroupoid& g, int b, int a) {
    if (g.s(b) != g.t(a)) throw Error("NotComposable", "arrows do not compose", {g.s(b), g.t(a)});
    int m1 = compose_raw(g, b, a);
    int m2 = compose_raw_swapped(g, b, a);
    if (m1 != m2) throw internal_error("the two composition forms disagree");
    return m1;
}

int groupoid_inverse(const GroupGroupoid& g, int a) {
    int v = inverse_raw(g, a);
    if (v != inverse_raw_swapped(g, a)) throw internal_error("the two inverse forms disagree");
    return v;
}

CheckReport check_explicit_composition(const GroupGroupoid& g,
                                       const std::vector<std::vector<int>>& m) {
    CheckReport r;
    int n = g.g1->order;
    if (static_cast<int>(m.size()) != n) return r.fail("ShapeError", {static_cast<int>(m.size()), n});
    for (int b = 0; b < n; ++b) {
        if (static_cast<int>(m[b].size()) != n) return r.fail("ShapeError", {b});
        for (int a = 0; a < n; ++a) {
            ++r.checks;
            if (g.s(b) == g.t(a)) {
                if (m[b][a] != compose_raw(g, b, a))
                    return r.fail("ExplicitCompositionMismatch", {b, a});
            } else if (m[b][a] != -1) {
                return r.fail("ExplicitCompositionShape", {b, a});
            }
        }
    }
    return r;
}

XModPtr groupoid_to_xmod(const GroupGroupoid& g) {
    Subgroup ker = hom_kernel(g.s);
    auto [agrp, incl] = subgroup_to_group(ker, g.name.empty() ? "ker_s" : "ker_s_" + g.name);
    std::vector<int> alpha(agrp->order);
    for (int i = 0; i < agrp->order; ++i) alpha[i] = g.t(ker.members[i]);
    std::vector<std::vector<int>> act(g.g0->order, std::vector<int>(agrp->order));
    for (int x = 0; x < g.g0->order; ++x)
        for (int i = 0; i < agrp->order; ++i) {
            int v = subgroup_index(ker, g.g1->conj(g.eps(x), ker.members[i]));
            if (v < 0) throw internal_error("conjugation by an identity arrow left ker s");
            act[x][i] = v;
        }
    XModPtr x = make_xmod(agrp, g.g0, GroupHom{agrp, g.g0, std::move(alpha)},
                          GroupAction{g.g0, agrp, std::move(act)},
                          g.name.empty() ? "phi" : "phi_" + g.name);
    CheckReport r = full_check_xmod(*x);
    if (!r.ok) throw internal_error("groupoid_to_xmod output failed " + r.tag);
    return x;
}

GgpdPtr xmod_to_groupoid(const CrossedModule& x) {
    std::string name = x.name.empty() ? "psi" : "psi_" + x.name;
    SemidirectProduct sd = semidirect_product(x.action, name + "_g1");
    const FiniteGroup& b = *x.b;
    std::vector<int> tmap(sd.group->order);
    for (int aa = 0; aa < x.a->order; ++aa)
        for (int bb = 0; bb < b.order; ++bb) tmap[aa * b.order + bb] = b.op(x.alpha(aa), bb);
    return make_groupoid(sd.group, x.b, sd.proj_actor,
                         GroupHom{sd.group, x.b, std::move(tmap)}, sd.inj_actor, name);
}

std::vector<int> groupoid_roundtrip_arrow_map(const GroupGroupoid& g) {
    Subgroup ker = hom_kernel(g.s);
    std::vector<int> map(g.g1->order);
    for (int a = 0; a < g.g1->order; ++a) {
        int l = subgroup_index(ker, g.g1->op(a, g.g1->inv(g.eps(g.s(a)))));
        if (l < 0) throw internal_error("arrow does not factor through ker s");
        map[a] = l * g.g0->order + g.s(a);
    }
    return map;
}

CheckReport check_groupoid_iso(const GroupGroupoid& g, const GroupGroupoid& h,
                               const std::vector<int>& arrow_map,
                               const std::vector<int>& object_map) {
    CheckReport r;
    GroupHom f1{g.g1, h.g1, arrow_map};
    GroupHom f0{g.g0, h.g0, object_map};
    if (!r.absorb(check_hom(f1), "arrows.")) return r;
    if (!r.absorb(check_hom(f0), "objects.")) return r;
    ++r.checks;
    if (!is_bijective(f1)) return r.fail("NotBijective", {0});
    ++r.checks;
    if (!is_bijective(f0)) return r.fail("NotBijective", {1});
    for (int x = 0; x < g.g1->order; ++x) {
        ++r.checks;
        if (h.s(arrow_map[x]) != object_map[g.s(x)]) return r.fail("SourceSquareFail", {x});
        ++r.checks;
        if (h.t(arrow_map[x]) != object_map[g.t(x)]) return r.fail("TargetSquareFail", {x});
    }
    for (int y = 0; y < g.g0->order; ++y) {
        ++r.checks;
        if (arrow_map[g.eps(y)] != h.eps(object_map[y])) return r.fail("IdentitySquareFail", {y});
    }
    return r;
}

GroupGroupoid a_side_groupoid(const CatXMod& c) {
    return GroupGroupoid{c.c1->a, c.c0->a, c.s.f_a, c.t.f_a, c.eps.f_a, c.name + "_a"};
}

GroupGroupoid b_side_groupoid(const CatXMod& c) {
    return GroupGroupoid{c.c1->b, c.c0->b, c.s.f_b, c.t.f_b, c.eps.f_b, c.name + "_b"};
}

namespace {

bool catxmod_shape_ok(const CatXMod& c) {
    auto fits = [&](const XModMorphism& f, const CrossedModule& s, const CrossedModule& t) {
        return same_group(*f.f_a.dom, *s.a) && same_group(*f.f_a.cod, *t.a) &&
               same_group(*f.f_b.dom, *s.b) && same_group(*f.f_b.cod, *t.b);
    };
    return fits(c.s, *c.c1, *c.c0) && fits(c.t, *c.c1, *c.c0) && fits(c.eps, *c.c0, *c.c1);
}

std::vector<std::pair<int, int>> composable_pairs(const GroupHom& s, const GroupHom& t) {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < s.dom->order; ++b)
        for (int a = 0; a < t.dom->order; ++a)
            if (s.map[b] == t.map[a]) out.emplace_back(b, a);
    return out;
}

}  // namespace

CheckReport check_catxmod(const CatXMod& c) {
    CheckReport r;
    if (!catxmod_shape_ok(c)) return r.fail("ShapeError", {});
    const CrossedModule& c1 = *c.c1;
    const CrossedModule& c0 = *c.c0;
    const FiniteGroup& a1 = *c1.a;
    const FiniteGroup& b1 = *c1.b;

    for (int a0 = 0; a0 < c0.a->order; ++a0) {
        ++r.checks;
        if (c.s.f_a(c.eps.f_a(a0)) != a0 || c.t.f_a(c.eps.f_a(a0)) != a0)
            return r.fail("IdentitySectionFailA", {a0});
    }
    for (int b0 = 0; b0 < c0.b->order; ++b0) {
        ++r.checks;
        if (c.s.f_b(c.eps.f_b(b0)) != b0 || c.t.f_b(c.eps.f_b(b0)) != b0)
            return r.fail("IdentitySectionFailB", {b0});
    }

    GroupGroupoid ga = a_side_groupoid(c);
    GroupGroupoid gb = b_side_groupoid(c);
    if (!r.absorb(check_groupoid(ga), "A.")) return r;
    if (!r.absorb(check_groupoid(gb), "B.")) return r;

    // (i) source and target maps are homomorphisms.
    for (const GroupHom* f : {&c.s.f_a, &c.s.f_b, &c.t.f_a, &c.t.f_b})
        for (int x = 0; x < f->dom->order; ++x)
            for (int y = 0; y < f->dom->order; ++y) {
                ++r.checks;
                if (f->map[f->dom->op(x, y)] != f->cod->op(f->map[x], f->map[y]))
                    return r.fail("Cond(i)Fail", {x, y});
            }
    // (ii) boundaries commute with source and target.
    for (int x = 0; x < a1.order; ++x) {
        ++r.checks;
        if (c0.alpha(c.s.f_a(x)) != c.s.f_b(c1.alpha(x))) return r.fail("Cond(ii)Fail", {x});
        ++r.checks;
        if (c0.alpha(c.t.f_a(x)) != c.t.f_b(c1.alpha(x))) return r.fail("Cond(ii)Fail", {x});
    }
    // (iii) source and target are equivariant.
    for (int bb = 0; bb < b1.order; ++bb)
        for (int aa = 0; aa < a1.order; ++aa) {
            ++r.checks;
            if (c.s.f_a(c1.act(bb, aa)) != c0.act(c.s.f_b(bb), c.s.f_a(aa)))
                return r.fail("Cond(iii)Fail", {bb, aa});
            ++r.checks;
            if (c.t.f_a(c1.act(bb, aa)) != c0.act(c.t.f_b(bb), c.t.f_a(aa)))
                return r.fail("Cond(iii)Fail", {bb, aa});
        }
    // (iv) the identity object map is a homomorphism.
    for (const GroupHom* f : {&c.eps.f_a, &c.eps.f_b})
        for (int x = 0; x < f->dom->order; ++x)
            for (int y = 0; y < f->dom->order; ++y) {
                ++r.checks;
                if (f->map[f->dom->op(x, y)] != f->cod->op(f->map[x], f->map[y]))
                    return r.fail("Cond(iv)Fail", {x, y});
            }
    // (v) identities commute with the boundaries.
    for (int a0 = 0; a0 < c0.a->order; ++a0) {
        ++r.checks;
        if (c1.alpha(c.eps.f_a(a0)) != c.eps.f_b(c0.alpha(a0))) return r.fail("Cond(v)Fail", {a0});
    }
    // (vi) identities are equivariant.
    for (int b0 = 0; b0 < c0.b->order; ++b0)
        for (int a0 = 0; a0 < c0.a->order; ++a0) {
            ++r.checks;
            if (c.eps.f_a(c0.act(b0, a0)) != c1.act(c.eps.f_b(b0), c.eps.f_a(a0)))
                return r.fail("Cond(vi)Fail", {b0, a0});
        }

    auto pairs_a = composable_pairs(c.s.f_a, c.t.f_a);
    auto pairs_b = composable_pairs(c.s.f_b, c.t.f_b);

    // (vii) interchange between the group operation and composition, per side.
    for (const auto& [x, x2] : pairs_a)
        for (const auto& [y, y2] : pairs_a) {
            ++r.checks;
            if (compose_raw(ga, a1.op(x, y), a1.op(x2, y2)) !=
                a1.op(compose_raw(ga, x, x2), compose_raw(ga, y, y2)))
                return r.fail("Cond(vii)Fail", {x, y, x2, y2});
        }
    for (const auto& [x, x2] : pairs_b)
        for (const auto& [y, y2] : pairs_b) {
            ++r.checks;
            if (compose_raw(gb, b1.op(x, y), b1.op(x2, y2)) !=
                b1.op(compose_raw(gb, x, x2), compose_raw(gb, y, y2)))
                return r.fail("Cond(vii)Fail", {x, y, x2, y2});
        }
    // (viii) the boundary preserves composition.
    for (const auto& [x, x2] : pairs_a) {
        ++r.checks;
        if (c1.alpha(compose_raw(ga, x, x2)) != compose_raw(gb, c1.alpha(x), c1.alpha(x2)))
            return r.fail("Cond(viii)Fail", {x, x2});
    }
    // (ix) the action respects composition on composable pairs.
    for (const auto& [bb, bb2] : pairs_b)
        for (const auto& [aa, aa2] : pairs_a) {
            ++r.checks;
            if (c1.act(compose_raw(gb, bb, bb2), compose_raw(ga, aa, aa2)) !=
                compose_raw(ga, c1.act(bb, aa), c1.act(bb2, aa2)))
                return r.fail("Cond(ix)Fail", {bb, bb2, aa, aa2});
        }

    // Both composition orderings were already compared per side by
    // check_groupoid; the two groupoid-inverse forms must agree as well.
    for (int aa = 0; aa < a1.order; ++aa) {
        ++r.checks;
        if (inverse_raw(ga, aa) != inverse_raw_swapped(ga, aa))
            return r.fail("InverseFormsFail", {aa});
    }
    for (int bb = 0; bb < b1.order; ++bb) {
        ++r.checks;
        if (inverse_raw(gb, bb) != inverse_raw_swapped(gb, bb))
            return r.fail("InverseFormsFail", {bb});
    }
    // Groupoid inverses are compatible with the action on all pairs.
    for (int bb = 0; bb < b1.order; ++bb)
        for (int aa = 0; aa < a1.order; ++aa) {
            ++r.checks;
            if (inverse_raw(ga, c1.act(bb, aa)) != c1.act(inverse_raw(gb, bb), inverse_raw(ga, aa)))
                return r.fail("InverseCompatFail", {bb, aa});
        }
    // The derived inverse pair is a crossed module morphism C1 -> C1.
    for (int x = 0; x < a1.order; ++x)
        for (int y = 0; y < a1.order; ++y) {
            ++r.checks;
            if (inverse_raw(ga, a1.op(x, y)) != a1.op(inverse_raw(ga, x), inverse_raw(ga, y)))
                return r.fail("InverseNotMorphismA", {x, y});
        }
    for (int x = 0; x < b1.order; ++x)
        for (int y = 0; y < b1.order; ++y) {
            ++r.checks;
            if (inverse_raw(gb, b1.op(x, y)) != b1.op(inverse_raw(gb, x), inverse_raw(gb, y)))
                return r.fail("InverseNotMorphismB", {x, y});
        }
    for (int aa = 0; aa < a1.order; ++aa) {
        ++r.checks;
        if (c1.alpha(inverse_raw(ga, aa)) != inverse_raw(gb, c1.alpha(aa)))
            return r.fail("InverseSquareFail", {aa});
    }
    return r;
}

CheckReport full_check_catxmod(const CatXMod& c) {
    CheckReport r;
    if (!catxmod_shape_ok(c)) return r.fail("ShapeError", {});
    if (!r.absorb(full_check_xmod(*c.c1), "c1.")) return r;
    if (!r.absorb(full_check_xmod(*c.c0), "c0.")) return r;
    if (!r.absorb(check_xmod_morphism(c.s), "s.")) return r;
    if (!r.absorb(check_xmod_morphism(c.t), "t.")) return r;
    if (!r.absorb(check_xmod_morphism(c.eps), "eps.")) return r;
    r.absorb(check_catxmod(c));
    return r;
}

CatPtr make_catxmod(XModPtr c1, XModPtr c0, XModMorphism s, XModMorphism t, XModMorphism eps,
                    std::string name) {
    CatXMod c{std::move(c1), std::move(c0), std::move(s), std::move(t), std::move(eps),
              std::move(name)};
    if (!catxmod_shape_ok(c))
        throw input_error("ShapeError", "internal category structure maps do not fit");
    return std::make_shared<CatXMod>(std::move(c));
}

CatPtr pair_catxmod(XModPtr x, std::string name) {
    if (name.empty()) name = "pair_" + x->name;
    XModPtr c1 = product_xmod(x, x, name + "_c1");
    int na = x->a->order, nb = x->b->order;
    std::vector<int> sa(c1->a->order), ta(c1->a->order), sb(c1->b->order), tb(c1->b->order);
    for (int i = 0; i < c1->a->order; ++i) {
        sa[i] = i / na;
        ta[i] = i % na;
    }
    for (int i = 0; i < c1->b->order; ++i) {
        sb[i] = i / nb;
        tb[i] = i % nb;
    }
    std::vector<int> da(na), db(nb);
    for (int i = 0; i < na; ++i) da[i] = i * na + i;
    for (int i = 0; i < nb; ++i) db[i] = i * nb + i;
    XModMorphism s{c1, x, GroupHom{c1->a, x->a, std::move(sa)}, GroupHom{c1->b, x->b, std::move(sb)}};
    XModMorphism t{c1, x, GroupHom{c1->a, x->a, std::move(ta)}, GroupHom{c1->b, x->b, std::move(tb)}};
    XModMorphism eps{x, c1, GroupHom{x->a, c1->a, std::move(da)}, GroupHom{x->b, c1->b, std::move(db)}};
    return make_catxmod(c1, x, std::move(s), std::move(t), std::move(eps), name);
}

CatPtr discrete_catxmod(XModPtr x, std::string name) {
    if (name.empty()) name = "discrete_" + x->name;
    XModMorphism id = identity_xmod_morphism(x);
    return make_catxmod(x, x, id, id, id, name);
}

int catxmod_compose_a(const CatXMod& c, int a1, int a1p) {
    GroupGroupoid ga = a_side_groupoid(c);
    return groupoid_compose(ga, a1, a1p);
}

int catxmod_compose_b(const CatXMod& c, int b1, int b1p) {
    GroupGroupoid gb = b_side_groupoid(c);
    return groupoid_compose(gb, b1, b1p);
}

int catxmod_inverse_a(const CatXMod& c, int a1) {
    GroupGroupoid ga = a_side_groupoid(c);
    return groupoid_inverse(ga, a1);
}

int catxmod_inverse_b(const CatXMod& c, int b1) {
    GroupGroupoid gb = b_side_groupoid(c);
    return groupoid_inverse(gb, b1);
}

CheckReport check_catxmod_morphism(const CatXModMorphism& f) {
    CheckReport r;
    const CatXMod& c = *f.source;
    const CatXMod& d = *f.target;
    if (!same_group(*f.f1.f_a.dom, *c.c1->a) || !same_group(*f.f1.f_a.cod, *d.c1->a) ||
        !same_group(*f.f1.f_b.dom, *c.c1->b) || !same_group(*f.f1.f_b.cod, *d.c1->b) ||
        !same_group(*f.f0.f_a.dom, *c.c0->a) || !same_group(*f.f0.f_a.cod, *d.c0->a) ||
        !same_group(*f.f0.f_b.dom, *c.c0->b) || !same_group(*f.f0.f_b.cod, *d.c0->b))
        return r.fail("ShapeError", {});
    if (!r.absorb(check_xmod_morphism(f.f1), "f1.")) return r;
    if (!r.absorb(check_xmod_morphism(f.f0), "f0.")) return r;

    for (int x = 0; x < c.c1->a->order; ++x) {
        ++r.checks;
        if (f.f0.f_a(c.s.f_a(x)) != d.s.f_a(f.f1.f_a(x))) return r.fail("SourceSquareFail", {x});
        ++r.checks;
        if (f.f0.f_a(c.t.f_a(x)) != d.t.f_a(f.f1.f_a(x))) return r.fail("TargetSquareFail", {x});
    }
    for (int x = 0; x < c.c1->b->order; ++x) {
        ++r.checks;
        if (f.f0.f_b(c.s.f_b(x)) != d.s.f_b(f.f1.f_b(x))) return r.fail("SourceSquareFail", {x});
        ++r.checks;
        if (f.f0.f_b(c.t.f_b(x)) != d.t.f_b(f.f1.f_b(x))) return r.fail("TargetSquareFail", {x});
    }
    for (int y = 0; y < c.c0->a->order; ++y) {
        ++r.checks;
        if (f.f1.f_a(c.eps.f_a(y)) != d.eps.f_a(f.f0.f_a(y))) return r.fail("IdentitySquareFail", {y});
    }
    for (int y = 0; y < c.c0->b->order; ++y) {
        ++r.checks;
        if (f.f1.f_b(c.eps.f_b(y)) != d.eps.f_b(f.f0.f_b(y))) return r.fail("IdentitySquareFail", {y});
    }

    GroupGroupoid ga = a_side_groupoid(c), gb = b_side_groupoid(c);
    GroupGroupoid ha = a_side_groupoid(d), hb = b_side_groupoid(d);
    for (const auto& [x, y] : composable_pairs(c.s.f_a, c.t.f_a)) {
        ++r.checks;
        if (f.f1.f_a(compose_raw(ga, x, y)) != compose_raw(ha, f.f1.f_a(x), f.f1.f_a(y)))
            return r.fail("CompositionPreservationFail", {x, y});
    }
    for (const auto& [x, y] : composable_pairs(c.s.f_b, c.t.f_b)) {
        ++r.checks;
        if (f.f1.f_b(compose_raw(gb, x, y)) != compose_raw(hb, f.f1.f_b(x), f.f1.f_b(y)))
            return r.fail("CompositionPreservationFail", {x, y});
    }
    return r;
}

CatXModMorphism identity_catxmod_morphism(CatPtr c) {
    return CatXModMorphism{c, c, identity_xmod_morphism(c->c1), identity_xmod_morphism(c->c0)};
}

bool is_bijective(const CatXModMorphism& f) { return is_bijective(f.f1) && is_bijective(f.f0); }

}  // namespace xalg
