#include <doctest.h>

#include "catalog.hpp"
#include "internal_cat.hpp"

using namespace xalg;

namespace {

GgpdPtr pair_groupoid_of_z3() {
    GroupPtr z3 = make_cyclic(3);
    GroupPtr g1 = direct_product(z3, z3);
    std::vector<int> s(9), t(9), eps(3);
    for (int i = 0; i < 9; ++i) {
        s[i] = i / 3;
        t[i] = i % 3;
    }
    for (int i = 0; i < 3; ++i) eps[i] = i * 3 + i;
    return make_groupoid(g1, z3, GroupHom{g1, z3, s}, GroupHom{g1, z3, t}, GroupHom{z3, g1, eps},
                         "pair_z3");
}

std::vector<std::pair<int, int>> composable(const GroupGroupoid& g) {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < g.g1->order; ++b)
        for (int a = 0; a < g.g1->order; ++a)
            if (g.s(b) == g.t(a)) out.emplace_back(b, a);
    return out;
}

}  // namespace

TEST_CASE("discrete groupoid on z2 and the pair groupoid of z3 validate") {
    GroupPtr z2 = make_cyclic(2);
    GgpdPtr discrete =
        make_groupoid(z2, z2, identity_hom(z2), identity_hom(z2), identity_hom(z2), "disc_z2");
    CHECK(full_check_groupoid(*discrete).ok);
    CHECK(full_check_groupoid(*pair_groupoid_of_z3()).ok);
}

TEST_CASE("zero structure maps on a nonabelian arrow group fail kernel commutation") {
    GroupPtr s3 = make_sym3();
    GroupPtr one = make_trivial();
    GgpdPtr g = make_groupoid(s3, one, zero_hom(s3, one), zero_hom(s3, one), zero_hom(one, s3),
                              "bad");
    CheckReport r = check_groupoid(*g);
    CHECK(!r.ok);
    CHECK(r.tag == "KernelCommutationFail");
    REQUIRE(r.witness.size() == 2);
    CHECK(s3->op(r.witness[0], r.witness[1]) != s3->op(r.witness[1], r.witness[0]));
}

TEST_CASE("groupoids built from every catalog crossed module validate") {
    for (const auto& [name, g] : catalog().ggpds) {
        CAPTURE(name);
        CHECK(full_check_groupoid(*g).ok);
    }
}

TEST_CASE("derived composition matches the semidirect composition rule") {
    // In the arrow group of the inclusion 2Z4 -> Z4, (1,2)∘(1,0) = (0,0).
    GgpdPtr g = catalog().ggpds.at("psibs_incl_2z4_z4");
    CHECK(g->g1->order == 8);
    int lhs = 1 * 4 + 2, rhs = 1 * 4 + 0;
    CHECK(g->s(lhs) == g->t(rhs));
    CHECK(groupoid_compose(*g, lhs, rhs) == 0);

    // Composing with identity arrows is the identity law.
    for (int a = 0; a < g->g1->order; ++a) {
        CHECK(groupoid_compose(*g, g->eps(g->t(a)), a) == a);
        CHECK(groupoid_compose(*g, a, g->eps(g->s(a))) == a);
    }

    try {
        groupoid_compose(*g, 0, 1);
        FAIL("expected NotComposable");
    } catch (const Error& e) {
        CHECK(e.tag() == "NotComposable");
        CHECK(e.witness() == std::vector<int>{g->s.map[0], g->t.map[1]});
    }
}

TEST_CASE("psi composition is (a'+a, b) on every composable pair of every catalog module") {
    for (const auto& [name, x] : catalog().xmods) {
        CAPTURE(name);
        GgpdPtr g = catalog().ggpds.at("psibs_" + name);
        int nb = x->b->order;
        for (const auto& [u, v] : composable(*g)) {
            int expected = x->a->op(u / nb, v / nb) * nb + v % nb;
            CHECK(groupoid_compose(*g, u, v) == expected);
        }
    }
}

TEST_CASE("groupoid inverses compose to identity arrows on both sides") {
    GgpdPtr g = catalog().ggpds.at("psibs_conj_s3");
    for (int a = 0; a < g->g1->order; ++a) {
        int inv = groupoid_inverse(*g, a);
        CHECK(g->s(inv) == g->t(a));
        CHECK(g->t(inv) == g->s(a));
        CHECK(groupoid_compose(*g, a, inv) == g->eps(g->t(a)));
        CHECK(groupoid_compose(*g, inv, a) == g->eps(g->s(a)));
        // Identity arrows are their own groupoid inverses.
        if (a == g->eps(g->s(a))) CHECK(inv == a);
        // Group inverse and groupoid inverse agree exactly on arrows with
        // source and target at the identity object.
        if (g->s(a) == 0 && g->t(a) == 0) CHECK(inv == g->g1->inv(a));
    }
    // They differ somewhere on this groupoid.
    bool differ = false;
    for (int a = 0; a < g->g1->order; ++a)
        if (groupoid_inverse(*g, a) != g->g1->inv(a)) differ = true;
    CHECK(differ);
}

TEST_CASE("phi of a discrete groupoid has trivial kernel part") {
    GroupPtr z2 = make_cyclic(2);
    GgpdPtr discrete =
        make_groupoid(z2, z2, identity_hom(z2), identity_hom(z2), identity_hom(z2), "disc_z2");
    XModPtr x = groupoid_to_xmod(*discrete);
    CHECK(x->a->order == 1);
    CHECK(x->b->order == 2);
}

TEST_CASE("phi of the pair groupoid of z3 is the identity-like crossed module on z3") {
    XModPtr x = groupoid_to_xmod(*pair_groupoid_of_z3());
    CHECK(x->a->order == 3);
    CHECK(x->a->cayley == make_cyclic(3)->cayley);
    std::vector<int> id = {0, 1, 2};
    CHECK(x->alpha.map == id);
}

TEST_CASE("phi after psi returns the original crossed module on the nose") {
    for (const auto& [name, x] : catalog().xmods) {
        CAPTURE(name);
        XModPtr back = groupoid_to_xmod(*catalog().ggpds.at("psibs_" + name));
        CHECK(back->a->cayley == x->a->cayley);
        CHECK(back->b->cayley == x->b->cayley);
        CHECK(back->alpha.map == x->alpha.map);
        CHECK(back->action.table == x->action.table);
    }
}

TEST_CASE("psi after phi is isomorphic to the original groupoid") {
    for (const auto& [name, g] : catalog().ggpds) {
        CAPTURE(name);
        GgpdPtr again = xmod_to_groupoid(*groupoid_to_xmod(*g));
        std::vector<int> arrows = groupoid_roundtrip_arrow_map(*g);
        std::vector<int> objects(g->g0->order);
        for (int i = 0; i < g->g0->order; ++i) objects[i] = i;
        CHECK(check_groupoid_iso(*g, *again, arrows, objects).ok);
    }
    // Also for a groupoid that did not come from psi.
    GgpdPtr pair = pair_groupoid_of_z3();
    GgpdPtr again = xmod_to_groupoid(*groupoid_to_xmod(*pair));
    std::vector<int> objects = {0, 1, 2};
    CHECK(check_groupoid_iso(*pair, *again, groupoid_roundtrip_arrow_map(*pair), objects).ok);
}

TEST_CASE("psi of a trivial-module crossed module is the discrete groupoid on B") {
    GroupPtr one = make_trivial();
    GroupPtr b = make_sym3();
    XModPtr x = make_xmod(one, b, zero_hom(one, b), trivial_action(b, one), "triv_s3");
    GgpdPtr g = xmod_to_groupoid(*x);
    CHECK(g->g1->order == b->order);
    for (int i = 0; i < g->g1->order; ++i) {
        CHECK(g->s(i) == g->t(i));
        CHECK(g->eps(g->s(i)) == i);
    }
}

TEST_CASE("explicit composition tables are validated against the derived one") {
    GgpdPtr g = catalog().ggpds.at("psibs_incl_2z4_z4");
    int n = g->g1->order;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (g->s(b) == g->t(a)) m[b][a] = groupoid_compose(*g, b, a);
    CHECK(check_explicit_composition(*g, m).ok);

    bool perturbed = false;
    for (int b = 0; b < n && !perturbed; ++b)
        for (int a = 0; a < n && !perturbed; ++a)
            if (m[b][a] != -1) {
                auto wrong = m;
                wrong[b][a] = (wrong[b][a] + 1) % n;
                CheckReport r = check_explicit_composition(*g, wrong);
                CHECK(!r.ok);
                CHECK(r.tag == "ExplicitCompositionMismatch");
                CHECK(r.witness == std::vector<int>{b, a});
                perturbed = true;
            }
    CHECK(perturbed);
}

TEST_CASE("every catalog internal category passes the full checker") {
    for (const auto& [name, c] : catalog().catxmods) {
        CAPTURE(name);
        CHECK(full_check_catxmod(*c).ok);
    }
}

TEST_CASE("pair composition is (a1,a2)∘(a,a1) = (a,a2) exhaustively") {
    CatPtr c = catalog().catxmods.at("pair_conj_s3");
    int na = c->c0->a->order;
    GroupGroupoid ga = a_side_groupoid(*c);
    for (int a = 0; a < na; ++a)
        for (int a1 = 0; a1 < na; ++a1)
            for (int a2 = 0; a2 < na; ++a2) {
                int left = a1 * na + a2, right = a * na + a1;
                CHECK(groupoid_compose(ga, left, right) == a * na + a2);
            }
}

TEST_CASE("pair arrow groups have square cardinality") {
    GroupPtr z3 = make_cyclic(3);
    std::vector<int> all = {0, 1, 2};
    XModPtr conj_z3 = inclusion_xmod(z3, make_subgroup(z3, all), "conj_z3");
    CatPtr c = pair_catxmod(conj_z3);
    CHECK(c->c1->a->order == 9);
    CHECK(c->c1->b->order == 9);
    CHECK(full_check_catxmod(*c).ok);
}

TEST_CASE("discrete internal category composes every arrow with itself") {
    CatPtr c = catalog().catxmods.at("discrete_conj_s3");
    for (int a = 0; a < c->c1->a->order; ++a) CHECK(catxmod_compose_a(*c, a, a) == a);
    // A discrete structure has trivial upstairs kernels.
    CHECK(hom_kernel(c->s.f_a).members == std::vector<int>{0});
}

TEST_CASE("a zero identity-object map breaks the section law") {
    CatPtr pair = catalog().catxmods.at("pair_conj_s3");
    XModMorphism broken_eps{pair->c0, pair->c1, zero_hom(pair->c0->a, pair->c1->a),
                            zero_hom(pair->c0->b, pair->c1->b)};
    CatXMod broken{pair->c1, pair->c0, pair->s, pair->t, broken_eps, "broken"};
    CheckReport r = check_catxmod(broken);
    CHECK(!r.ok);
    CHECK(r.tag == "IdentitySectionFailA");
}

TEST_CASE("both composition orderings and both inverse forms agree everywhere") {
    for (const auto& [name, c] : catalog().catxmods) {
        CAPTURE(name);
        GroupGroupoid ga = a_side_groupoid(*c);
        const FiniteGroup& a1 = *c->c1->a;
        for (const auto& [u, v] : composable(ga)) {
            int e = ga.eps(ga.s(u));
            int first = a1.op(a1.op(u, a1.inv(e)), v);
            int second = a1.op(a1.op(v, a1.inv(e)), u);
            CHECK(first == second);
            CHECK(groupoid_compose(ga, u, v) == first);
        }
        for (int u = 0; u < a1.order; ++u) {
            int es = ga.eps(ga.s(u)), et = ga.eps(ga.t(u));
            CHECK(a1.op(a1.op(es, a1.inv(u)), et) == a1.op(a1.op(et, a1.inv(u)), es));
        }
    }
}

TEST_CASE("groupoid inverses commute with the action on all arrow pairs") {
    for (const auto& [name, c] : catalog().catxmods) {
        CAPTURE(name);
        GroupGroupoid ga = a_side_groupoid(*c);
        GroupGroupoid gb = b_side_groupoid(*c);
        for (int bb = 0; bb < c->c1->b->order; ++bb)
            for (int aa = 0; aa < c->c1->a->order; ++aa)
                CHECK(groupoid_inverse(ga, c->c1->act(bb, aa)) ==
                      c->c1->act(groupoid_inverse(gb, bb), groupoid_inverse(ga, aa)));
    }
}

TEST_CASE("internal functors between pair and discrete structures") {
    XModPtr x = catalog().xmods.at("incl_a3_s3");
    CatPtr pair = catalog().catxmods.at("pair_incl_a3_s3");
    CatPtr discrete = catalog().catxmods.at("discrete_incl_a3_s3");

    CHECK(check_catxmod_morphism(identity_catxmod_morphism(pair)).ok);

    // Diagonal-induced functor discrete -> pair.
    CatXModMorphism diag{discrete, pair,
                         XModMorphism{discrete->c1, pair->c1, pair->eps.f_a, pair->eps.f_b},
                         identity_xmod_morphism(x)};
    CHECK(check_catxmod_morphism(diag).ok);

    // Collapsing functor pair -> discrete with zero components.
    CatXModMorphism zero{pair, discrete,
                         XModMorphism{pair->c1, discrete->c1, zero_hom(pair->c1->a, discrete->c1->a),
                                      zero_hom(pair->c1->b, discrete->c1->b)},
                         XModMorphism{pair->c0, discrete->c0, zero_hom(pair->c0->a, discrete->c0->a),
                                      zero_hom(pair->c0->b, discrete->c0->b)}};
    CHECK(check_catxmod_morphism(zero).ok);

    // Swapping the pair coordinates without swapping s and t fails the
    // source square at the first arrow with distinct endpoints.
    int na = x->a->order, nb = x->b->order;
    std::vector<int> swap_a(na * na), swap_b(nb * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) swap_a[i * na + j] = j * na + i;
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) swap_b[i * nb + j] = j * nb + i;
    CatXModMorphism swapped{pair, pair,
                            XModMorphism{pair->c1, pair->c1, GroupHom{pair->c1->a, pair->c1->a, swap_a},
                                         GroupHom{pair->c1->b, pair->c1->b, swap_b}},
                            identity_xmod_morphism(x)};
    CheckReport r = check_catxmod_morphism(swapped);
    CHECK(!r.ok);
    CHECK(r.tag == "SourceSquareFail");
    CHECK(r.witness == std::vector<int>{1});
}
