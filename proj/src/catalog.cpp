#include "catalog.hpp"

#include <vector>

namespace xalg {

namespace {

Catalog build_catalog() {
    SizeLimitFloor floor(64);
    Catalog c;
    for (int n = 1; n <= 8; ++n) {
        GroupPtr g = make_cyclic(n);
        c.groups[g->name] = g;
    }
    c.groups["klein4"] = make_klein4();
    c.groups["sym3"] = make_sym3();
    c.groups["dih4"] = make_dih4();
    c.groups["quat8"] = make_quat8();

    GroupPtr sym3 = c.groups["sym3"];
    GroupPtr z2 = c.groups["z2"];
    GroupPtr z3 = c.groups["z3"];
    GroupPtr z4 = c.groups["z4"];

    // Element 3 of sym3 is a 3-cycle; it generates the alternating subgroup.
    Subgroup a3 = generated_subgroup(sym3, {3});

    c.xmods["incl_a3_s3"] = inclusion_xmod(sym3, a3, "incl_a3_s3");
    c.xmods["conj_s3"] =
        make_xmod(sym3, sym3, identity_hom(sym3), conjugation_action(sym3), "conj_s3");
    c.xmods["inner_s3"] = inner_automorphism_xmod(sym3, "inner_s3");
    c.xmods["trivmod_z3_z2"] = trivial_module_xmod(
        z3, z2, make_action(z2, z3, {{0, 1, 2}, {0, 2, 1}}), "trivmod_z3_z2");
    c.xmods["incl_2z4_z4"] = inclusion_xmod(z4, make_subgroup(z4, {0, 2}), "incl_2z4_z4");

    for (const auto& [name, x] : c.xmods) {
        c.ggpds["psibs_" + name] = xmod_to_groupoid(*x);
        c.catxmods["pair_" + name] = pair_catxmod(x, "pair_" + name);
        c.catxmods["discrete_" + name] = discrete_catxmod(x, "discrete_" + name);
    }

    // Square names shorten the underlying crossed module's name.
    const std::map<std::string, std::string> square_key = {
        {"incl_a3_s3", "a3_s3"},   {"conj_s3", "sym3"},        {"inner_s3", "inner_s3"},
        {"trivmod_z3_z2", "z3_z2"}, {"incl_2z4_z4", "2z4_z4"},
    };
    for (const auto& [name, x] : c.xmods) {
        const std::string& key = square_key.at(name);
        c.xsqs["identity_sq_" + key] = identity_square(x, "identity_sq_" + key);
        c.xsqs["trivial_sq_" + key] = trivial_square(x, "trivial_sq_" + key);
    }

    // One normal-inclusion square per crossed module, over a canonical normal
    // subcrossed module.
    {
        XModPtr x = c.xmods["incl_a3_s3"];
        std::vector<int> all_a(x->a->order);
        for (int i = 0; i < x->a->order; ++i) all_a[i] = i;
        SubXMod s{x, make_subgroup(x->a, all_a), a3};
        c.xsqs["normsq_a3_s3"] = normal_inclusion_square(x, s, "normsq_a3_s3");
    }
    {
        XModPtr x = c.xmods["conj_s3"];
        std::vector<int> all_b(x->b->order);
        for (int i = 0; i < x->b->order; ++i) all_b[i] = i;
        SubXMod s{x, a3, make_subgroup(x->b, all_b)};
        c.xsqs["normsq_sym3"] = normal_inclusion_square(x, s, "normsq_sym3");
    }
    {
        XModPtr x = c.xmods["inner_s3"];
        std::vector<int> all_b(x->b->order);
        for (int i = 0; i < x->b->order; ++i) all_b[i] = i;
        SubXMod s{x, a3, make_subgroup(x->b, all_b)};
        c.xsqs["normsq_inner_s3"] = normal_inclusion_square(x, s, "normsq_inner_s3");
    }
    {
        XModPtr x = c.xmods["trivmod_z3_z2"];
        std::vector<int> all_a(x->a->order);
        for (int i = 0; i < x->a->order; ++i) all_a[i] = i;
        SubXMod s{x, make_subgroup(x->a, all_a), make_subgroup(x->b, {0})};
        c.xsqs["normsq_z3_z2"] = normal_inclusion_square(x, s, "normsq_z3_z2");
    }
    {
        XModPtr x = c.xmods["incl_2z4_z4"];
        std::vector<int> all_a(x->a->order);
        for (int i = 0; i < x->a->order; ++i) all_a[i] = i;
        SubXMod s{x, make_subgroup(x->a, all_a), make_subgroup(x->b, {0, 2})};
        c.xsqs["normsq_2z4_z4"] = normal_inclusion_square(x, s, "normsq_2z4_z4");
    }

    for (const auto& [n, g] : c.groups) c.toplevel["groups"].push_back(n);
    for (const auto& [n, g] : c.xmods) c.toplevel["xmods"].push_back(n);
    for (const auto& [n, g] : c.ggpds) c.toplevel["ggpds"].push_back(n);
    for (const auto& [n, g] : c.catxmods) c.toplevel["catxmods"].push_back(n);
    for (const auto& [n, g] : c.xsqs) c.toplevel["xsqs"].push_back(n);
    return c;
}

}  // namespace

const Catalog& catalog() {
    static const Catalog c = build_catalog();
    return c;
}

}  // namespace xalg
