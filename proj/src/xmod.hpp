#pragma once

// Crossed modules (A, B, alpha, action) with the two defining axioms
//   CM1:  alpha(b·a) = b ∘ alpha(a) ∘ b⁻¹
//   CM2:  alpha(a)·a' = a ∘ a' ∘ a⁻¹   (Peiffer identity)
// together with their morphisms, sub/normal substructures, kernels, images
// and pullbacks.

#include <memory>
#include <string>
#include <vector>

#include "group.hpp"

namespace xalg {

struct CrossedModule {
    GroupPtr a, b;
    GroupHom alpha;     // A -> B
    GroupAction action; // B acting on A
    std::string name;

    int act(int bb, int aa) const { return action.act(bb, aa); }
};

using XModPtr = std::shared_ptr<const CrossedModule>;

// CM1 and CM2 over all pairs; assumes the components are already valid.
CheckReport check_xmod(const CrossedModule& x);

// Component shapes + group/hom/action axioms + CM1/CM2, with prefixed tags.
CheckReport full_check_xmod(const CrossedModule& x);

XModPtr make_xmod(GroupPtr a, GroupPtr b, GroupHom alpha, GroupAction action,
                  std::string name = "");

// (N, G, inclusion, conjugation) for a normal subgroup N of G.
XModPtr inclusion_xmod(GroupPtr g, const Subgroup& n, std::string name = "");

// (G, Aut(G), g -> conjugation-by-g, evaluation action).
XModPtr inner_automorphism_xmod(GroupPtr g, std::string name = "");

// (M, G, zero map, act) for an abelian module M.
XModPtr trivial_module_xmod(GroupPtr m, GroupPtr g, const GroupAction& act,
                            std::string name = "");

struct XModMorphism {
    XModPtr source, target;
    GroupHom f_a, f_b;
};

CheckReport check_xmod_morphism(const XModMorphism& f);
XModMorphism make_xmod_morphism(XModPtr source, XModPtr target, GroupHom f_a, GroupHom f_b);
XModMorphism identity_xmod_morphism(XModPtr x);
bool is_bijective(const XModMorphism& f);

struct SubXMod {
    XModPtr ambient;
    Subgroup s_members;  // of ambient->a
    Subgroup t_members;  // of ambient->b
};

CheckReport check_subxmod(const SubXMod& s);
CheckReport check_normal_subxmod(const SubXMod& s);

SubXMod kernel_xmod(const XModMorphism& f);
SubXMod image_xmod(const XModMorphism& f);

// The sub data reindexed as a crossed module of its own, with the inclusion.
struct SubXModAsXMod {
    XModPtr xmod;
    XModMorphism inclusion;
};
SubXModAsXMod subxmod_to_xmod(const SubXMod& s, std::string name = "");

// Componentwise product (A×A', B×B', alpha×alpha') with the product action.
XModPtr product_xmod(XModPtr x, XModPtr y, std::string name = "");

struct XModPullback {
    XModPtr xmod;
    XModMorphism proj1, proj2;
};

// Pullback over a shared target: (A ×_f,g C, B ×_f,g D, alpha×gamma) with the
// componentwise action.
XModPullback pullback_xmod(const XModMorphism& f, const XModMorphism& g);

}  // namespace xalg
