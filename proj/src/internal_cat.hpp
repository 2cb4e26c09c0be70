#pragma once

// Internal categories in Groups (group-groupoids) and in the category of
// crossed modules. Composition is always derived from (s, t, eps):
//   b∘a = b ∘ eps(s(b))⁻¹ ∘ a        with s(b) = t(a),
//   a⁻¹ = eps(s(a)) ∘ -a ∘ eps(t(a))  (groupoid inverse),
// never stored; explicit composition tables supplied by callers are only
// validated against the derived one.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xmod.hpp"

namespace xalg {

struct GroupGroupoid {
    GroupPtr g1, g0;
    GroupHom s, t;   // G1 -> G0
    GroupHom eps;    // G0 -> G1
    std::string name;
};

using GgpdPtr = std::shared_ptr<const GroupGroupoid>;

// Sections, kernel commutation, the category axioms on the pullback of
// composable pairs, and the interchange law (derived m is a homomorphism).
CheckReport check_groupoid(const GroupGroupoid& g);

// Component group/hom axioms first, then check_groupoid.
CheckReport full_check_groupoid(const GroupGroupoid& g);

GgpdPtr make_groupoid(GroupPtr g1, GroupPtr g0, GroupHom s, GroupHom t, GroupHom eps,
                      std::string name = "");

// Derived composition b∘a; both group-operation forms are computed and must
// agree. Throws NotComposable when s(b) != t(a).
int groupoid_compose(const GroupGroupoid& g, int b, int a);
int groupoid_inverse(const GroupGroupoid& g, int a);

// Validates a user-supplied composition table against the derived one
// (entries -1 exactly at non-composable cells).
CheckReport check_explicit_composition(const GroupGroupoid& g,
                                       const std::vector<std::vector<int>>& m);

// Brown–Spencer: crossed module (ker s, G0, t|, conjugation-by-identities).
XModPtr groupoid_to_xmod(const GroupGroupoid& g);

// Brown–Spencer: group-groupoid on A⋊B with s(a,b) = b, t(a,b) = alpha(a)∘b,
// eps(b) = (0,b).
GgpdPtr xmod_to_groupoid(const CrossedModule& x);

// Canonical relabeling g -> (g ∘ eps(s(g))⁻¹, s(g)) of the arrows of G onto
// the arrows of xmod_to_groupoid(groupoid_to_xmod(G)).
std::vector<int> groupoid_roundtrip_arrow_map(const GroupGroupoid& g);

// Structure isomorphism check: bijective homs commuting with s, t, eps.
CheckReport check_groupoid_iso(const GroupGroupoid& g, const GroupGroupoid& h,
                               const std::vector<int>& arrow_map,
                               const std::vector<int>& object_map);

struct CatXMod {
    XModPtr c1, c0;
    XModMorphism s, t;  // C1 -> C0
    XModMorphism eps;   // C0 -> C1
    std::string name;
};

using CatPtr = std::shared_ptr<const CatXMod>;

GroupGroupoid a_side_groupoid(const CatXMod& c);
GroupGroupoid b_side_groupoid(const CatXMod& c);

// Sections, both component group-groupoids, the nine structural conditions,
// the inverse-compatibility law (b1·a1)⁻¹ = b1⁻¹·a1⁻¹, and that the derived
// inverse pair (n_A, n_B) is a crossed module morphism.
CheckReport check_catxmod(const CatXMod& c);

// Component crossed modules, the three structure morphisms, then
// check_catxmod.
CheckReport full_check_catxmod(const CatXMod& c);

CatPtr make_catxmod(XModPtr c1, XModPtr c0, XModMorphism s, XModMorphism t, XModMorphism eps,
                    std::string name = "");

// C1 = (A×A, B×B, alpha×alpha), C0 = X, s = first projection, t = second,
// eps = diagonal.
CatPtr pair_catxmod(XModPtr x, std::string name = "");

// C1 = C0 = X with identity structure maps.
CatPtr discrete_catxmod(XModPtr x, std::string name = "");

int catxmod_compose_a(const CatXMod& c, int a1, int a1p);
int catxmod_compose_b(const CatXMod& c, int b1, int b1p);
int catxmod_inverse_a(const CatXMod& c, int a1);
int catxmod_inverse_b(const CatXMod& c, int b1);

struct CatXModMorphism {
    CatPtr source, target;
    XModMorphism f1, f0;
};

// The four compatibility squares plus preservation of derived composition.
CheckReport check_catxmod_morphism(const CatXModMorphism& f);
CatXModMorphism identity_catxmod_morphism(CatPtr c);
bool is_bijective(const CatXModMorphism& f);

}  // namespace xalg
