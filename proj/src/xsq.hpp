#pragma once

// Crossed squares (L, M, N, P) with boundary maps lambda: L->M,
// lambda_p: L->N, mu: M->P, nu: N->P, left P-actions on L, M, N, and the
// pairing h: M×N -> L, subject to the five axioms of the definition. The
// actions of M and N on the other corners are induced through mu and nu and
// derived on demand, never stored.
//
// The functors between internal categories in crossed modules and crossed
// squares and their natural isomorphisms live here too; their outputs are
// theorem-backed, so construction re-checks them and any failure aborts as an
// internal error.

#include <memory>
#include <string>
#include <vector>

#include "internal_cat.hpp"

namespace xalg {

struct CrossedSquare {
    GroupPtr l, m, n, p;
    GroupHom lambda;    // L -> M
    GroupHom lambda_p;  // L -> N
    GroupHom mu;        // M -> P
    GroupHom nu;        // N -> P
    GroupAction act_pl, act_pm, act_pn;
    std::vector<std::vector<int>> h;  // h[m][n], M-major
    std::string name;

    int act_m_on_l(int mm, int ll) const { return act_pl.act(mu(mm), ll); }
    int act_n_on_l(int nn, int ll) const { return act_pl.act(nu(nn), ll); }
    int act_n_on_m(int nn, int mm) const { return act_pm.act(nu(nn), mm); }
    int act_m_on_n(int mm, int nn) const { return act_pn.act(mu(mm), nn); }
};

using XSqPtr = std::shared_ptr<const CrossedSquare>;

// Commutativity of the square plus axioms (i)-(v), exhaustively.
CheckReport check_square(const CrossedSquare& s);

// Component group/hom/action axioms first, then check_square.
CheckReport full_check_square(const CrossedSquare& s);

XSqPtr make_square(CrossedSquare s);  // shape validation only

struct XSqMorphism {
    XSqPtr source, target;
    GroupHom f_l, f_m, f_n, f_p;
};

// Connecting squares (checked in the order lambda, lambda_p, nu, mu), action
// compatibility at every corner, and h-compatibility.
CheckReport check_square_morphism(const XSqMorphism& f);
XSqMorphism identity_square_morphism(XSqPtr s);
bool is_bijective(const XSqMorphism& f);

// L = ker s_A, M = ker s_B, N = A0, P = B0 with h(m, n) = (m·1_n) ∘ 1_n⁻¹.
XSqPtr catxmod_to_square(const CatXMod& c);

// C1 = (L⋊N, M⋊P, lambda×nu), C0 = (N, P, nu); the action of M⋊P on L⋊N is
// (m,p)·(l,n) = (m·(p·l) ∘ h(m, p·n), p·n).
CatPtr square_to_catxmod(const CrossedSquare& s);

// Functor action on morphisms, against already-computed images of the
// endpoints.
XSqMorphism catxmod_to_square_morphism(const CatXModMorphism& f, XSqPtr es, XSqPtr et);
CatXModMorphism square_to_catxmod_morphism(const XSqMorphism& f, CatPtr cs, CatPtr ct);

// Natural isomorphism C -> square_to_catxmod(catxmod_to_square(C)):
// a1 -> (a1 ∘ 1_{s(a1)}⁻¹, s(a1)) on both components, identity below.
CatXModMorphism unit_iso(CatPtr c);

// Natural isomorphism catxmod_to_square(square_to_catxmod(S)) -> S with
// components (pi1, pi1, 1, 1).
XSqMorphism counit_iso(XSqPtr s);

// Checks the unit naturality square U_{C'} ∘ F = psi(eta(F)) ∘ U_C.
bool unit_iso_natural(const CatXModMorphism& f, std::string* diagnostic = nullptr);

// Corners L = A, M = B, N = A, P = B with h(b, a) = (b·a) ∘ a⁻¹.
XSqPtr identity_square(XModPtr x, std::string name = "");

// Corners L = N = trivial, M = A, P = B with mu = alpha and h constant.
XSqPtr trivial_square(XModPtr x, std::string name = "");

// Corners L = S_A, M = S_B, N = A, P = B for a normal subcrossed module,
// with h(t, a) = (t·a) ∘ a⁻¹.
XSqPtr normal_inclusion_square(XModPtr x, const SubXMod& s, std::string name = "");

}  // namespace xalg
