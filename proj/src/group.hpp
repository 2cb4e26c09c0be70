#pragma once

// Finite groups as Cayley tables over element indices 0..order-1, plus the
// constructions everything else builds on: homomorphisms, left actions by
// automorphisms, subgroups, (semi)direct products, split extensions and their
// derived actions, pullbacks, automorphism groups and isomorphism search.
//
// Conventions, fixed for serialization and cross-checks:
//   - index 0 is always the two-sided identity; builders reindex if needed,
//   - pairs are encoded row-major with the first ("space"/"A") coordinate
//     major: (x, y) over carriers (X, Y) becomes index x*|Y| + y.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace xalg {

struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> cayley;  // cayley[x][y] = x∘y
    std::string name;
    std::vector<int> inverse;  // inverse[x], -1 when the table has none

    int op(int x, int y) const { return cayley[x][y]; }
    int inv(int x) const { return inverse[x]; }
    int conj(int g, int x) const { return op(op(g, x), inv(g)); }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Axiom scan: entry range, identity at index 0, two-sided inverses,
// associativity over all order^3 triples. Also enforces the size limit.
CheckReport check_group(const FiniteGroup& g);

// Shape-level construction (square table, inverse cache best-effort).
// No axiom is checked; check_group does that.
GroupPtr raw_group(std::vector<std::vector<int>> table, std::string name = "");

// raw_group + check_group, throwing Error on the first violated axiom.
GroupPtr validate_group(std::vector<std::vector<int>> table, std::string name = "");

bool same_group(const FiniteGroup& a, const FiniteGroup& b);
bool is_abelian(const FiniteGroup& g, std::pair<int, int>* witness = nullptr);
int element_order(const FiniteGroup& g, int x);

GroupPtr make_trivial();
GroupPtr make_cyclic(int n);
GroupPtr make_klein4();
GroupPtr make_sym3();
GroupPtr make_dih4();
GroupPtr make_quat8();

struct GroupHom {
    GroupPtr dom, cod;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
};

CheckReport check_hom(const GroupHom& f);
GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<int> map);
GroupHom identity_hom(GroupPtr g);
GroupHom zero_hom(GroupPtr dom, GroupPtr cod);
GroupHom compose(const GroupHom& f, const GroupHom& g);  // x -> f(g(x))
bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);
bool is_bijective(const GroupHom& f);
bool same_hom(const GroupHom& a, const GroupHom& b);

// Left action of `actor` on `space`, every actor element acting as an
// automorphism. Stored as a full table even when induced.
struct GroupAction {
    GroupPtr actor, space;
    std::vector<std::vector<int>> table;  // table[b][a] = b·a

    int act(int b, int a) const { return table[b][a]; }
};

CheckReport check_action(const GroupAction& act);
GroupAction make_action(GroupPtr actor, GroupPtr space, std::vector<std::vector<int>> table);
GroupAction trivial_action(GroupPtr actor, GroupPtr space);
GroupAction conjugation_action(GroupPtr g);
bool same_action(const GroupAction& a, const GroupAction& b);

struct Subgroup {
    GroupPtr ambient;
    std::vector<int> members;  // sorted, contains 0, closed under op and inverse
};

Subgroup make_subgroup(GroupPtr g, std::vector<int> members);
Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens);
bool subgroup_contains(const Subgroup& s, int x);
int subgroup_index(const Subgroup& s, int x);  // -1 when absent

// Reindexes the members as a group of their own; the hom is the inclusion.
std::pair<GroupPtr, GroupHom> subgroup_to_group(const Subgroup& s, std::string name = "");

struct NormalityReport {
    bool normal = true;
    int conjugator = -1;
    int member = -1;
};
NormalityReport is_normal(const Subgroup& s);

Subgroup hom_kernel(const GroupHom& f);
Subgroup hom_image(const GroupHom& f);

GroupPtr direct_product(GroupPtr x, GroupPtr y, std::string name = "");

// A ⋊ B for a left action of B on A: (a,b)∘(a',b') = (a ∘ b·a', b∘b').
struct SemidirectProduct {
    GroupPtr group;
    GroupHom inj_space;   // a -> (a, 0)
    GroupHom inj_actor;   // b -> (0, b)
    GroupHom proj_actor;  // (a, b) -> b
};
SemidirectProduct semidirect_product(const GroupAction& act, std::string name = "");

// Action of cod(p) on dom(i) by b·a = i⁻¹(s(b) ∘ i(a) ∘ s(b)⁻¹), for a split
// short exact sequence (i, p, s). Throws NotSplit / NotExact / NotClosed.
GroupAction derived_action(GroupPtr e, const GroupHom& i, const GroupHom& p, const GroupHom& s);

struct SplitExtension {
    GroupPtr e;
    GroupHom i, p, s;
};

// E = A ⋊ A under conjugation with i(a) = (a,0), p(a,a1) = a1, s(a) = (0,a);
// its derived action is conjugation.
SplitExtension conjugation_extension(GroupPtr a);

struct PullbackGroup {
    GroupPtr group;
    GroupHom pi1, pi2;
    std::vector<std::pair<int, int>> elements;  // pullback index -> (x, y)
};

// Subgroup of dom(f) × dom(g) of pairs with f(x) = g(y).
PullbackGroup pullback_group(const GroupHom& f, const GroupHom& g);

struct AutomorphismGroup {
    GroupPtr group;                      // Aut(G) under composition
    std::vector<std::vector<int>> maps;  // maps[i] = i-th automorphism, sorted
    GroupAction eval;                    // psi·g = psi(g)
};

// All automorphisms of G, ordered lexicographically on their map arrays
// (which puts the identity at index 0), with the evaluation action.
AutomorphismGroup automorphism_group(GroupPtr g);

// First bijective homomorphism under lexicographic generator-image
// backtracking, or nullopt. G vs G always finds the identity first.
std::optional<GroupHom> iso_search(GroupPtr g, GroupPtr h);
std::vector<GroupHom> all_isomorphisms(GroupPtr g, GroupPtr h);

}  // namespace xalg
