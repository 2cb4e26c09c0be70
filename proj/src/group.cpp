#include "group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace xalg {

namespace {

std::vector<int> best_effort_inverses(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    std::vector<int> inv(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (t[x][y] == 0 && t[y][x] == 0) {
                inv[x] = y;
                break;
            }
        }
    }
    return inv;
}

}  // namespace

CheckReport check_group(const FiniteGroup& g) {
    CheckReport r;
    int n = g.order;
    if (n > size_limit()) return r.fail("SizeLimit", {n, size_limit()});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            ++r.checks;
            int v = g.cayley[x][y];
            if (v < 0 || v >= n) return r.fail("OutOfRange", {x, y});
        }
    for (int y = 0; y < n; ++y) {
        ++r.checks;
        if (g.cayley[0][y] != y) return r.fail("NoIdentity", {y});
    }
    for (int x = 0; x < n; ++x) {
        ++r.checks;
        if (g.cayley[x][0] != x) return r.fail("NoIdentity", {x});
    }
    for (int x = 0; x < n; ++x) {
        ++r.checks;
        bool found = false;
        for (int y = 0; y < n; ++y)
            if (g.cayley[x][y] == 0 && g.cayley[y][x] == 0) {
                found = true;
                break;
            }
        if (!found) return r.fail("NoInverse", {x});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                ++r.checks;
                if (g.cayley[g.cayley[x][y]][z] != g.cayley[x][g.cayley[y][z]])
                    return r.fail("NotAssociative", {x, y, z});
            }
    return r;
}

GroupPtr raw_group(std::vector<std::vector<int>> table, std::string name) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw input_error("ShapeError", "group table is empty");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n)
            throw input_error("ShapeError", "group table is not square");
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->cayley = std::move(table);
    g->name = std::move(name);
    g->inverse = best_effort_inverses(g->cayley);
    return g;
}

GroupPtr validate_group(std::vector<std::vector<int>> table, std::string name) {
    GroupPtr g = raw_group(std::move(table), std::move(name));
    CheckReport r = check_group(*g);
    if (!r.ok)
        throw Error(r.tag, "group table failed " + r.tag + " at " + witness_string(r.witness),
                    r.witness);
    return g;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (&a == &b) return true;
    return a.order == b.order && a.cayley == b.cayley;
}

bool is_abelian(const FiniteGroup& g, std::pair<int, int>* witness) {
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.op(x, y) != g.op(y, x)) {
                if (witness) *witness = {x, y};
                return false;
            }
    return true;
}

int element_order(const FiniteGroup& g, int x) {
    int k = 1;
    int acc = x;
    while (acc != 0) {
        acc = g.op(acc, x);
        ++k;
    }
    return k;
}

GroupPtr make_trivial() { return make_cyclic(1); }

GroupPtr make_cyclic(int n) {
    if (n < 1) throw input_error("ShapeError", "cyclic order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
    return validate_group(std::move(t), "z" + std::to_string(n));
}

GroupPtr make_klein4() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) t[x][y] = x ^ y;
    return validate_group(std::move(t), "klein4");
}

GroupPtr make_sym3() {
    // Permutations of {0,1,2} in lexicographic one-line order; the identity
    // lands at index 0. Composition: (p∘q)(x) = p(q(x)).
    std::vector<std::vector<int>> perms;
    std::vector<int> p = {0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < 6; ++i) index[perms[i]] = i;
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::vector<int> c(3);
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
            t[i][j] = index[c];
        }
    return validate_group(std::move(t), "sym3");
}

GroupPtr make_dih4() {
    // Element f*4 + k stands for s^f r^k; r s = s r^{-1}.
    auto enc = [](int f, int k) { return f * 4 + ((k % 4) + 4) % 4; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int k1 = 0; k1 < 4; ++k1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int k2 = 0; k2 < 4; ++k2) {
                    int v = f2 == 0 ? enc(f1, k1 + k2) : enc(f1 ^ 1, k2 - k1);
                    t[enc(f1, k1)][enc(f2, k2)] = v;
                }
    return validate_group(std::move(t), "dih4");
}

GroupPtr make_quat8() {
    // Element s*4 + e stands for (-1)^s times the basis element {1,i,j,k}[e].
    static const int basis_sign[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 0, 1},
        {0, 1, 1, 0},
        {0, 0, 1, 1},
    };
    static const int basis_elem[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int s1 = x / 4, e1 = x % 4, s2 = y / 4, e2 = y % 4;
            int s = s1 ^ s2 ^ basis_sign[e1][e2];
            t[x][y] = s * 4 + basis_elem[e1][e2];
        }
    return validate_group(std::move(t), "quat8");
}

CheckReport check_hom(const GroupHom& f) {
    CheckReport r;
    const FiniteGroup& d = *f.dom;
    const FiniteGroup& c = *f.cod;
    if (static_cast<int>(f.map.size()) != d.order) return r.fail("ShapeError", {static_cast<int>(f.map.size()), d.order});
    for (int x = 0; x < d.order; ++x) {
        ++r.checks;
        if (f.map[x] < 0 || f.map[x] >= c.order) return r.fail("OutOfRange", {x});
    }
    for (int x = 0; x < d.order; ++x)
        for (int y = 0; y < d.order; ++y) {
            ++r.checks;
            if (f.map[d.op(x, y)] != c.op(f.map[x], f.map[y])) return r.fail("NotHomomorphism", {x, y});
        }
    return r;
}

GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<int> map) {
    GroupHom f{std::move(dom), std::move(cod), std::move(map)};
    CheckReport r = check_hom(f);
    if (!r.ok) throw Error(r.tag, "invalid homomorphism at " + witness_string(r.witness), r.witness);
    return f;
}

GroupHom identity_hom(GroupPtr g) {
    std::vector<int> m(g->order);
    std::iota(m.begin(), m.end(), 0);
    return GroupHom{g, g, std::move(m)};
}

GroupHom zero_hom(GroupPtr dom, GroupPtr cod) {
    std::vector<int> m(dom->order, 0);
    return GroupHom{std::move(dom), std::move(cod), std::move(m)};
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
    if (!same_group(*f.dom, *g.cod)) throw input_error("ShapeError", "hom composition domain mismatch");
    std::vector<int> m(g.dom->order);
    for (int x = 0; x < g.dom->order; ++x) m[x] = f.map[g.map[x]];
    return GroupHom{g.dom, f.cod, std::move(m)};
}

bool is_injective(const GroupHom& f) {
    std::vector<char> seen(f.cod->order, 0);
    for (int v : f.map) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool is_surjective(const GroupHom& f) {
    std::vector<char> seen(f.cod->order, 0);
    for (int v : f.map) seen[v] = 1;
    for (char c : seen)
        if (!c) return false;
    return true;
}

bool is_bijective(const GroupHom& f) { return f.dom->order == f.cod->order && is_injective(f); }

bool same_hom(const GroupHom& a, const GroupHom& b) {
    return same_group(*a.dom, *b.dom) && same_group(*a.cod, *b.cod) && a.map == b.map;
}

CheckReport check_action(const GroupAction& act) {
    CheckReport r;
    const FiniteGroup& b = *act.actor;
    const FiniteGroup& a = *act.space;
    if (static_cast<int>(act.table.size()) != b.order) return r.fail("ShapeError", {static_cast<int>(act.table.size()), b.order});
    for (int x = 0; x < b.order; ++x) {
        if (static_cast<int>(act.table[x].size()) != a.order) return r.fail("ShapeError", {x});
        for (int y = 0; y < a.order; ++y) {
            ++r.checks;
            int v = act.table[x][y];
            if (v < 0 || v >= a.order) return r.fail("OutOfRange", {x, y});
        }
    }
    for (int y = 0; y < a.order; ++y) {
        ++r.checks;
        if (act.table[0][y] != y) return r.fail("ActionIdentityFail", {y});
    }
    for (int x = 0; x < b.order; ++x)
        for (int x2 = 0; x2 < b.order; ++x2)
            for (int y = 0; y < a.order; ++y) {
                ++r.checks;
                if (act.table[b.op(x, x2)][y] != act.table[x][act.table[x2][y]])
                    return r.fail("ActionCompatibilityFail", {x, x2, y});
            }
    for (int x = 0; x < b.order; ++x)
        for (int y = 0; y < a.order; ++y)
            for (int y2 = 0; y2 < a.order; ++y2) {
                ++r.checks;
                if (act.table[x][a.op(y, y2)] != a.op(act.table[x][y], act.table[x][y2]))
                    return r.fail("ActionAutomorphismFail", {x, y, y2});
            }
    return r;
}

GroupAction make_action(GroupPtr actor, GroupPtr space, std::vector<std::vector<int>> table) {
    GroupAction act{std::move(actor), std::move(space), std::move(table)};
    CheckReport r = check_action(act);
    if (!r.ok) throw Error(r.tag, "invalid action at " + witness_string(r.witness), r.witness);
    return act;
}

GroupAction trivial_action(GroupPtr actor, GroupPtr space) {
    std::vector<int> row(space->order);
    std::iota(row.begin(), row.end(), 0);
    std::vector<std::vector<int>> t(actor->order, row);
    return GroupAction{std::move(actor), std::move(space), std::move(t)};
}

GroupAction conjugation_action(GroupPtr g) {
    std::vector<std::vector<int>> t(g->order, std::vector<int>(g->order));
    for (int x = 0; x < g->order; ++x)
        for (int y = 0; y < g->order; ++y) t[x][y] = g->conj(x, y);
    return GroupAction{g, g, std::move(t)};
}

bool same_action(const GroupAction& a, const GroupAction& b) {
    return same_group(*a.actor, *b.actor) && same_group(*a.space, *b.space) && a.table == b.table;
}

Subgroup make_subgroup(GroupPtr g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members)
        if (m < 0 || m >= g->order) throw input_error("ShapeError", "subgroup member out of range");
    if (members.empty() || members[0] != 0)
        throw Error("SubgroupMissingIdentity", "subgroup does not contain the identity");
    auto contains = [&](int x) { return std::binary_search(members.begin(), members.end(), x); };
    for (int x : members)
        for (int y : members)
            if (!contains(g->op(x, y)))
                throw Error("SubgroupNotClosed", "subgroup not closed under the operation", {x, y});
    for (int x : members)
        if (!contains(g->inv(x)))
            throw Error("SubgroupNotClosed", "subgroup not closed under inverses", {x});
    return Subgroup{std::move(g), std::move(members)};
}

Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens) {
    std::vector<char> in(g->order, 0);
    in[0] = 1;
    std::vector<int> frontier = {0};
    for (int x : gens)
        if (!in[x]) {
            in[x] = 1;
            frontier.push_back(x);
        }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < g->order; ++x) {
            if (!in[x]) continue;
            for (int y = 0; y < g->order; ++y) {
                if (!in[y]) continue;
                int z = g->op(x, y);
                if (!in[z]) {
                    in[z] = 1;
                    grew = true;
                }
            }
        }
    }
    std::vector<int> members;
    for (int x = 0; x < g->order; ++x)
        if (in[x]) members.push_back(x);
    return Subgroup{std::move(g), std::move(members)};
}

bool subgroup_contains(const Subgroup& s, int x) {
    return std::binary_search(s.members.begin(), s.members.end(), x);
}

int subgroup_index(const Subgroup& s, int x) {
    auto it = std::lower_bound(s.members.begin(), s.members.end(), x);
    if (it == s.members.end() || *it != x) return -1;
    return static_cast<int>(it - s.members.begin());
}

std::pair<GroupPtr, GroupHom> subgroup_to_group(const Subgroup& s, std::string name) {
    int k = static_cast<int>(s.members.size());
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int v = subgroup_index(s, s.ambient->op(s.members[i], s.members[j]));
            if (v < 0) throw internal_error("subgroup member list is not closed");
            t[i][j] = v;
        }
    if (name.empty()) name = s.ambient->name + "_sub" + std::to_string(k);
    GroupPtr g = validate_group(std::move(t), std::move(name));
    GroupHom incl{g, s.ambient, s.members};
    return {g, incl};
}

NormalityReport is_normal(const Subgroup& s) {
    for (int g = 0; g < s.ambient->order; ++g)
        for (int m : s.members)
            if (!subgroup_contains(s, s.ambient->conj(g, m))) return {false, g, m};
    return {};
}

Subgroup hom_kernel(const GroupHom& f) {
    std::vector<int> members;
    for (int x = 0; x < f.dom->order; ++x)
        if (f.map[x] == 0) members.push_back(x);
    return Subgroup{f.dom, std::move(members)};
}

Subgroup hom_image(const GroupHom& f) {
    std::vector<char> seen(f.cod->order, 0);
    for (int v : f.map) seen[v] = 1;
    std::vector<int> members;
    for (int x = 0; x < f.cod->order; ++x)
        if (seen[x]) members.push_back(x);
    return Subgroup{f.cod, std::move(members)};
}

// Product carriers are valid by construction from valid inputs, so they are
// built raw; only the input orders are bounded. Their element count may reach
// size_limit()^2, which is the pair-iteration budget of the exhaustive checks.
GroupPtr direct_product(GroupPtr x, GroupPtr y, std::string name) {
    if (x->order > size_limit() || y->order > size_limit())
        throw Error("SizeLimit", "direct product input exceeds the size limit",
                    {x->order, y->order});
    long long n = static_cast<long long>(x->order) * y->order;
    int nx = x->order, ny = y->order;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b)
            for (int c = 0; c < nx; ++c)
                for (int d = 0; d < ny; ++d)
                    t[a * ny + b][c * ny + d] = x->op(a, c) * ny + y->op(b, d);
    if (name.empty()) name = x->name + "x" + y->name;
    return raw_group(std::move(t), std::move(name));
}

SemidirectProduct semidirect_product(const GroupAction& act, std::string name) {
    const FiniteGroup& a = *act.space;
    const FiniteGroup& b = *act.actor;
    if (a.order > size_limit() || b.order > size_limit())
        throw Error("SizeLimit", "semidirect product input exceeds the size limit",
                    {a.order, b.order});
    long long n = static_cast<long long>(a.order) * b.order;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < b.order; ++y)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    t[x * b.order + y][x2 * b.order + y2] =
                        a.op(x, act.act(y, x2)) * b.order + b.op(y, y2);
    if (name.empty()) name = a.name + "_rtimes_" + b.name;
    GroupPtr e = raw_group(std::move(t), std::move(name));
    std::vector<int> mi(a.order), ms(b.order), mp(e->order);
    for (int x = 0; x < a.order; ++x) mi[x] = x * b.order;
    for (int y = 0; y < b.order; ++y) ms[y] = y;
    for (int z = 0; z < e->order; ++z) mp[z] = z % b.order;
    return SemidirectProduct{e, GroupHom{act.space, e, std::move(mi)},
                             GroupHom{act.actor, e, std::move(ms)},
                             GroupHom{e, act.actor, std::move(mp)}};
}

GroupAction derived_action(GroupPtr e, const GroupHom& i, const GroupHom& p, const GroupHom& s) {
    if (!same_group(*i.cod, *e) || !same_group(*p.dom, *e) || !same_group(*s.cod, *e) ||
        !same_group(*p.cod, *s.dom))
        throw input_error("ShapeError", "split extension maps do not fit together");
    const FiniteGroup& b = *p.cod;
    const FiniteGroup& a = *i.dom;
    for (int x = 0; x < b.order; ++x)
        if (p.map[s.map[x]] != x) throw Error("NotSplit", "p∘s is not the identity", {x});
    std::vector<int> preimage(e->order, -1);
    for (int x = 0; x < a.order; ++x) {
        if (preimage[i.map[x]] != -1)
            throw Error("NotInjective", "i is not injective", {preimage[i.map[x]], x});
        preimage[i.map[x]] = x;
    }
    for (int z = 0; z < e->order; ++z) {
        bool in_image = preimage[z] != -1;
        bool in_kernel = p.map[z] == 0;
        if (in_image != in_kernel) throw Error("NotExact", "image(i) differs from kernel(p)", {z});
    }
    std::vector<std::vector<int>> t(b.order, std::vector<int>(a.order));
    for (int x = 0; x < b.order; ++x)
        for (int y = 0; y < a.order; ++y) {
            int z = e->conj(s.map[x], i.map[y]);
            if (preimage[z] == -1)
                throw Error("NotClosed", "conjugate leaves the image of i", {x, y});
            t[x][y] = preimage[z];
        }
    GroupAction act{p.cod, i.dom, std::move(t)};
    CheckReport r = check_action(act);
    if (!r.ok) throw internal_error("derived action failed validation: " + r.tag);
    return act;
}

SplitExtension conjugation_extension(GroupPtr a) {
    SemidirectProduct sd = semidirect_product(conjugation_action(a), a->name + "_conjext");
    return SplitExtension{sd.group, sd.inj_space, sd.proj_actor, sd.inj_actor};
}

static PullbackGroup pullback_from_pairs(const GroupHom& f, const GroupHom& g,
                                         std::vector<std::pair<int, int>> pairs) {
    int k = static_cast<int>(pairs.size());
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < k; ++i) index[pairs[i]] = i;
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::pair<int, int> v = {f.dom->op(pairs[i].first, pairs[j].first),
                                     g.dom->op(pairs[i].second, pairs[j].second)};
            auto it = index.find(v);
            if (it == index.end()) throw internal_error("pullback set is not closed");
            t[i][j] = it->second;
        }
    GroupPtr grp = raw_group(std::move(t), f.dom->name + "_pb_" + g.dom->name);
    std::vector<int> m1(k), m2(k);
    for (int i = 0; i < k; ++i) {
        m1[i] = pairs[i].first;
        m2[i] = pairs[i].second;
    }
    return PullbackGroup{grp, GroupHom{grp, f.dom, std::move(m1)}, GroupHom{grp, g.dom, std::move(m2)},
                         std::move(pairs)};
}

PullbackGroup pullback_group(const GroupHom& f, const GroupHom& g) {
    if (!same_group(*f.cod, *g.cod))
        throw input_error("TargetMismatch", "pullback legs have different codomains");
    if (f.dom->order > size_limit() || g.dom->order > size_limit())
        throw Error("SizeLimit", "pullback input exceeds the size limit",
                    {f.dom->order, g.dom->order});
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < f.dom->order; ++x)
        for (int y = 0; y < g.dom->order; ++y)
            if (f.map[x] == g.map[y]) pairs.emplace_back(x, y);
    return pullback_from_pairs(f, g, std::move(pairs));
}

namespace {

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the span. Every index below gens[j] lies in the span of the earlier
// generators, which is what makes the identity the first map found when
// searching G against itself.
std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<char> in(g.order, 0);
    in[0] = 1;
    std::vector<int> gens;
    for (int x = 1; x < g.order; ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        bool grew = true;
        in[x] = 1;
        while (grew) {
            grew = false;
            for (int u = 0; u < g.order; ++u) {
                if (!in[u]) continue;
                for (int v = 0; v < g.order; ++v) {
                    if (!in[v]) continue;
                    int w = g.op(u, v);
                    if (!in[w]) {
                        in[w] = 1;
                        grew = true;
                    }
                }
            }
        }
    }
    return gens;
}

// Extends a partial map to the closure of its domain, checking consistency
// pair by pair. Returns false on contradiction.
bool extend_map(const FiniteGroup& g, const FiniteGroup& h, std::vector<int>& map,
                std::vector<int>& known) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ix = 0; ix < known.size(); ++ix)
            for (size_t iy = 0; iy < known.size(); ++iy) {
                int z = g.op(known[ix], known[iy]);
                int w = h.op(map[known[ix]], map[known[iy]]);
                if (map[z] < 0) {
                    map[z] = w;
                    known.push_back(z);
                    changed = true;
                } else if (map[z] != w) {
                    return false;
                }
            }
    }
    return true;
}

bool bijective_map(const std::vector<int>& map, int cod_order) {
    std::vector<char> seen(cod_order, 0);
    for (int v : map) {
        if (v < 0 || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

void search_isos(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                 const std::vector<std::vector<int>>& candidates, size_t j, std::vector<int>& map,
                 std::vector<int>& known, std::vector<std::vector<int>>& out, bool first_only) {
    if (!out.empty() && first_only) return;
    if (j == gens.size()) {
        for (int v : map)
            if (v < 0) return;
        if (bijective_map(map, h.order)) out.push_back(map);
        return;
    }
    for (int c : candidates[j]) {
        if (map[gens[j]] >= 0) {
            if (map[gens[j]] == c) search_isos(g, h, gens, candidates, j + 1, map, known, out, first_only);
            continue;
        }
        std::vector<int> map2 = map;
        std::vector<int> known2 = known;
        map2[gens[j]] = c;
        known2.push_back(gens[j]);
        if (extend_map(g, h, map2, known2))
            search_isos(g, h, gens, candidates, j + 1, map2, known2, out, first_only);
        if (!out.empty() && first_only) return;
    }
}

std::vector<std::vector<int>> isomorphism_maps(const FiniteGroup& g, const FiniteGroup& h,
                                               bool first_only) {
    std::vector<std::vector<int>> out;
    if (g.order != h.order) return out;
    std::vector<int> og(g.order), oh(h.order);
    for (int x = 0; x < g.order; ++x) og[x] = element_order(g, x);
    for (int x = 0; x < h.order; ++x) oh[x] = element_order(h, x);
    {
        std::vector<int> a = og, b = oh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return out;
    }
    std::vector<int> gens = greedy_generators(g);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t j = 0; j < gens.size(); ++j)
        for (int c = 0; c < h.order; ++c)
            if (oh[c] == og[gens[j]]) candidates[j].push_back(c);
    std::vector<int> map(g.order, -1);
    map[0] = 0;
    std::vector<int> known = {0};
    search_isos(g, h, gens, candidates, 0, map, known, out, first_only);
    return out;
}

}  // namespace

std::optional<GroupHom> iso_search(GroupPtr g, GroupPtr h) {
    auto maps = isomorphism_maps(*g, *h, true);
    if (maps.empty()) return std::nullopt;
    return GroupHom{g, h, maps.front()};
}

std::vector<GroupHom> all_isomorphisms(GroupPtr g, GroupPtr h) {
    std::vector<GroupHom> out;
    for (auto& m : isomorphism_maps(*g, *h, false)) out.push_back(GroupHom{g, h, std::move(m)});
    return out;
}

AutomorphismGroup automorphism_group(GroupPtr g) {
    if (g->order > size_limit())
        throw Error("SizeLimit", "automorphism enumeration exceeds the size limit",
                    {g->order, size_limit()});
    std::vector<std::vector<int>> maps = isomorphism_maps(*g, *g, false);
    std::sort(maps.begin(), maps.end());
    int k = static_cast<int>(maps.size());
    if (k > size_limit())
        throw Error("SizeLimit", "automorphism group exceeds the size limit", {k, size_limit()});
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < k; ++i) index[maps[i]] = i;
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<int> c(g->order);
            for (int x = 0; x < g->order; ++x) c[x] = maps[i][maps[j][x]];
            auto it = index.find(c);
            if (it == index.end()) throw internal_error("automorphism set is not closed");
            t[i][j] = it->second;
        }
    GroupPtr aut = validate_group(std::move(t), "aut_" + g->name);
    GroupAction eval{aut, g, maps};
    return AutomorphismGroup{aut, std::move(maps), std::move(eval)};
}

}  // namespace xalg
