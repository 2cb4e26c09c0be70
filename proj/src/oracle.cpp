#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace xalg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Automorphisms by raw permutation filtering: every permutation of 1..n-1
// (identity fixed) that respects the Cayley table.
std::vector<std::vector<int>> permutation_automorphisms(const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    int n = g.order;
    std::vector<int> tail(std::max(0, n - 1));
    std::iota(tail.begin(), tail.end(), 1);
    std::vector<int> perm(n);
    perm[0] = 0;
    do {
        for (int i = 1; i < n; ++i) perm[i] = tail[i - 1];
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (perm[g.op(x, y)] != g.op(perm[x], perm[y])) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

// All maps dom -> cod respecting the two multiplication tables, by exhaustive
// assignment in element order with early consistency pruning.
void fill_homs(const std::vector<std::vector<int>>& dom, const std::vector<std::vector<int>>& cod,
               std::vector<int>& map, int next, std::vector<std::vector<int>>& out,
               long long* scanned) {
    int n = static_cast<int>(dom.size());
    int m = static_cast<int>(cod.size());
    if (next == n) {
        if (scanned) ++*scanned;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (map[dom[x][y]] != cod[map[x]][map[y]]) return;
        out.push_back(map);
        return;
    }
    for (int c = 0; c < m; ++c) {
        map[next] = c;
        bool ok = true;
        for (int x = 0; x <= next && ok; ++x)
            for (int y = 0; y <= next && ok; ++y) {
                int z = dom[x][y];
                if (z <= next && map[z] != cod[map[x]][map[y]]) ok = false;
            }
        if (ok) fill_homs(dom, cod, map, next + 1, out, scanned);
    }
    map[next] = -1;
}

std::vector<std::vector<int>> table_homs(const std::vector<std::vector<int>>& dom,
                                         const std::vector<std::vector<int>>& cod,
                                         long long* scanned = nullptr) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(dom.size(), -1);
    map[0] = 0;
    if (dom.size() == 1) {
        if (scanned) ++*scanned;
        out.push_back(map);
        return out;
    }
    fill_homs(dom, cod, map, 1, out, scanned);
    return out;
}

void require_oracle_size(int a, int b, int limit) {
    if (a > limit || b > limit)
        throw Error("SizeLimit", "carrier exceeds the oracle limit", {a, b, limit});
}

}  // namespace

std::string encode_action(const GroupAction& a) {
    std::string s;
    for (const auto& row : a.table)
        for (int v : row) s += std::to_string(v) + ",";
    return s;
}

std::string encode_xmod(const CrossedModule& x) {
    std::string s = "a:";
    for (int v : x.alpha.map) s += std::to_string(v) + ",";
    s += ";";
    s += encode_action(x.action);
    return s;
}

std::string encode_groupoid(const GroupGroupoid& g) {
    std::string s = "s:";
    for (int v : g.s.map) s += std::to_string(v) + ",";
    s += ";t:";
    for (int v : g.t.map) s += std::to_string(v) + ",";
    s += ";e:";
    for (int v : g.eps.map) s += std::to_string(v) + ",";
    return s;
}

std::vector<GroupAction> enumerate_actions(GroupPtr b, GroupPtr a, EnumerationReport* report,
                                           int limit) {
    auto start = Clock::now();
    require_oracle_size(b->order, a->order, limit);
    std::vector<std::vector<int>> auts = permutation_automorphisms(*a);
    int k = static_cast<int>(auts.size());
    // Composition table of the automorphism list; index 0 is the identity
    // because it is lexicographically least among permutations fixing 0.
    std::vector<std::vector<int>> comp(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<int> c(a->order);
            for (int x = 0; x < a->order; ++x) c[x] = auts[i][auts[j][x]];
            auto it = std::lower_bound(auts.begin(), auts.end(), c);
            comp[i][j] = static_cast<int>(it - auts.begin());
        }
    long long scanned = 0;
    std::vector<std::vector<int>> homs = table_homs(b->cayley, comp, &scanned);
    std::vector<GroupAction> out;
    for (const auto& h : homs) {
        std::vector<std::vector<int>> table(b->order);
        for (int x = 0; x < b->order; ++x) table[x] = auts[h[x]];
        GroupAction cand{b, a, std::move(table)};
        if (check_action(cand).ok) out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end(),
              [](const GroupAction& x, const GroupAction& y) { return x.table < y.table; });
    if (report) {
        report->description = "actions of " + b->name + " on " + a->name;
        report->scanned = scanned;
        report->valid = static_cast<long long>(out.size());
        report->wall_ms = ms_since(start);
    }
    return out;
}

std::vector<CrossedModule> enumerate_xmods(GroupPtr a, GroupPtr b, EnumerationReport* report,
                                           int limit) {
    auto start = Clock::now();
    require_oracle_size(a->order, b->order, limit);
    std::vector<GroupAction> actions = enumerate_actions(b, a, nullptr, limit);
    std::vector<std::vector<int>> alphas = table_homs(a->cayley, b->cayley);
    std::sort(alphas.begin(), alphas.end());
    long long scanned = 0;
    std::vector<CrossedModule> out;
    for (const auto& alpha : alphas)
        for (const auto& act : actions) {
            ++scanned;
            CrossedModule cand{a, b, GroupHom{a, b, alpha}, act, ""};
            if (check_xmod(cand).ok) out.push_back(std::move(cand));
        }
    std::sort(out.begin(), out.end(), [](const CrossedModule& x, const CrossedModule& y) {
        if (x.alpha.map != y.alpha.map) return x.alpha.map < y.alpha.map;
        return x.action.table < y.action.table;
    });
    if (report) {
        report->description = "crossed modules on (" + a->name + ", " + b->name + ")";
        report->scanned = scanned;
        report->valid = static_cast<long long>(out.size());
        report->wall_ms = ms_since(start);
    }
    return out;
}

std::vector<GroupGroupoid> enumerate_groupoid_structures(GroupPtr g1, GroupPtr g0,
                                                         EnumerationReport* report, int limit) {
    auto start = Clock::now();
    require_oracle_size(g1->order, g0->order, limit);
    std::vector<std::vector<int>> down = table_homs(g1->cayley, g0->cayley);
    std::vector<std::vector<int>> up = table_homs(g0->cayley, g1->cayley);
    std::sort(down.begin(), down.end());
    std::sort(up.begin(), up.end());
    long long scanned = 0;
    std::vector<GroupGroupoid> out;
    for (const auto& s : down)
        for (const auto& t : down)
            for (const auto& e : up) {
                ++scanned;
                GroupGroupoid cand{g1, g0, GroupHom{g1, g0, s}, GroupHom{g1, g0, t},
                                   GroupHom{g0, g1, e}, ""};
                if (check_groupoid(cand).ok) out.push_back(std::move(cand));
            }
    std::sort(out.begin(), out.end(), [](const GroupGroupoid& x, const GroupGroupoid& y) {
        if (x.s.map != y.s.map) return x.s.map < y.s.map;
        if (x.t.map != y.t.map) return x.t.map < y.t.map;
        return x.eps.map < y.eps.map;
    });
    if (report) {
        report->description = "group-groupoid structures on (" + g1->name + ", " + g0->name + ")";
        report->scanned = scanned;
        report->valid = static_cast<long long>(out.size());
        report->wall_ms = ms_since(start);
    }
    return out;
}

namespace {

// Constraint state for the h-map search: -1 is unassigned. Forcing rules come
// from axioms (iii)-(v) plus h(0,n) = h(m,0) = 0; axiom (ii) prunes values.
struct HSearch {
    const CrossedSquare& frame;
    std::vector<std::vector<int>> h;
    long long scanned = 0;
    std::vector<std::vector<std::vector<int>>> found;

    explicit HSearch(const CrossedSquare& f)
        : frame(f), h(f.m->order, std::vector<int>(f.n->order, -1)) {}

    bool cell_ok(int mm, int nn, int v) const {
        const CrossedSquare& s = frame;
        if (s.lambda(v) != s.m->op(mm, s.act_n_on_m(nn, s.m->inv(mm)))) return false;
        if (s.lambda_p(v) != s.n->op(s.act_m_on_n(mm, nn), s.n->inv(nn))) return false;
        return true;
    }

    // Assign h[mm][nn] = v and propagate all forced consequences. Returns
    // false on contradiction; appends newly assigned cells to `trail`.
    bool assign(int mm, int nn, int v, std::vector<std::pair<int, int>>& trail) {
        if (h[mm][nn] == v) return true;
        if (h[mm][nn] != -1) return false;
        if (!cell_ok(mm, nn, v)) return false;
        h[mm][nn] = v;
        trail.emplace_back(mm, nn);
        const CrossedSquare& s = frame;
        // (iv) against every already-known cell in the same column / row.
        for (int m2 = 0; m2 < s.m->order; ++m2) {
            if (h[m2][nn] == -1) continue;
            int left = s.m->op(mm, m2);
            int val = s.l->op(s.act_m_on_l(mm, h[m2][nn]), h[mm][nn]);
            if (!assign(left, nn, val, trail)) return false;
            int left2 = s.m->op(m2, mm);
            int val2 = s.l->op(s.act_m_on_l(m2, h[mm][nn]), h[m2][nn]);
            if (!assign(left2, nn, val2, trail)) return false;
        }
        for (int n2 = 0; n2 < s.n->order; ++n2) {
            if (h[mm][n2] == -1) continue;
            int right = s.n->op(nn, n2);
            int val = s.l->op(h[mm][nn], s.act_n_on_l(nn, h[mm][n2]));
            if (!assign(mm, right, val, trail)) return false;
            int right2 = s.n->op(n2, nn);
            int val2 = s.l->op(h[mm][n2], s.act_n_on_l(n2, h[mm][nn]));
            if (!assign(mm, right2, val2, trail)) return false;
        }
        // (v) orbit propagation.
        for (int pp = 0; pp < s.p->order; ++pp)
            if (!assign(s.act_pm.act(pp, mm), s.act_pn.act(pp, nn),
                        s.act_pl.act(pp, h[mm][nn]), trail))
                return false;
        return true;
    }

    void undo(std::vector<std::pair<int, int>>& trail, size_t keep) {
        while (trail.size() > keep) {
            auto [mm, nn] = trail.back();
            trail.pop_back();
            h[mm][nn] = -1;
        }
    }

    bool seed(std::vector<std::pair<int, int>>& trail) {
        const CrossedSquare& s = frame;
        for (int nn = 0; nn < s.n->order; ++nn)
            if (!assign(0, nn, 0, trail)) return false;
        for (int mm = 0; mm < s.m->order; ++mm)
            if (!assign(mm, 0, 0, trail)) return false;
        for (int ll = 0; ll < s.l->order; ++ll) {
            for (int nn = 0; nn < s.n->order; ++nn)
                if (!assign(s.lambda(ll), nn, s.l->op(ll, s.act_n_on_l(nn, s.l->inv(ll))), trail))
                    return false;
            for (int mm = 0; mm < s.m->order; ++mm)
                if (!assign(mm, s.lambda_p(ll), s.l->op(s.act_m_on_l(mm, ll), s.l->inv(ll)), trail))
                    return false;
        }
        return true;
    }

    void search(std::vector<std::pair<int, int>>& trail) {
        int fm = -1, fn = -1;
        for (int mm = 0; mm < frame.m->order && fm < 0; ++mm)
            for (int nn = 0; nn < frame.n->order; ++nn)
                if (h[mm][nn] == -1) {
                    fm = mm;
                    fn = nn;
                    break;
                }
        if (fm < 0) {
            ++scanned;
            CrossedSquare cand = frame;
            cand.h = h;
            if (check_square(cand).ok) found.push_back(h);
            return;
        }
        for (int v = 0; v < frame.l->order; ++v) {
            size_t keep = trail.size();
            if (assign(fm, fn, v, trail)) search(trail);
            undo(trail, keep);
        }
    }
};

}  // namespace

std::vector<std::vector<std::vector<int>>> enumerate_h_maps(const CrossedSquare& frame,
                                                            EnumerationReport* report,
                                                            int cell_limit) {
    auto start = Clock::now();
    if (frame.m->order * frame.n->order > cell_limit)
        throw Error("SizeLimit", "h table exceeds the search limit",
                    {frame.m->order, frame.n->order, cell_limit});
    HSearch hs(frame);
    std::vector<std::pair<int, int>> trail;
    std::vector<std::vector<std::vector<int>>> found;
    if (hs.seed(trail)) {
        hs.search(trail);
        found = std::move(hs.found);
    }
    std::sort(found.begin(), found.end());
    if (report) {
        report->description = "h maps on the (" + frame.m->name + " x " + frame.n->name + ") frame";
        report->scanned = hs.scanned;
        report->valid = static_cast<long long>(found.size());
        report->wall_ms = ms_since(start);
    }
    return found;
}

namespace {

bool isomorphic_actions(const GroupAction& x, const GroupAction& y) {
    for (const GroupHom& fb : all_isomorphisms(x.actor, y.actor))
        for (const GroupHom& fa : all_isomorphisms(x.space, y.space)) {
            bool ok = true;
            for (int b = 0; b < x.actor->order && ok; ++b)
                for (int a = 0; a < x.space->order && ok; ++a)
                    if (fa(x.act(b, a)) != y.act(fb(b), fa(a))) ok = false;
            if (ok) return true;
        }
    return false;
}

bool isomorphic_xmods(const CrossedModule& x, const CrossedModule& y) {
    auto ys = std::make_shared<CrossedModule>(y);
    auto xs = std::make_shared<CrossedModule>(x);
    for (const GroupHom& fa : all_isomorphisms(x.a, y.a))
        for (const GroupHom& fb : all_isomorphisms(x.b, y.b)) {
            XModMorphism cand{xs, ys, fa, fb};
            if (check_xmod_morphism(cand).ok) return true;
        }
    return false;
}

bool isomorphic_groupoids(const GroupGroupoid& x, const GroupGroupoid& y) {
    for (const GroupHom& f1 : all_isomorphisms(x.g1, y.g1))
        for (const GroupHom& f0 : all_isomorphisms(x.g0, y.g0))
            if (check_groupoid_iso(x, y, f1.map, f0.map).ok) return true;
    return false;
}

template <typename T, typename Eq, typename Enc>
Classification classify(const std::vector<T>& v, Eq eq, Enc enc) {
    Classification c;
    c.class_of.assign(v.size(), -1);
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (c.class_of[j] >= 0 &&
                static_cast<size_t>(c.representatives[c.class_of[j]]) == j && eq(v[i], v[j])) {
                c.class_of[i] = c.class_of[j];
                break;
            }
        if (c.class_of[i] == -1) {
            c.class_of[i] = static_cast<int>(c.representatives.size());
            c.representatives.push_back(static_cast<int>(i));
        }
    }
    // Representatives are the encoding-least members of their classes.
    for (size_t i = 0; i < v.size(); ++i) {
        int cls = c.class_of[i];
        if (enc(v[i]) < enc(v[c.representatives[cls]])) c.representatives[cls] = static_cast<int>(i);
    }
    return c;
}

}  // namespace

Classification classify_actions(const std::vector<GroupAction>& v) {
    return classify(v, isomorphic_actions, encode_action);
}

Classification classify_xmods(const std::vector<CrossedModule>& v) {
    return classify(v, isomorphic_xmods, encode_xmod);
}

Classification classify_groupoids(const std::vector<GroupGroupoid>& v) {
    return classify(v, isomorphic_groupoids, encode_groupoid);
}

}  // namespace xalg
