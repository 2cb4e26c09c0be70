// Acceptance suite. Runs every criterion exhaustively at desk scale and
// prints one pass/fail line per criterion. Usage:
//
//   acceptance <path-to-xalg-cli> <fixtures-dir>
//
// The CLI path and fixtures directory are needed for the end-to-end
// command-line criterion; everything else runs in process.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "commands.hpp"
#include "oracle.hpp"

using namespace xalg;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << number << " (" << what << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

std::vector<std::pair<int, int>> composable(const GroupGroupoid& g) {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < g.g1->order; ++b)
        for (int a = 0; a < g.g1->order; ++a)
            if (g.s(b) == g.t(a)) out.emplace_back(b, a);
    return out;
}

// --- criterion 1: every catalog structure passes its checker -------------

bool criterion_axiom_suites(std::string& detail) {
    const Catalog& c = catalog();
    if (c.groups.size() < 5 || c.xmods.size() < 5 || c.catxmods.size() < 4 || c.xsqs.size() < 4) {
        detail = "catalog too small";
        return false;
    }
    for (const auto& [name, g] : c.groups)
        if (!check_group(*g).ok) {
            detail = "group " + name;
            return false;
        }
    for (const auto& [name, x] : c.xmods)
        if (!full_check_xmod(*x).ok) {
            detail = "xmod " + name;
            return false;
        }
    for (const auto& [name, g] : c.ggpds)
        if (!full_check_groupoid(*g).ok) {
            detail = "ggpd " + name;
            return false;
        }
    for (const auto& [name, cx] : c.catxmods)
        if (!full_check_catxmod(*cx).ok) {
            detail = "catxmod " + name;
            return false;
        }
    for (const auto& [name, s] : c.xsqs)
        if (!full_check_square(*s).ok) {
            detail = "xsq " + name;
            return false;
        }
    detail = std::to_string(c.groups.size()) + " groups, " + std::to_string(c.xmods.size()) +
             " xmods, " + std::to_string(c.ggpds.size()) + " ggpds, " +
             std::to_string(c.catxmods.size()) + " catxmods, " + std::to_string(c.xsqs.size()) +
             " xsqs";
    return true;
}

// --- criterion 2: single-entry mutations are always caught ---------------

bool mutate_table(std::vector<std::vector<int>>* table, int values,
                  const std::function<CheckReport()>& rerun, long long* tried, long long budget) {
    for (auto& row : *table)
        for (int& cell : row) {
            int original = cell;
            for (int v = 0; v < values; ++v) {
                if (v == original) continue;
                if (*tried >= budget) return true;
                cell = v;
                CheckReport first = rerun();
                CheckReport second = rerun();
                cell = original;
                ++*tried;
                if (first.ok || first.witness.empty() || first.tag != second.tag ||
                    first.witness != second.witness)
                    return false;
            }
        }
    return true;
}

bool criterion_mutations(std::string& detail) {
    // Every single-entry flip is validated; the stated minimum is 20 per
    // structure, the tables are small enough to do them all.
    constexpr long long kBudget = 1'000'000;
    long long total = 0;
    for (const auto& [name, x] : catalog().xmods) {
        CrossedModule mutant = *x;
        long long tried = 0;
        if (!mutate_table(&mutant.action.table, x->a->order,
                          [&] { return full_check_xmod(mutant); }, &tried, kBudget)) {
            detail = "xmod " + name;
            return false;
        }
        total += tried;
    }
    for (const auto& [name, s] : catalog().xsqs) {
        CrossedSquare mutant = *s;
        long long tried = 0;
        auto rerun = [&] { return full_check_square(mutant); };
        if (!mutate_table(&mutant.act_pl.table, s->l->order, rerun, &tried, kBudget) ||
            !mutate_table(&mutant.act_pm.table, s->m->order, rerun, &tried, kBudget) ||
            !mutate_table(&mutant.act_pn.table, s->n->order, rerun, &tried, kBudget) ||
            !mutate_table(&mutant.h, s->l->order, rerun, &tried, kBudget)) {
            detail = "xsq " + name;
            return false;
        }
        total += tried;
    }
    detail = std::to_string(total) + " mutations, all caught with reproducible witnesses";
    return true;
}

// --- criterion 3: Brown-Spencer round trips -------------------------------

bool criterion_brown_spencer(std::string& detail) {
    for (const auto& [name, x] : catalog().xmods) {
        GgpdPtr g = xmod_to_groupoid(*x);
        XModPtr back = groupoid_to_xmod(*g);
        if (back->a->cayley != x->a->cayley || back->b->cayley != x->b->cayley ||
            back->alpha.map != x->alpha.map || back->action.table != x->action.table) {
            detail = "phi(psi) not exact for " + name;
            return false;
        }
        GgpdPtr again = xmod_to_groupoid(*back);
        std::vector<int> arrows = groupoid_roundtrip_arrow_map(*g);
        std::vector<int> objects(g->g0->order);
        for (int i = 0; i < g->g0->order; ++i) objects[i] = i;
        CheckReport iso = check_groupoid_iso(*g, *again, arrows, objects);
        if (!iso.ok) {
            detail = "psi(phi) not an isomorphism for " + name + ": " + iso.tag;
            return false;
        }
    }
    return true;
}

// --- criterion 4: unit and counit isomorphisms ----------------------------

bool criterion_unit_counit(std::string& detail) {
    try {
        for (const auto& [name, c] : catalog().catxmods) {
            CatXModMorphism u = unit_iso(c);
            if (!check_catxmod_morphism(u).ok || !is_bijective(u)) {
                detail = "unit iso on " + name;
                return false;
            }
        }
        for (const auto& [name, s] : catalog().xsqs) {
            XSqMorphism t = counit_iso(s);
            if (!check_square_morphism(t).ok || !is_bijective(t)) {
                detail = "counit iso on " + name;
                return false;
            }
        }
    } catch (const Error& e) {
        detail = std::string("construction failed: ") + e.what();
        return false;
    }
    return true;
}

// --- criterion 5: interchange, kernel commutation, both compositions ------

bool groupoid_laws(const GroupGroupoid& g, std::string& detail) {
    if (g.g1->order > 64) return true;
    const FiniteGroup& g1 = *g.g1;
    auto pairs = composable(g);
    for (const auto& [b, a] : pairs) {
        int e = g.eps(g.s(b));
        int one = g1.op(g1.op(b, g1.inv(e)), a);
        int two = g1.op(g1.op(a, g1.inv(e)), b);
        if (one != two) {
            detail = "composition orderings differ in " + g.name;
            return false;
        }
    }
    for (const auto& [b, a] : pairs)
        for (const auto& [b2, a2] : pairs) {
            int e = g.eps(g.s(g1.op(b, b2)));
            int lhs = g1.op(g1.op(g1.op(b, b2), g1.inv(e)), g1.op(a, a2));
            int eb = g.eps(g.s(b)), eb2 = g.eps(g.s(b2));
            int rhs = g1.op(g1.op(g1.op(b, g1.inv(eb)), a), g1.op(g1.op(b2, g1.inv(eb2)), a2));
            if (lhs != rhs) {
                detail = "interchange fails in " + g.name;
                return false;
            }
        }
    for (int ks = 0; ks < g1.order; ++ks) {
        if (g.s(ks) != 0) continue;
        for (int kt = 0; kt < g1.order; ++kt) {
            if (g.t(kt) != 0) continue;
            if (g1.op(ks, kt) != g1.op(kt, ks)) {
                detail = "kernels do not commute in " + g.name;
                return false;
            }
        }
    }
    return true;
}

bool criterion_interchange(std::string& detail) {
    for (const auto& [name, g] : catalog().ggpds)
        if (!groupoid_laws(*g, detail)) return false;
    for (const auto& [name, c] : catalog().catxmods) {
        GroupGroupoid ga = a_side_groupoid(*c);
        GroupGroupoid gb = b_side_groupoid(*c);
        if (!groupoid_laws(ga, detail) || !groupoid_laws(gb, detail)) return false;
    }
    for (const auto& [name, s] : catalog().xsqs) {
        CatPtr c = square_to_catxmod(*s);
        GroupGroupoid ga = a_side_groupoid(*c);
        GroupGroupoid gb = b_side_groupoid(*c);
        if (!groupoid_laws(ga, detail) || !groupoid_laws(gb, detail)) return false;
    }
    return true;
}

// --- criterion 6: derived composition formulas ----------------------------

bool criterion_formulas(std::string& detail) {
    for (const auto& [name, x] : catalog().xmods) {
        GgpdPtr g = catalog().ggpds.at("psibs_" + name);
        int nb = x->b->order;
        for (const auto& [u, v] : composable(*g))
            if (groupoid_compose(*g, u, v) != x->a->op(u / nb, v / nb) * nb + v % nb) {
                detail = "psi composition differs on " + name;
                return false;
            }
    }
    for (const auto& [name, s] : catalog().xsqs) {
        CatPtr c = square_to_catxmod(*s);
        GroupGroupoid ga = a_side_groupoid(*c);
        int nn = s->n->order;
        for (const auto& [u, v] : composable(ga))
            if (groupoid_compose(ga, u, v) != s->l->op(u / nn, v / nn) * nn + v % nn) {
                detail = "psi_sq A-side composition differs on " + name;
                return false;
            }
        GroupGroupoid gb = b_side_groupoid(*c);
        int np = s->p->order;
        for (const auto& [u, v] : composable(gb))
            if (groupoid_compose(gb, u, v) != s->m->op(u / np, v / np) * np + v % np) {
                detail = "psi_sq B-side composition differs on " + name;
                return false;
            }
    }
    return true;
}

// --- criterion 7: oracle counts and constructor membership ----------------

bool criterion_oracle(std::string& detail) {
    GroupPtr z2 = make_cyclic(2);
    GroupPtr z3 = make_cyclic(3);
    GroupPtr one = make_trivial();
    if (enumerate_xmods(z2, z2).size() != 2) {
        detail = "xmods(z2,z2)";
        return false;
    }
    if (enumerate_xmods(z3, z2).size() != 2) {
        detail = "xmods(z3,z2)";
        return false;
    }
    if (enumerate_actions(z2, z3).size() != 2) {
        detail = "actions(z2 on z3)";
        return false;
    }
    if (!enumerate_xmods(make_sym3(), one).empty()) {
        detail = "xmods(sym3,z1)";
        return false;
    }
    for (const auto& [name, x] : catalog().xmods) {
        if (x->a->order > kOracleLimit || x->b->order > kOracleLimit) continue;
        auto xs = enumerate_xmods(x->a, x->b);
        bool found = std::any_of(xs.begin(), xs.end(), [&](const CrossedModule& c) {
            return c.alpha.map == x->alpha.map && c.action.table == x->action.table;
        });
        auto as = enumerate_actions(x->b, x->a);
        bool found_action = std::any_of(as.begin(), as.end(), [&](const GroupAction& a) {
            return a.table == x->action.table;
        });
        if (!found || !found_action) {
            detail = "catalog xmod " + name + " missing from its enumeration";
            return false;
        }
    }
    for (const auto& [name, g] : catalog().ggpds) {
        if (g->g1->order > kOracleLimit || g->g0->order > kOracleLimit) continue;
        auto gs = enumerate_groupoid_structures(g->g1, g->g0);
        bool found = std::any_of(gs.begin(), gs.end(), [&](const GroupGroupoid& c) {
            return c.s.map == g->s.map && c.t.map == g->t.map && c.eps.map == g->eps.map;
        });
        if (!found) {
            detail = "catalog ggpd " + name + " missing from its enumeration";
            return false;
        }
    }
    for (const std::string sq_name : {"identity_sq_sym3", "trivial_sq_sym3"}) {
        XSqPtr s = catalog().xsqs.at(sq_name);
        if (s->m->order * s->n->order > 64) continue;
        auto hs = enumerate_h_maps(*s);
        if (std::find(hs.begin(), hs.end(), s->h) == hs.end()) {
            detail = "h table of " + sq_name + " missing from its enumeration";
            return false;
        }
    }
    return true;
}

// --- criterion 8: inverse compatibility law -------------------------------

bool criterion_inverse_law(std::string& detail) {
    for (const auto& [name, c] : catalog().catxmods) {
        GroupGroupoid ga = a_side_groupoid(*c);
        GroupGroupoid gb = b_side_groupoid(*c);
        for (int bb = 0; bb < c->c1->b->order; ++bb)
            for (int aa = 0; aa < c->c1->a->order; ++aa)
                if (groupoid_inverse(ga, c->c1->act(bb, aa)) !=
                    c->c1->act(groupoid_inverse(gb, bb), groupoid_inverse(ga, aa))) {
                    detail = name;
                    return false;
                }
    }
    return true;
}

// --- criterion 9: CLI end to end -------------------------------------------

int run_cli(const std::string& cli, const std::string& args, std::string* output) {
    std::string tmp = "acceptance_cli_output.tmp";
    std::string cmd = "\"" + cli + "\" " + args + " > " + tmp + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(tmp);
        std::ostringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    std::remove(tmp.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion_cli(const std::string& cli, const std::string& fixtures, std::string& detail) {
    const Catalog& c = catalog();
    auto expect_pass = [&](const std::string& kind, const std::string& name) {
        int rc = run_cli(cli, "check " + kind + " " + name + " -f catalog", nullptr);
        if (rc != 0) {
            detail = "check " + kind + " " + name + " exited " + std::to_string(rc);
            return false;
        }
        return true;
    };
    for (const auto& [name, g] : c.groups)
        if (!expect_pass("group", name)) return false;
    for (const auto& [name, x] : c.xmods)
        if (!expect_pass("xmod", name)) return false;
    for (const auto& [name, g] : c.ggpds)
        if (!expect_pass("ggpd", name)) return false;
    for (const auto& [name, cx] : c.catxmods)
        if (!expect_pass("catxmod", name)) return false;
    for (const auto& [name, s] : c.xsqs)
        if (!expect_pass("xsq", name)) return false;
    if (!expect_pass("hom", "conj_s3.alpha")) return false;
    if (!expect_pass("action", "conj_s3.action")) return false;

    // Canonical byte identity: in process and through the CLI.
    std::string text = serialize_bundle(catalog_bundle());
    if (serialize_bundle(parse_bundle(text)) != text) {
        detail = "catalog bundle does not round trip byte-identically";
        return false;
    }
    std::string emit1, emit2;
    if (run_cli(cli, "catalog emit identity_sq_sym3", &emit1) != 0 ||
        run_cli(cli, "catalog emit identity_sq_sym3", &emit2) != 0 || emit1 != emit2 ||
        serialize_bundle(parse_bundle(emit1)) != emit1) {
        detail = "catalog emit is not byte-stable";
        return false;
    }

    std::string out;
    int rc = run_cli(cli, "check xmod broken -f \"" + fixtures + "/mutated.bundle\"", &out);
    if (rc != 1) {
        detail = "mutated fixture exited " + std::to_string(rc) + ", expected 1";
        return false;
    }
    if (out.find("CM2Fail") == std::string::npos || out.find("witness=") == std::string::npos) {
        detail = "mutated fixture report carries no CM2 witness";
        return false;
    }
    rc = run_cli(cli, "check xmod broken_action -f \"" + fixtures + "/mutated.bundle\"", &out);
    if (rc != 1 || out.find("witness=") == std::string::npos) {
        detail = "flipped-entry fixture did not fail with a witness";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <xalg-cli> <fixtures-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string fixtures = argv[2];

    auto start = std::chrono::steady_clock::now();
    std::string detail;

    detail.clear();
    report(1, "catalog axiom suites", criterion_axiom_suites(detail), detail);
    detail.clear();
    report(2, "mutation sensitivity", criterion_mutations(detail), detail);
    detail.clear();
    report(3, "Brown-Spencer round trips", criterion_brown_spencer(detail), detail);
    detail.clear();
    report(4, "unit/counit isomorphisms", criterion_unit_counit(detail), detail);
    detail.clear();
    report(5, "interchange and kernel laws", criterion_interchange(detail), detail);
    detail.clear();
    report(6, "derived composition formulas", criterion_formulas(detail), detail);
    detail.clear();
    report(7, "oracle counts and membership", criterion_oracle(detail), detail);
    detail.clear();
    report(8, "inverse compatibility law", criterion_inverse_law(detail), detail);
    detail.clear();
    report(9, "command line end to end", criterion_cli(cli, fixtures, detail), detail);

    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool timely = seconds < 60.0;
    std::cout << "suite runtime: " << seconds << " s (bound 60 s): " << (timely ? "PASS" : "FAIL")
              << "\n";
    if (!timely) ++failures;

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
