#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "oracle.hpp"

namespace xalg {

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string table_str(const std::vector<std::vector<int>>& t) {
    std::string s = "[";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ", ";
        s += vec_str(t[i]);
    }
    return s + "]";
}

std::string check_line(const std::string& kind, const std::string& name, const CheckReport& r) {
    std::ostringstream os;
    os << "check " << kind << " " << name << ": ";
    if (r.ok)
        os << "PASS checks=" << r.checks;
    else
        os << "FAIL " << r.tag << " witness=" << witness_string(r.witness)
           << " checks=" << r.checks;
    os << "\n";
    return os.str();
}

CommandResult error_result(const Error& e) {
    return CommandResult{e.rc(), std::string("error: ") + e.tag() + ": " + e.what() + "\n"};
}

}  // namespace

CommandResult cmd_check(const Bundle* bundle, const std::string& kind, const std::string& name) {
    try {
        Resolver res(bundle);
        CheckReport r;
        if (kind == "group") {
            r = check_group(*res.group(name));
        } else if (kind == "hom") {
            GroupHom f = res.hom(name);
            if (r.absorb(check_group(*f.dom), "dom.") && r.absorb(check_group(*f.cod), "cod."))
                r.absorb(check_hom(f));
        } else if (kind == "action") {
            GroupAction a = res.action(name);
            if (r.absorb(check_group(*a.actor), "actor.") &&
                r.absorb(check_group(*a.space), "space."))
                r.absorb(check_action(a));
        } else if (kind == "xmod") {
            r = full_check_xmod(*res.xmod(name));
        } else if (kind == "ggpd") {
            GgpdPtr g = res.ggpd(name);
            r = full_check_groupoid(*g);
            if (r.ok) {
                if (auto m = res.ggpd_m(name)) r.absorb(check_explicit_composition(*g, *m));
            }
        } else if (kind == "catxmod") {
            CatPtr c = res.catxmod(name);
            r = full_check_catxmod(*c);
            if (r.ok) {
                if (auto m = res.catxmod_m_a(name))
                    r.absorb(check_explicit_composition(a_side_groupoid(*c), *m), "m_a.");
            }
            if (r.ok) {
                if (auto m = res.catxmod_m_b(name))
                    r.absorb(check_explicit_composition(b_side_groupoid(*c), *m), "m_b.");
            }
        } else if (kind == "xsq") {
            r = full_check_square(*res.xsq(name));
        } else {
            throw input_error("UnknownKind", "unknown check kind '" + kind + "'");
        }
        return CommandResult{r.ok ? 0 : 1, check_line(kind, name, r)};
    } catch (const Error& e) {
        return error_result(e);
    }
}

CommandResult cmd_convert(const Bundle* bundle, const std::string& functor,
                          const std::string& name) {
    try {
        Resolver res(bundle);
        BundleBuilder bb;
        std::string out_name = functor + "_" + name;
        if (functor == "phi") {
            GgpdPtr g = res.ggpd(name);
            CheckReport v = full_check_groupoid(*g);
            if (!v.ok) return CommandResult{1, check_line("ggpd", name, v)};
            bb.add_xmod(groupoid_to_xmod(*g), out_name, false);
        } else if (functor == "psi") {
            XModPtr x = res.xmod(name);
            CheckReport v = full_check_xmod(*x);
            if (!v.ok) return CommandResult{1, check_line("xmod", name, v)};
            bb.add_ggpd(xmod_to_groupoid(*x), out_name, false);
        } else if (functor == "eta") {
            CatPtr c = res.catxmod(name);
            CheckReport v = full_check_catxmod(*c);
            if (!v.ok) return CommandResult{1, check_line("catxmod", name, v)};
            bb.add_xsq(catxmod_to_square(*c), out_name, false);
        } else if (functor == "psi_sq") {
            XSqPtr s = res.xsq(name);
            CheckReport v = full_check_square(*s);
            if (!v.ok) return CommandResult{1, check_line("xsq", name, v)};
            bb.add_catxmod(square_to_catxmod(*s), out_name, false);
        } else if (functor == "pair" || functor == "discrete") {
            XModPtr x = res.xmod(name);
            CheckReport v = full_check_xmod(*x);
            if (!v.ok) return CommandResult{1, check_line("xmod", name, v)};
            CatPtr c = functor == "pair" ? pair_catxmod(x, out_name) : discrete_catxmod(x, out_name);
            bb.add_catxmod(c, out_name, false);
        } else {
            throw input_error("UnknownFunctor", "unknown functor '" + functor + "'");
        }
        return CommandResult{0, serialize_bundle(bb.take())};
    } catch (const Error& e) {
        return error_result(e);
    }
}

namespace {

bool xmod_tables_equal(const CrossedModule& x, const CrossedModule& y) {
    return x.a->cayley == y.a->cayley && x.b->cayley == y.b->cayley &&
           x.alpha.map == y.alpha.map && x.action.table == y.action.table;
}

}  // namespace

CommandResult cmd_roundtrip(const Bundle* bundle, const std::string& kind,
                            const std::string& name) {
    std::ostringstream os;
    try {
        Resolver res(bundle);
        bool ok = true;
        auto verdict = [&](const std::string& what, bool pass, const std::string& detail = "") {
            os << "roundtrip " << kind << " " << name << ": " << what << ": "
               << (pass ? "ok" : "FAIL") << detail << "\n";
            ok = ok && pass;
        };
        if (kind == "xmod") {
            XModPtr x = res.xmod(name);
            CheckReport v = full_check_xmod(*x);
            if (!v.ok) return CommandResult{1, check_line("xmod", name, v)};
            GgpdPtr g = xmod_to_groupoid(*x);
            XModPtr back = groupoid_to_xmod(*g);
            verdict("phi(psi(X)) equals X after (a,0) relabeling", xmod_tables_equal(*x, *back));
            GgpdPtr again = xmod_to_groupoid(*back);
            std::vector<int> arrows = groupoid_roundtrip_arrow_map(*g);
            std::vector<int> objects(g->g0->order);
            for (int i = 0; i < g->g0->order; ++i) objects[i] = i;
            CheckReport iso = check_groupoid_iso(*g, *again, arrows, objects);
            verdict("psi(phi(G)) isomorphic to G via g -> (g-1_s(g), s(g))", iso.ok,
                    iso.ok ? "" : " " + iso.tag + " " + witness_string(iso.witness));
        } else if (kind == "catxmod") {
            CatPtr c = res.catxmod(name);
            CheckReport v = full_check_catxmod(*c);
            if (!v.ok) return CommandResult{1, check_line("catxmod", name, v)};
            CatXModMorphism u = unit_iso(c);
            verdict("unit iso U: morphism valid and bijective", is_bijective(u));
            XSqMorphism t = counit_iso(catxmod_to_square(*c));
            verdict("counit iso T on eta(C): morphism valid and bijective", is_bijective(t));
        } else if (kind == "xsq") {
            XSqPtr s = res.xsq(name);
            CheckReport v = full_check_square(*s);
            if (!v.ok) return CommandResult{1, check_line("xsq", name, v)};
            XSqMorphism t = counit_iso(s);
            verdict("counit iso T: morphism valid and bijective", is_bijective(t));
            CatXModMorphism u = unit_iso(square_to_catxmod(*s));
            verdict("unit iso U on psi(S): morphism valid and bijective", is_bijective(u));
        } else {
            throw input_error("UnknownKind", "unknown roundtrip kind '" + kind + "'");
        }
        os << "roundtrip " << kind << " " << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        return CommandResult{ok ? 0 : 1, os.str()};
    } catch (const Error& e) {
        return error_result(e);
    }
}

CommandResult cmd_enumerate(const std::string& kind, const std::string& a, const std::string& b,
                            bool classify) {
    try {
        Resolver res(nullptr);
        GroupPtr ga = res.group(a);
        GroupPtr gb = res.group(b);
        std::ostringstream os;
        EnumerationReport rep;
        Classification cls;
        bool classified = false;
        if (kind == "actions") {
            auto v = enumerate_actions(gb, ga, &rep);
            os << "enumerate actions a=" << a << " b=" << b << ": scanned=" << rep.scanned
               << " valid=" << rep.valid << "\n";
            for (size_t i = 0; i < v.size(); ++i)
                os << i << ": table=" << table_str(v[i].table) << "\n";
            if (classify) {
                cls = classify_actions(v);
                classified = true;
            }
        } else if (kind == "xmods") {
            auto v = enumerate_xmods(ga, gb, &rep);
            os << "enumerate xmods a=" << a << " b=" << b << ": scanned=" << rep.scanned
               << " valid=" << rep.valid << "\n";
            for (size_t i = 0; i < v.size(); ++i)
                os << i << ": alpha=" << vec_str(v[i].alpha.map)
                   << " action=" << table_str(v[i].action.table) << "\n";
            if (classify) {
                cls = classify_xmods(v);
                classified = true;
            }
        } else if (kind == "ggpds") {
            auto v = enumerate_groupoid_structures(ga, gb, &rep);
            os << "enumerate ggpds a=" << a << " b=" << b << ": scanned=" << rep.scanned
               << " valid=" << rep.valid << "\n";
            for (size_t i = 0; i < v.size(); ++i)
                os << i << ": s=" << vec_str(v[i].s.map) << " t=" << vec_str(v[i].t.map)
                   << " eps=" << vec_str(v[i].eps.map) << "\n";
        } else {
            throw input_error("UnknownKind", "unknown enumerate kind '" + kind + "'");
        }
        if (classified)
            os << "classes=" << cls.representatives.size()
               << " reps=" << vec_str(cls.representatives) << "\n";
        return CommandResult{0, os.str()};
    } catch (const Error& e) {
        return error_result(e);
    }
}

CommandResult cmd_catalog_list() {
    std::ostringstream os;
    const Catalog& c = catalog();
    for (const std::string kind : {"groups", "xmods", "ggpds", "catxmods", "xsqs"}) {
        os << kind << ":";
        auto it = c.toplevel.find(kind);
        if (it != c.toplevel.end())
            for (const std::string& n : it->second) os << " " << n;
        os << "\n";
    }
    return CommandResult{0, os.str()};
}

CommandResult cmd_catalog_emit(const std::string& name) {
    try {
        const Catalog& c = catalog();
        BundleBuilder bb;
        if (c.groups.count(name)) {
            bb.add_group(c.groups.at(name), name, false);
        } else if (c.xmods.count(name)) {
            bb.add_xmod(c.xmods.at(name), name, false);
        } else if (c.ggpds.count(name)) {
            bb.add_ggpd(c.ggpds.at(name), name, false);
        } else if (c.catxmods.count(name)) {
            bb.add_catxmod(c.catxmods.at(name), name, false);
        } else if (c.xsqs.count(name)) {
            bb.add_xsq(c.xsqs.at(name), name, false);
        } else {
            throw Error("UnknownReference", "no catalog entry named '" + name + "'", {}, 2);
        }
        return CommandResult{0, serialize_bundle(bb.take())};
    } catch (const Error& e) {
        return error_result(e);
    }
}

}  // namespace xalg
