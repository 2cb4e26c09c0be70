#include "bundle.hpp"

#include <algorithm>
#include <set>

namespace xalg {

namespace {

using nlohmann::json;

const std::set<std::string>& collection_kinds() {
    static const std::set<std::string> kinds = {"groups", "homs",     "actions", "xmods",
                                                "ggpds",  "catxmods", "xsqs"};
    return kinds;
}

// ---- canonical writer ----

void write_escaped(const std::string& s, std::string& out) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

bool all_primitive(const json& arr) {
    for (const auto& v : arr)
        if (v.is_array() || v.is_object()) return false;
    return true;
}

void write_value(const json& j, std::string& out, int indent) {
    const std::string pad(indent * 2, ' ');
    const std::string pad1((indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad1;
            write_escaped(it.key(), out);
            out += ": ";
            write_value(it.value(), out, indent + 1);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (all_primitive(j)) {
            out += "[";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ", ";
                first = false;
                write_value(v, out, indent);
            }
            out += "]";
        } else {
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad1;
                write_value(v, out, indent + 1);
            }
            out += "\n" + pad + "]";
        }
    } else if (j.is_string()) {
        write_escaped(j.get<std::string>(), out);
    } else if (j.is_boolean()) {
        out += j.get<bool>() ? "true" : "false";
    } else if (j.is_number_integer()) {
        out += std::to_string(j.get<long long>());
    } else if (j.is_number_unsigned()) {
        out += std::to_string(j.get<unsigned long long>());
    } else if (j.is_null()) {
        out += "null";
    } else {
        throw input_error("ShapeError", "non-integer number in bundle");
    }
}

// ---- shape helpers ----

[[noreturn]] void shape_error(const std::string& path, const std::string& what) {
    throw Error("ShapeError", path + ": " + what, {}, 2);
}

int require_int(const json& j, const std::string& path, int lo, int hi) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) shape_error(path, "expected an integer");
    long long v = j.get<long long>();
    if (v < lo || v > hi) shape_error(path, "integer out of range");
    return static_cast<int>(v);
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) shape_error(path, "expected a string");
    return j.get<std::string>();
}

std::vector<int> require_int_array(const json& j, const std::string& path, int lo, int hi) {
    if (!j.is_array()) shape_error(path, "expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(require_int(j[i], path + "[" + std::to_string(i) + "]", lo, hi));
    return out;
}

std::vector<std::vector<int>> require_table(const json& j, const std::string& path, int lo,
                                            int hi) {
    if (!j.is_array()) shape_error(path, "expected an array of rows");
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(require_int_array(j[i], path + "[" + std::to_string(i) + "]", lo, hi));
    return out;
}

void require_fields(const json& j, const std::string& path,
                    const std::set<std::string>& required,
                    const std::set<std::string>& optional = {}) {
    if (!j.is_object()) shape_error(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!required.count(it.key()) && !optional.count(it.key()))
            shape_error(path + "." + it.key(), "unknown field");
    for (const std::string& f : required)
        if (!j.contains(f)) shape_error(path + "." + f, "missing field");
}

constexpr int kResolutionOrderCap = 4096;

}  // namespace

// ---- parsing ----

Bundle parse_bundle(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        if (byte > text.size()) byte = text.size();
        int line = 1, col = 1;
        for (size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error("SyntaxError",
                    "line " + std::to_string(line) + ", column " + std::to_string(col),
                    {line, col}, 2);
    }
    if (!doc.is_object()) throw input_error("ShapeError", "bundle root must be an object");
    json norm = json::object();
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!collection_kinds().count(it.key()))
            shape_error(it.key(), "unknown collection");
        if (!it.value().is_object()) shape_error(it.key(), "collection must be an object");
        if (!it.value().empty()) norm[it.key()] = it.value();
    }
    Bundle b{std::move(norm)};
    Resolver r(&b);
    for (const auto& kind : collection_kinds()) {
        if (!b.doc.contains(kind)) continue;
        for (auto it = b.doc[kind].begin(); it != b.doc[kind].end(); ++it) {
            const std::string& name = it.key();
            if (kind == "groups") r.group(name);
            else if (kind == "homs") r.hom(name);
            else if (kind == "actions") r.action(name);
            else if (kind == "xmods") r.xmod(name);
            else if (kind == "ggpds") r.ggpd(name);
            else if (kind == "catxmods") r.catxmod(name);
            else if (kind == "xsqs") r.xsq(name);
        }
    }
    return b;
}

std::string serialize_bundle(const Bundle& b) {
    json doc = json::object();
    for (const auto& kind : collection_kinds())
        if (b.doc.contains(kind) && !b.doc[kind].empty()) doc[kind] = b.doc[kind];
    std::string out;
    write_value(doc, out, 0);
    out += "\n";
    return out;
}

// ---- resolution ----

Resolver::Resolver(const Bundle* bundle) : bundle_(bundle) {}

const json* Resolver::entry(const std::string& kind, const std::string& name) {
    if (bundle_ && bundle_->doc.contains(kind)) {
        const json& coll = bundle_->doc[kind];
        auto it = coll.find(name);
        if (it != coll.end()) return &*it;
    }
    return nullptr;
}

namespace {

const json* catalog_entry(const std::string& kind, const std::string& name) {
    const json& doc = catalog_bundle().doc;
    if (!doc.contains(kind)) return nullptr;
    auto it = doc[kind].find(name);
    if (it != doc[kind].end()) return &*it;
    return nullptr;
}

[[noreturn]] void unknown_reference(const std::string& kind, const std::string& name) {
    throw Error("UnknownReference", kind + " '" + name + "' is not defined", {}, 2);
}

}  // namespace

GroupPtr Resolver::group(const std::string& name) {
    auto cached = groups_.find(name);
    if (cached != groups_.end()) return cached->second;
    const json* e = entry("groups", name);
    if (!e) {
        auto it = catalog().groups.find(name);
        if (it != catalog().groups.end()) {
            groups_[name] = it->second;
            return it->second;
        }
        e = catalog_entry("groups", name);
        if (!e) unknown_reference("group", name);
    }
    const std::string path = "groups." + name;
    if (!e->is_object() || !e->contains("kind")) shape_error(path, "expected an object with kind");
    std::string kind = require_string((*e)["kind"], path + ".kind");
    GroupPtr g;
    if (kind == "table") {
        require_fields(*e, path, {"kind", "table"});
        auto t = require_table((*e)["table"], path + ".table", 0, kResolutionOrderCap);
        int n = static_cast<int>(t.size());
        if (n < 1 || n > kResolutionOrderCap) shape_error(path + ".table", "bad order");
        for (const auto& row : t)
            if (static_cast<int>(row.size()) != n) shape_error(path + ".table", "not square");
        g = raw_group(std::move(t), name);
    } else if (kind == "cyclic") {
        require_fields(*e, path, {"kind", "n"});
        int n = require_int((*e)["n"], path + ".n", 1, kResolutionOrderCap);
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
        g = raw_group(std::move(t), name);
    } else if (kind == "builtin") {
        require_fields(*e, path, {"kind", "name"});
        std::string ref = require_string((*e)["name"], path + ".name");
        auto it = catalog().groups.find(ref);
        if (it != catalog().groups.end()) {
            g = it->second;
        } else {
            const json* ce = catalog_entry("groups", ref);
            if (!ce) unknown_reference("builtin group", ref);
            Resolver cat_resolver(nullptr);
            g = cat_resolver.group(ref);
        }
    } else {
        shape_error(path + ".kind", "unknown group kind");
    }
    groups_[name] = g;
    return g;
}

GroupHom Resolver::hom(const std::string& name) {
    const json* e = entry("homs", name);
    if (!e) {
        e = catalog_entry("homs", name);
        if (!e) unknown_reference("hom", name);
    }
    const std::string path = "homs." + name;
    require_fields(*e, path, {"dom", "cod", "map"});
    GroupPtr dom = group(require_string((*e)["dom"], path + ".dom"));
    GroupPtr cod = group(require_string((*e)["cod"], path + ".cod"));
    std::vector<int> map = require_int_array((*e)["map"], path + ".map", 0, cod->order - 1);
    if (static_cast<int>(map.size()) != dom->order) shape_error(path + ".map", "wrong length");
    return GroupHom{std::move(dom), std::move(cod), std::move(map)};
}

GroupAction Resolver::action(const std::string& name) {
    const json* e = entry("actions", name);
    if (!e) {
        e = catalog_entry("actions", name);
        if (!e) unknown_reference("action", name);
    }
    const std::string path = "actions." + name;
    require_fields(*e, path, {"actor", "space", "table"});
    GroupPtr actor = group(require_string((*e)["actor"], path + ".actor"));
    GroupPtr space = group(require_string((*e)["space"], path + ".space"));
    auto t = require_table((*e)["table"], path + ".table", 0, space->order - 1);
    if (static_cast<int>(t.size()) != actor->order) shape_error(path + ".table", "wrong row count");
    for (const auto& row : t)
        if (static_cast<int>(row.size()) != space->order)
            shape_error(path + ".table", "wrong row length");
    return GroupAction{std::move(actor), std::move(space), std::move(t)};
}

XModPtr Resolver::xmod(const std::string& name) {
    auto cached = xmods_.find(name);
    if (cached != xmods_.end()) return cached->second;
    const json* e = entry("xmods", name);
    if (!e) {
        auto it = catalog().xmods.find(name);
        if (it != catalog().xmods.end()) {
            xmods_[name] = it->second;
            return it->second;
        }
        e = catalog_entry("xmods", name);
        if (!e) unknown_reference("xmod", name);
    }
    const std::string path = "xmods." + name;
    if (e->contains("kind")) {
        require_fields(*e, path, {"kind", "name"});
        if (require_string((*e)["kind"], path + ".kind") != "builtin")
            shape_error(path + ".kind", "unknown xmod kind");
        std::string ref = require_string((*e)["name"], path + ".name");
        auto it = catalog().xmods.find(ref);
        if (it == catalog().xmods.end()) unknown_reference("builtin xmod", ref);
        xmods_[name] = it->second;
        return it->second;
    }
    require_fields(*e, path, {"a", "b", "alpha", "action"});
    GroupPtr a = group(require_string((*e)["a"], path + ".a"));
    GroupPtr b = group(require_string((*e)["b"], path + ".b"));
    GroupHom alpha = hom(require_string((*e)["alpha"], path + ".alpha"));
    GroupAction act = action(require_string((*e)["action"], path + ".action"));
    if (!same_group(*alpha.dom, *a) || !same_group(*alpha.cod, *b))
        shape_error(path + ".alpha", "does not map a to b");
    if (!same_group(*act.actor, *b) || !same_group(*act.space, *a))
        shape_error(path + ".action", "is not an action of b on a");
    XModPtr x = make_xmod(a, b, std::move(alpha), std::move(act), name);
    xmods_[name] = x;
    return x;
}

GgpdPtr Resolver::ggpd(const std::string& name) {
    auto cached = ggpds_.find(name);
    if (cached != ggpds_.end()) return cached->second;
    const json* e = entry("ggpds", name);
    if (!e) {
        auto it = catalog().ggpds.find(name);
        if (it != catalog().ggpds.end()) {
            ggpds_[name] = it->second;
            return it->second;
        }
        e = catalog_entry("ggpds", name);
        if (!e) unknown_reference("ggpd", name);
    }
    const std::string path = "ggpds." + name;
    if (e->contains("kind")) {
        require_fields(*e, path, {"kind", "name"});
        if (require_string((*e)["kind"], path + ".kind") != "builtin")
            shape_error(path + ".kind", "unknown ggpd kind");
        std::string ref = require_string((*e)["name"], path + ".name");
        auto it = catalog().ggpds.find(ref);
        if (it == catalog().ggpds.end()) unknown_reference("builtin ggpd", ref);
        ggpds_[name] = it->second;
        return it->second;
    }
    require_fields(*e, path, {"g1", "g0", "s", "t", "eps"}, {"m"});
    GroupPtr g1 = group(require_string((*e)["g1"], path + ".g1"));
    GroupPtr g0 = group(require_string((*e)["g0"], path + ".g0"));
    GroupHom s = hom(require_string((*e)["s"], path + ".s"));
    GroupHom t = hom(require_string((*e)["t"], path + ".t"));
    GroupHom eps = hom(require_string((*e)["eps"], path + ".eps"));
    if (!same_group(*s.dom, *g1) || !same_group(*s.cod, *g0)) shape_error(path + ".s", "does not fit");
    if (!same_group(*t.dom, *g1) || !same_group(*t.cod, *g0)) shape_error(path + ".t", "does not fit");
    if (!same_group(*eps.dom, *g0) || !same_group(*eps.cod, *g1))
        shape_error(path + ".eps", "does not fit");
    if (e->contains("m")) {
        auto m = require_table((*e)["m"], path + ".m", -1, g1->order - 1);
        if (static_cast<int>(m.size()) != g1->order) shape_error(path + ".m", "wrong shape");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != g1->order) shape_error(path + ".m", "wrong shape");
    }
    GgpdPtr g = make_groupoid(g1, g0, std::move(s), std::move(t), std::move(eps), name);
    ggpds_[name] = g;
    return g;
}

CatPtr Resolver::catxmod(const std::string& name) {
    auto cached = catxmods_.find(name);
    if (cached != catxmods_.end()) return cached->second;
    const json* e = entry("catxmods", name);
    if (!e) {
        auto it = catalog().catxmods.find(name);
        if (it != catalog().catxmods.end()) {
            catxmods_[name] = it->second;
            return it->second;
        }
        e = catalog_entry("catxmods", name);
        if (!e) unknown_reference("catxmod", name);
    }
    const std::string path = "catxmods." + name;
    if (e->contains("kind")) {
        require_fields(*e, path, {"kind", "name"});
        if (require_string((*e)["kind"], path + ".kind") != "builtin")
            shape_error(path + ".kind", "unknown catxmod kind");
        std::string ref = require_string((*e)["name"], path + ".name");
        auto it = catalog().catxmods.find(ref);
        if (it == catalog().catxmods.end()) unknown_reference("builtin catxmod", ref);
        catxmods_[name] = it->second;
        return it->second;
    }
    require_fields(*e, path, {"c1", "c0", "s_a", "s_b", "t_a", "t_b", "eps_a", "eps_b"},
                   {"m_a", "m_b"});
    XModPtr c1 = xmod(require_string((*e)["c1"], path + ".c1"));
    XModPtr c0 = xmod(require_string((*e)["c0"], path + ".c0"));
    auto fit = [&](const char* field, const GroupPtr& dom, const GroupPtr& cod) {
        GroupHom f = hom(require_string((*e)[field], path + "." + field));
        if (!same_group(*f.dom, *dom) || !same_group(*f.cod, *cod))
            shape_error(path + "." + field, "does not fit");
        return f;
    };
    XModMorphism s{c1, c0, fit("s_a", c1->a, c0->a), fit("s_b", c1->b, c0->b)};
    XModMorphism t{c1, c0, fit("t_a", c1->a, c0->a), fit("t_b", c1->b, c0->b)};
    XModMorphism eps{c0, c1, fit("eps_a", c0->a, c1->a), fit("eps_b", c0->b, c1->b)};
    for (const char* field : {"m_a", "m_b"}) {
        if (!e->contains(field)) continue;
        int n = std::string(field) == "m_a" ? c1->a->order : c1->b->order;
        auto m = require_table((*e)[field], path + "." + field, -1, n - 1);
        if (static_cast<int>(m.size()) != n) shape_error(path + "." + field, "wrong shape");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != n) shape_error(path + "." + field, "wrong shape");
    }
    CatPtr c = make_catxmod(c1, c0, std::move(s), std::move(t), std::move(eps), name);
    catxmods_[name] = c;
    return c;
}

XSqPtr Resolver::xsq(const std::string& name) {
    auto cached = xsqs_.find(name);
    if (cached != xsqs_.end()) return cached->second;
    const json* e = entry("xsqs", name);
    if (!e) {
        auto it = catalog().xsqs.find(name);
        if (it != catalog().xsqs.end()) {
            xsqs_[name] = it->second;
            return it->second;
        }
        e = catalog_entry("xsqs", name);
        if (!e) unknown_reference("xsq", name);
    }
    const std::string path = "xsqs." + name;
    if (e->contains("kind")) {
        require_fields(*e, path, {"kind", "name"});
        if (require_string((*e)["kind"], path + ".kind") != "builtin")
            shape_error(path + ".kind", "unknown xsq kind");
        std::string ref = require_string((*e)["name"], path + ".name");
        auto it = catalog().xsqs.find(ref);
        if (it == catalog().xsqs.end()) unknown_reference("builtin xsq", ref);
        xsqs_[name] = it->second;
        return it->second;
    }
    require_fields(*e, path,
                   {"l", "m", "n", "p", "lambda", "lambda_p", "mu", "nu", "act_pl", "act_pm",
                    "act_pn", "h"});
    GroupPtr l = group(require_string((*e)["l"], path + ".l"));
    GroupPtr m = group(require_string((*e)["m"], path + ".m"));
    GroupPtr n = group(require_string((*e)["n"], path + ".n"));
    GroupPtr p = group(require_string((*e)["p"], path + ".p"));
    GroupHom lambda = hom(require_string((*e)["lambda"], path + ".lambda"));
    GroupHom lambda_p = hom(require_string((*e)["lambda_p"], path + ".lambda_p"));
    GroupHom mu = hom(require_string((*e)["mu"], path + ".mu"));
    GroupHom nu = hom(require_string((*e)["nu"], path + ".nu"));
    GroupAction act_pl = action(require_string((*e)["act_pl"], path + ".act_pl"));
    GroupAction act_pm = action(require_string((*e)["act_pm"], path + ".act_pm"));
    GroupAction act_pn = action(require_string((*e)["act_pn"], path + ".act_pn"));
    auto h = require_table((*e)["h"], path + ".h", 0, l->order - 1);
    if (static_cast<int>(h.size()) != m->order) shape_error(path + ".h", "wrong shape");
    for (const auto& row : h)
        if (static_cast<int>(row.size()) != n->order) shape_error(path + ".h", "wrong shape");
    CrossedSquare sq{l,
                     m,
                     n,
                     p,
                     std::move(lambda),
                     std::move(lambda_p),
                     std::move(mu),
                     std::move(nu),
                     std::move(act_pl),
                     std::move(act_pm),
                     std::move(act_pn),
                     std::move(h),
                     name};
    XSqPtr out;
    try {
        out = make_square(std::move(sq));
    } catch (const Error& err) {
        shape_error(path, "square data does not fit together");
    }
    xsqs_[name] = out;
    return out;
}

std::optional<std::vector<std::vector<int>>> Resolver::optional_table(const std::string& kind,
                                                                      const std::string& name,
                                                                      const std::string& field) {
    const json* e = entry(kind, name);
    if (!e) e = catalog_entry(kind, name);
    if (!e || !e->contains(field)) return std::nullopt;
    return require_table((*e)[field], kind + "." + name + "." + field, -1, 1 << 20);
}

std::optional<std::vector<std::vector<int>>> Resolver::ggpd_m(const std::string& name) {
    return optional_table("ggpds", name, "m");
}

std::optional<std::vector<std::vector<int>>> Resolver::catxmod_m_a(const std::string& name) {
    return optional_table("catxmods", name, "m_a");
}

std::optional<std::vector<std::vector<int>>> Resolver::catxmod_m_b(const std::string& name) {
    return optional_table("catxmods", name, "m_b");
}

// ---- building ----

namespace {

const std::map<const FiniteGroup*, std::string>& catalog_group_names() {
    static const std::map<const FiniteGroup*, std::string> m = [] {
        std::map<const FiniteGroup*, std::string> out;
        for (const auto& [n, g] : catalog().groups) out[g.get()] = n;
        return out;
    }();
    return m;
}

const std::map<const CrossedModule*, std::string>& catalog_xmod_names() {
    static const std::map<const CrossedModule*, std::string> m = [] {
        std::map<const CrossedModule*, std::string> out;
        for (const auto& [n, x] : catalog().xmods) out[x.get()] = n;
        return out;
    }();
    return m;
}

bool is_cyclic_table(const FiniteGroup& g) {
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.cayley[x][y] != (x + y) % g.order) return false;
    return true;
}

json table_json(const std::vector<std::vector<int>>& t) {
    json rows = json::array();
    for (const auto& row : t) rows.push_back(row);
    return rows;
}

}  // namespace

BundleBuilder::BundleBuilder(bool inline_catalog)
    : inline_catalog_(inline_catalog), doc_(json::object()) {}

std::string BundleBuilder::unique_name(const std::string& kind, const std::string& hint) {
    if (!doc_.contains(kind) || !doc_[kind].contains(hint)) return hint;
    int k = 2;
    while (doc_[kind].contains(hint + "_" + std::to_string(k))) ++k;
    return hint + "_" + std::to_string(k);
}

std::string BundleBuilder::add_group(const GroupPtr& g, const std::string& name, bool catalog_ref) {
    auto memo = group_names_.find(g.get());
    if (memo != group_names_.end()) return memo->second;
    auto cat = catalog_group_names().find(g.get());
    std::string use;
    if (cat != catalog_group_names().end() && catalog_ref) {
        use = cat->second;
        if (!doc_["groups"].contains(use)) {
            if (inline_catalog_) {
                if (is_cyclic_table(*g))
                    doc_["groups"][use] = {{"kind", "cyclic"}, {"n", g->order}};
                else
                    doc_["groups"][use] = {{"kind", "table"}, {"table", table_json(g->cayley)}};
            } else {
                doc_["groups"][use] = {{"kind", "builtin"}, {"name", use}};
            }
        }
    } else {
        use = unique_name("groups", name);
        if (is_cyclic_table(*g))
            doc_["groups"][use] = {{"kind", "cyclic"}, {"n", g->order}};
        else
            doc_["groups"][use] = {{"kind", "table"}, {"table", table_json(g->cayley)}};
    }
    group_names_[g.get()] = use;
    return use;
}

std::string BundleBuilder::add_hom(const GroupHom& f, const std::string& name) {
    std::string dom = add_group(f.dom, name + ".dom");
    std::string cod = add_group(f.cod, name + ".cod");
    std::string use = unique_name("homs", name);
    doc_["homs"][use] = {{"dom", dom}, {"cod", cod}, {"map", f.map}};
    return use;
}

std::string BundleBuilder::add_action(const GroupAction& a, const std::string& name) {
    std::string actor = add_group(a.actor, name + ".actor");
    std::string space = add_group(a.space, name + ".space");
    std::string use = unique_name("actions", name);
    doc_["actions"][use] = {{"actor", actor}, {"space", space}, {"table", table_json(a.table)}};
    return use;
}

std::string BundleBuilder::add_xmod(const XModPtr& x, const std::string& name, bool catalog_ref) {
    auto memo = xmod_names_.find(x.get());
    if (memo != xmod_names_.end()) return memo->second;
    auto cat = catalog_xmod_names().find(x.get());
    if (cat != catalog_xmod_names().end() && catalog_ref && !inline_catalog_) {
        const std::string& use = cat->second;
        if (!doc_["xmods"].contains(use))
            doc_["xmods"][use] = {{"kind", "builtin"}, {"name", use}};
        xmod_names_[x.get()] = use;
        return use;
    }
    std::string use = cat != catalog_xmod_names().end() && catalog_ref
                          ? cat->second
                          : unique_name("xmods", name);
    // Reserve the name before recursing so dotted dependents stay grouped.
    xmod_names_[x.get()] = use;
    std::string a = add_group(x->a, use + ".a");
    std::string b = add_group(x->b, use + ".b");
    std::string alpha = add_hom(x->alpha, use + ".alpha");
    std::string action = add_action(x->action, use + ".action");
    doc_["xmods"][use] = {{"a", a}, {"b", b}, {"alpha", alpha}, {"action", action}};
    return use;
}

std::string BundleBuilder::add_ggpd(const GgpdPtr& g, const std::string& name, bool catalog_ref) {
    (void)catalog_ref;
    std::string use = unique_name("ggpds", name);
    std::string g1 = add_group(g->g1, use + ".g1");
    std::string g0 = add_group(g->g0, use + ".g0");
    std::string s = add_hom(g->s, use + ".s");
    std::string t = add_hom(g->t, use + ".t");
    std::string eps = add_hom(g->eps, use + ".eps");
    doc_["ggpds"][use] = {{"g1", g1}, {"g0", g0}, {"s", s}, {"t", t}, {"eps", eps}};
    return use;
}

std::string BundleBuilder::add_catxmod(const CatPtr& c, const std::string& name, bool catalog_ref) {
    (void)catalog_ref;
    std::string use = unique_name("catxmods", name);
    std::string c1 = add_xmod(c->c1, use + ".c1");
    std::string c0 = add_xmod(c->c0, use + ".c0");
    std::string s_a = add_hom(c->s.f_a, use + ".s_a");
    std::string s_b = add_hom(c->s.f_b, use + ".s_b");
    std::string t_a = add_hom(c->t.f_a, use + ".t_a");
    std::string t_b = add_hom(c->t.f_b, use + ".t_b");
    std::string eps_a = add_hom(c->eps.f_a, use + ".eps_a");
    std::string eps_b = add_hom(c->eps.f_b, use + ".eps_b");
    doc_["catxmods"][use] = {{"c1", c1},   {"c0", c0},   {"s_a", s_a},     {"s_b", s_b},
                             {"t_a", t_a}, {"t_b", t_b}, {"eps_a", eps_a}, {"eps_b", eps_b}};
    return use;
}

std::string BundleBuilder::add_xsq(const XSqPtr& s, const std::string& name, bool catalog_ref) {
    (void)catalog_ref;
    std::string use = unique_name("xsqs", name);
    std::string l = add_group(s->l, use + ".l");
    std::string m = add_group(s->m, use + ".m");
    std::string n = add_group(s->n, use + ".n");
    std::string p = add_group(s->p, use + ".p");
    std::string lambda = add_hom(s->lambda, use + ".lambda");
    std::string lambda_p = add_hom(s->lambda_p, use + ".lambda_p");
    std::string mu = add_hom(s->mu, use + ".mu");
    std::string nu = add_hom(s->nu, use + ".nu");
    std::string act_pl = add_action(s->act_pl, use + ".act_pl");
    std::string act_pm = add_action(s->act_pm, use + ".act_pm");
    std::string act_pn = add_action(s->act_pn, use + ".act_pn");
    doc_["xsqs"][use] = {{"l", l},
                         {"m", m},
                         {"n", n},
                         {"p", p},
                         {"lambda", lambda},
                         {"lambda_p", lambda_p},
                         {"mu", mu},
                         {"nu", nu},
                         {"act_pl", act_pl},
                         {"act_pm", act_pm},
                         {"act_pn", act_pn},
                         {"h", table_json(s->h)}};
    return use;
}

Bundle BundleBuilder::take() {
    json doc = json::object();
    for (const auto& kind : collection_kinds())
        if (doc_.contains(kind) && !doc_[kind].empty()) doc[kind] = doc_[kind];
    return Bundle{std::move(doc)};
}

const Bundle& catalog_bundle() {
    static const Bundle b = [] {
        const Catalog& c = catalog();
        BundleBuilder bb(/*inline_catalog=*/true);
        for (const auto& [n, g] : c.groups) bb.add_group(g, n, true);
        for (const auto& [n, x] : c.xmods) bb.add_xmod(x, n, true);
        for (const auto& [n, g] : c.ggpds) bb.add_ggpd(g, n, true);
        for (const auto& [n, x] : c.catxmods) bb.add_catxmod(x, n, true);
        for (const auto& [n, s] : c.xsqs) bb.add_xsq(s, n, true);
        return bb.take();
    }();
    return b;
}

}  // namespace xalg
