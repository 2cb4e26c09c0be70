#pragma once

// The bundle file format: a JSON document with top-level collections
// "groups", "homs", "actions", "xmods", "ggpds", "catxmods", "xsqs".
// Groups are {"kind":"table","table":[[...]]} | {"kind":"cyclic","n":k} |
// {"kind":"builtin","name":...}; homs are {"dom","cod","map"}; actions are
// {"actor","space","table"}; composite structures reference entries by name.
// Any collection entry may instead be {"kind":"builtin","name":...}, which
// resolves against the built-in catalog.
//
// Serialization is canonical: keys sorted, two-space indentation, integer
// arrays on one line, empty collections dropped, trailing newline. Parsing a
// serialized bundle and serializing again is byte-identical.

#include <optional>
#include <string>

#include <json.hpp>

#include "catalog.hpp"

namespace xalg {

struct Bundle {
    nlohmann::json doc;
};

// Parses and structurally validates (shapes and references; no axiom
// checks). Throws Error with tag SyntaxError, ShapeError or
// UnknownReference, all classified as input errors.
Bundle parse_bundle(const std::string& text);

std::string serialize_bundle(const Bundle& b);

// The catalog rendered as a bundle; entry names match catalog() keys,
// auxiliary entries carry dotted names.
const Bundle& catalog_bundle();

// Name resolution over a bundle with catalog fallback. Resolution performs
// shape validation only; axiom checks are separate commands.
class Resolver {
public:
    explicit Resolver(const Bundle* bundle);  // nullptr = catalog only

    GroupPtr group(const std::string& name);
    GroupHom hom(const std::string& name);
    GroupAction action(const std::string& name);
    XModPtr xmod(const std::string& name);
    GgpdPtr ggpd(const std::string& name);
    CatPtr catxmod(const std::string& name);
    XSqPtr xsq(const std::string& name);

    // Optional explicit composition tables attached to bundle entries.
    std::optional<std::vector<std::vector<int>>> ggpd_m(const std::string& name);
    std::optional<std::vector<std::vector<int>>> catxmod_m_a(const std::string& name);
    std::optional<std::vector<std::vector<int>>> catxmod_m_b(const std::string& name);

private:
    const nlohmann::json* entry(const std::string& kind, const std::string& name);
    std::optional<std::vector<std::vector<int>>> optional_table(const std::string& kind,
                                                                const std::string& name,
                                                                const std::string& field);

    const Bundle* bundle_;
    std::map<std::string, GroupPtr> groups_;
    std::map<std::string, XModPtr> xmods_;
    std::map<std::string, GgpdPtr> ggpds_;
    std::map<std::string, CatPtr> catxmods_;
    std::map<std::string, XSqPtr> xsqs_;
};

// Assembles bundles from in-memory structures. Catalog-owned groups and
// crossed modules are referenced by their catalog names ({"kind":"builtin"}
// stubs) unless inline_catalog is set; other dependencies are emitted inline
// under dotted names derived from their owner.
class BundleBuilder {
public:
    explicit BundleBuilder(bool inline_catalog = false);

    std::string add_group(const GroupPtr& g, const std::string& name, bool catalog_ref = true);
    std::string add_hom(const GroupHom& f, const std::string& name);
    std::string add_action(const GroupAction& a, const std::string& name);
    std::string add_xmod(const XModPtr& x, const std::string& name, bool catalog_ref = true);
    std::string add_ggpd(const GgpdPtr& g, const std::string& name, bool catalog_ref = true);
    std::string add_catxmod(const CatPtr& c, const std::string& name, bool catalog_ref = true);
    std::string add_xsq(const XSqPtr& s, const std::string& name, bool catalog_ref = true);

    Bundle take();

private:
    std::string unique_name(const std::string& kind, const std::string& hint);

    bool inline_catalog_;
    nlohmann::json doc_;
    std::map<const FiniteGroup*, std::string> group_names_;
    std::map<const CrossedModule*, std::string> xmod_names_;
};

}  // namespace xalg
