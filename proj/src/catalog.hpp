#pragma once

// Built-in example catalog: the named groups z1..z8, klein4, sym3, dih4,
// quat8, five crossed modules, pair/discrete internal categories over each,
// one group-groupoid per crossed module, and identity/trivial/normal-
// inclusion squares. Auxiliary entries (homs, actions, derived carrier
// groups) carry dotted names generated from their owner, so every reference
// in the catalog bundle resolves by name.

#include <map>
#include <string>

#include "xsq.hpp"

namespace xalg {

struct Catalog {
    std::map<std::string, GroupPtr> groups;
    std::map<std::string, GroupHom> homs;
    std::map<std::string, GroupAction> actions;
    std::map<std::string, XModPtr> xmods;
    std::map<std::string, GgpdPtr> ggpds;
    std::map<std::string, CatPtr> catxmods;
    std::map<std::string, XSqPtr> xsqs;

    // Top-level entry names per kind, before auxiliaries were added.
    std::map<std::string, std::vector<std::string>> toplevel;
};

const Catalog& catalog();

}  // namespace xalg
