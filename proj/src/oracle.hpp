#pragma once

// Independent brute-force enumerators over small carriers. These are the
// anti-regression oracles for the constructors elsewhere: they share only the
// checkers, not the derivation code. Automorphisms are found by filtering raw
// permutations, homomorphisms by exhaustive assignment with consistency
// pruning, h tables by constraint propagation.
//
// All results come back sorted by their canonical encodings, so enumeration
// order is deterministic across runs and platforms.

#include <string>
#include <vector>

#include "xsq.hpp"

namespace xalg {

struct EnumerationReport {
    std::string description;
    long long scanned = 0;  // complete candidates examined
    long long valid = 0;
    int classes = -1;  // -1 when classification was not requested
    double wall_ms = 0;
};

std::vector<GroupAction> enumerate_actions(GroupPtr b, GroupPtr a,
                                           EnumerationReport* report = nullptr,
                                           int limit = kOracleLimit);

std::vector<CrossedModule> enumerate_xmods(GroupPtr a, GroupPtr b,
                                           EnumerationReport* report = nullptr,
                                           int limit = kOracleLimit);

std::vector<GroupGroupoid> enumerate_groupoid_structures(GroupPtr g1, GroupPtr g0,
                                                         EnumerationReport* report = nullptr,
                                                         int limit = kOracleLimit);

// All h tables completing the frame (frame.h is ignored) to a crossed square.
std::vector<std::vector<std::vector<int>>> enumerate_h_maps(const CrossedSquare& frame,
                                                            EnumerationReport* report = nullptr,
                                                            int cell_limit = 64);

struct Classification {
    std::vector<int> class_of;        // structure index -> class id
    std::vector<int> representatives; // class id -> index of least member
};

Classification classify_actions(const std::vector<GroupAction>& v);
Classification classify_xmods(const std::vector<CrossedModule>& v);
Classification classify_groupoids(const std::vector<GroupGroupoid>& v);

// Canonical one-line encodings used for ordering and report output.
std::string encode_action(const GroupAction& a);
std::string encode_xmod(const CrossedModule& x);
std::string encode_groupoid(const GroupGroupoid& g);

}  // namespace xalg
