#pragma once

#include <climits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "blockdec/glue.hpp"

namespace blockdec {

struct OracleOptions {
    int max_blocks = 1;
    Mode mode = Mode::Quiver;
    int max_nodes = INT_MAX;  // node budget; plans for n-node diagrams never need more than n
    int threads = 1;
};

// Key of a plan up to renaming its nodes (and template automorphisms).
std::string plan_iso_key(const GluePlan& plan, const BlockLibrary& lib);

// Connected plans (blocks linked through shared nodes) with at most
// max_blocks blocks, one per isomorphism class, sorted by plan_iso_key.
std::vector<GluePlan> enumerate_plans(const OracleOptions& opt, const BlockLibrary& lib = default_library());

struct OracleIndex {
    OracleOptions params;
    std::vector<std::string> blocks;
    // canonical diagram key -> plan keys on the canonically labelled diagram
    std::map<std::string, std::set<std::string>> entries;

    const std::set<std::string>* lookup(const Diagram& d) const;
    void save(const std::string& path) const;
    static OracleIndex load(const std::string& path);
};

OracleIndex build_index(const OracleOptions& opt, const BlockLibrary& lib = default_library());

// Plan keys of all decompositions of d moved onto its canonical labelling.
std::set<std::string> canonical_plan_keys(const Diagram& d, const std::vector<GluePlan>& plans, const BlockLibrary& lib);

GluePlan random_plan(std::mt19937_64& rng, int max_blocks, Mode mode, const BlockLibrary& lib = default_library());

}  // namespace blockdec
