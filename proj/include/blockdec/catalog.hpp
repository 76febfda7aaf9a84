#pragma once

#include <string>
#include <vector>

#include "blockdec/surface.hpp"

namespace blockdec {

struct CatalogEntry {
    std::string id;
    Diagram diagram;
    Mode mode = Mode::Quiver;
    int expected_count = 0;
    bool surface_unique = true;
    bool reconstructed = false;
    bool count_provisional = false;
};

std::vector<CatalogEntry> parse_catalog(const std::string& text);
std::vector<CatalogEntry> load_catalog(const std::string& path = data_path("catalog.txt"));
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& id);

struct EntryReport {
    std::string id;
    Mode mode = Mode::Quiver;
    int expected_count = 0;
    int found_count = 0;
    bool expected_unique = true;
    bool count_ok = false;
    bool surface_ok = false;
    bool same_surface = false;       // genus and boundary agree across decompositions
    bool identical_invariants = false;
    bool reconstructed = false;
    bool count_provisional = false;
    std::vector<GluePlan> plans;
    std::vector<std::string> keys;
    std::vector<SurfaceInvariants> surfaces;
};

EntryReport verify_entry(const CatalogEntry& e, int threads = 1, const BlockLibrary& lib = default_library());

struct SweepHit {
    std::string key;       // canonical diagram key
    Diagram diagram;       // canonically labelled
    int oracle_count = 0;
    int decomposer_count = 0;
    std::string catalog_id;  // empty when not in the catalog
};

// Connected diagrams on at most max_nodes nodes with more than one decomposition.
std::vector<SweepHit> sweep_uniqueness(int max_nodes, Mode mode, const std::vector<CatalogEntry>& catalog, int threads = 1,
                                       const BlockLibrary& lib = default_library());

}  // namespace blockdec
