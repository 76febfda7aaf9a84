#pragma once

#include <array>
#include <string>
#include <vector>

#include "blockdec/decompose.hpp"

namespace blockdec {

// Ideal triangulation assembled from block pieces.  Sides are arc ids (>= 0)
// or -1 for a boundary segment; triangles are clockwise.
struct Triangulation {
    int node_count = 0;
    std::vector<int> arc_node;  // arc -> diagram node
    std::vector<std::array<int, 3>> tris;
    std::vector<std::pair<int, int>> conjugate_pairs;  // two arcs standing for one node

    int arc_count() const { return int(arc_node.size()); }
};

struct SurfaceInvariants {
    int genus = 0;
    int boundary = 0;
    int punctures = 0;
    std::vector<int> boundary_marked;  // sorted
    int chi = 0;
    int triangles = 0;
    int arcs = 0;

    bool operator==(const SurfaceInvariants& o) const {
        return genus == o.genus && boundary == o.boundary && punctures == o.punctures &&
               boundary_marked == o.boundary_marked;
    }
};

// Same underlying bordered surface: genus and number of boundary components.
bool same_surface(const SurfaceInvariants& a, const SurfaceInvariants& b);

Triangulation piece_triangulation(int tmpl, const BlockLibrary& lib = default_library());
Triangulation assemble(const GluePlan& plan, const BlockLibrary& lib = default_library());
SurfaceInvariants surface_invariants(const Triangulation& t);
ExchangeMatrix signed_adjacency_matrix(const Triangulation& t);
// b_IJ = sum over arcs j of J of b_ij, i any arc of I
ExchangeMatrix fold_to_nodes(const Triangulation& t, const ExchangeMatrix& arcs);

}  // namespace blockdec
