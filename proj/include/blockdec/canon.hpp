#pragma once

#include <cstdint>
#include <vector>

namespace blockdec {

// Vertex-coloured digraph with integer arc labels (0 = no arc).
struct LabeledDigraph {
    int n = 0;
    std::vector<int> color;
    std::vector<int> arc;  // row-major n*n

    explicit LabeledDigraph(int n_ = 0) : n(n_), color(n_, 0), arc(n_ * n_, 0) {}
    int& at(int i, int j) { return arc[i * n + j]; }
    int at(int i, int j) const { return arc[i * n + j]; }
};

struct Canonical {
    std::vector<int> cert;     // colours then relabelled arc matrix
    std::vector<int> labeling; // labeling[old] = new
};

// Individualisation-refinement search; automorphisms found on the way prune
// sibling branches in the same orbit.
Canonical canonical_labeling(const LabeledDigraph& g);

// Every permutation p with p(g) = canonical form.  Exhaustive, only meant for
// small graphs (sizes where the automorphism group is modest).
std::vector<std::vector<int>> all_canonical_labelings(const LabeledDigraph& g);

std::vector<int> apply_labeling(const LabeledDigraph& g, const std::vector<int>& lab);

}  // namespace blockdec
