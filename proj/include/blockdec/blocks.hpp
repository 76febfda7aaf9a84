#pragma once

#include <array>
#include <string>
#include <vector>

#include "blockdec/diagram.hpp"

namespace blockdec {

struct TemplateEdge {
    int from = 0;  // label index
    int to = 0;
    int weight = 1;
};

// Triangulated surface piece attached to a block.  Triangles list their three
// sides in clockwise order; a side is an arc index or -1 for a boundary
// segment.  An arc repeated inside one triangle makes it self-folded.
struct Piece {
    std::string id;
    std::vector<std::string> arcs;
    std::vector<int> arc_label;  // arc -> template label index
    std::vector<std::array<int, 3>> tris;
};

struct BlockTemplate {
    std::string tag;
    bool unfolding = false;  // only legal in s-mode
    std::vector<std::string> labels;
    std::vector<char> white;
    std::vector<TemplateEdge> edges;
    Piece piece;
    std::vector<std::vector<int>> automorphisms;  // label permutations, identity first

    int arity() const { return int(labels.size()); }
    int label_index(const std::string& l) const;
    int white_count() const;
    // weight of the template edge a -> b, 0 if none
    int arrow(int a, int b) const;
};

class BlockLibrary {
public:
    static BlockLibrary load(const std::string& path);
    static BlockLibrary parse(const std::string& text);

    const std::vector<BlockTemplate>& templates() const { return t_; }
    const BlockTemplate& at(int i) const { return t_[i]; }
    int index_of(const std::string& tag) const;  // throws UnknownBlock
    int size() const { return int(t_.size()); }
    bool allowed(int i, Mode m) const { return m == Mode::S || !t_[i].unfolding; }

private:
    std::vector<BlockTemplate> t_;
};

std::string data_path(const std::string& file);
const BlockLibrary& default_library();

// Instantiated template: blocks[k].nodes[label] = diagram node.
struct BlockInstance {
    int tmpl = 0;
    std::vector<int> nodes;
    bool operator==(const BlockInstance&) const = default;
};

std::vector<int> white_slots(const BlockInstance& b, const BlockLibrary& lib);
Diagram instantiate(const BlockInstance& b, int node_count, Mode mode, const BlockLibrary& lib);

}  // namespace blockdec
