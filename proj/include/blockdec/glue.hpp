#pragma once

#include <string>
#include <vector>

#include "blockdec/blocks.hpp"

namespace blockdec {

struct GluePlan {
    Mode mode = Mode::Quiver;
    int node_count = 0;
    std::vector<BlockInstance> blocks;
};

struct GlueResult {
    Diagram diagram;
    std::vector<char> black;  // per node
};

// Throws RuleViolation / OverlapViolation / ModeViolation / ArityMismatch /
// NodeOutOfRange naming the first broken gluing rule.
void validate_plan(const GluePlan& plan, const BlockLibrary& lib);

GlueResult glue(const GluePlan& plan, const BlockLibrary& lib);

// Order-free key; each block is reduced modulo its template automorphisms.
std::string block_key(const BlockInstance& b, const BlockLibrary& lib);
std::string plan_key(const GluePlan& plan, const BlockLibrary& lib);

GluePlan parse_plan(const std::string& text, const BlockLibrary& lib);
std::string serialize_plan(const GluePlan& plan, const BlockLibrary& lib);

GluePlan relabel_plan(const GluePlan& plan, const std::vector<int>& labeling);

}  // namespace blockdec
