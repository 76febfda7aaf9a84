#pragma once

#include <json.hpp>

#include "blockdec/catalog.hpp"

namespace blockdec {

using Json = nlohmann::ordered_json;

Json plan_json(const GluePlan& plan, const BlockLibrary& lib = default_library());
Json diagram_json(const Diagram& d);
Json surface_json(const SurfaceInvariants& s);
Json entry_json(const EntryReport& r, const BlockLibrary& lib = default_library());
Json sweep_json(int max_nodes, Mode mode, const std::vector<SweepHit>& hits);

}  // namespace blockdec
