#include <doctest.h>

#include "blockdec/glue.hpp"

using namespace blockdec;

namespace {

Errc failure(const GluePlan& p) {
    try {
        validate_plan(p, default_library());
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Timeout;
}

int id(const char* tag) { return default_library().index_of(tag); }

}  // namespace

TEST_CASE("three spikes glue to the 3-cycle") {
    GluePlan p = parse_plan("mode quiver\nnodes 3\nblock Spike 0 1\nblock Spike 1 2\nblock Spike 2 0\n", default_library());
    GlueResult r = glue(p, default_library());
    CHECK(r.diagram == parse_diagram("nodes 3\nedge 1 0 1\nedge 2 1 1\nedge 0 2 1\n"));
    CHECK(r.black == std::vector<char>{1, 1, 1});
}

TEST_CASE("a lone triangle keeps white nodes") {
    GluePlan p{Mode::Quiver, 3, {{id("Triangle"), {0, 1, 2}}}};
    GlueResult r = glue(p, default_library());
    CHECK(r.diagram == parse_diagram("nodes 3\nedge 0 1 1\nedge 1 2 1\nedge 2 0 1\n"));
    CHECK(r.black == std::vector<char>{0, 0, 0});
}

TEST_CASE("spike multiplicities") {
    int s = id("Spike");
    Diagram parallel = glue({Mode::Quiver, 2, {{s, {0, 1}}, {s, {0, 1}}}}, default_library()).diagram;
    CHECK(parallel.edges().size() == 1);
    CHECK(parallel.arrow(1, 0) == 4);
    Diagram anti = glue({Mode::S, 2, {{s, {0, 1}}, {s, {1, 0}}}}, default_library()).diagram;
    CHECK(anti.edges().empty());
}

TEST_CASE("gluing rule violations") {
    int s = id("Spike"), in = id("Infork"), tri = id("Triangle");
    CHECK(failure({Mode::Quiver, 2, {{tri, {0, 1}}}}) == Errc::ArityMismatch);
    CHECK(failure({Mode::Quiver, 3, {{tri, {0, 1, 1}}}}) == Errc::RuleViolation);
    CHECK(failure({Mode::Quiver, 2, {{s, {0, 1}}, {s, {0, 1}}, {s, {1, 0}}}}) == Errc::OverlapViolation);
    CHECK(failure({Mode::Quiver, 4, {{in, {0, 1, 2}}, {s, {1, 3}}}}) == Errc::OverlapViolation);
    CHECK(failure({Mode::Quiver, 3, {{s, {0, 1}}}}) == Errc::RuleViolation);
    CHECK(failure({Mode::Quiver, 2, {{id("Ia"), {0, 1}}}}) == Errc::ModeViolation);
    CHECK(failure({Mode::Quiver, 2, {{s, {0, 5}}}}) == Errc::NodeOutOfRange);
    CHECK(failure({Mode::S, 2, {{id("Ia"), {0, 1}}}}) == Errc::Timeout);
}

TEST_CASE("keys quotient template automorphisms") {
    int tri = id("Triangle");
    GluePlan a{Mode::Quiver, 3, {{tri, {0, 1, 2}}}}, b{Mode::Quiver, 3, {{tri, {1, 2, 0}}}}, c{Mode::Quiver, 3, {{tri, {0, 2, 1}}}};
    CHECK(plan_key(a, default_library()) == plan_key(b, default_library()));
    CHECK(plan_key(a, default_library()) != plan_key(c, default_library()));
}

TEST_CASE("plan text round trip") {
    GluePlan p{Mode::S, 3, {{id("II"), {0, 1, 2}}, {id("Spike"), {2, 0}}}};
    std::string text = serialize_plan(p, default_library());
    GluePlan q = parse_plan(text, default_library());
    CHECK(serialize_plan(q, default_library()) == text);
    CHECK_THROWS_AS(parse_plan("mode quiver\nnodes 2\nblock Nope 0 1\n", default_library()), Error);
    CHECK_THROWS_AS(parse_plan("mode quiver\nnodes 2\nblock Spike 0\n", default_library()), Error);
}

TEST_CASE("relabelling a plan") {
    GluePlan p{Mode::Quiver, 3, {{id("Infork"), {0, 1, 2}}}};
    GluePlan q = relabel_plan(p, {2, 0, 1});
    CHECK(q.blocks[0].nodes == std::vector<int>{2, 0, 1});
    CHECK(glue(q, default_library()).diagram == relabel(glue(p, default_library()).diagram, {2, 0, 1}));
}
