#include <doctest.h>

#include <filesystem>

#include "blockdec/oracle.hpp"

using namespace blockdec;

TEST_CASE("single-block plans") {
    OracleOptions q;
    CHECK(enumerate_plans(q).size() == 6);
    CHECK(build_index(q).entries.size() == 6);
    OracleOptions s;
    s.mode = Mode::S;
    CHECK(enumerate_plans(s).size() == 13);
}

TEST_CASE("index lookups") {
    OracleOptions opt;
    opt.max_blocks = 3;
    OracleIndex idx = build_index(opt);
    const auto* cyc = idx.lookup(parse_diagram("nodes 3\nedge 0 1 1\nedge 1 2 1\nedge 2 0 1\n"));
    REQUIRE(cyc);
    CHECK(cyc->size() == 2);
    CHECK(idx.lookup(Diagram(1)) == nullptr);
    const auto* empty2 = idx.lookup(Diagram(2));
    REQUIRE(empty2);
    CHECK(empty2->size() == 1);
}

TEST_CASE("monotone in the block bound") {
    OracleOptions a, b;
    a.max_blocks = 2;
    b.max_blocks = 3;
    OracleIndex i2 = build_index(a), i3 = build_index(b);
    for (const auto& [k, v] : i2.entries) {
        REQUIRE(i3.entries.count(k));
        for (const auto& p : v) CHECK(i3.entries.at(k).count(p));
    }
}

TEST_CASE("plans validate, glue, and agree across threads") {
    OracleOptions opt;
    opt.max_blocks = 3;
    opt.mode = Mode::S;
    opt.max_nodes = 5;
    auto one = enumerate_plans(opt);
    opt.threads = 4;
    auto four = enumerate_plans(opt);
    REQUIRE(one.size() == four.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(plan_key(one[i], default_library()) == plan_key(four[i], default_library()));
        CHECK_NOTHROW(validate_plan(one[i], default_library()));
        CHECK(one[i].node_count <= 5);
    }
}

TEST_CASE("isomorphic plans share a key") {
    int s = default_library().index_of("Spike");
    GluePlan a{Mode::Quiver, 3, {{s, {0, 1}}, {s, {1, 2}}}};
    GluePlan b{Mode::Quiver, 3, {{s, {2, 0}}, {s, {1, 2}}}};
    GluePlan c{Mode::Quiver, 3, {{s, {1, 0}}, {s, {2, 0}}}};
    CHECK(plan_iso_key(a, default_library()) == plan_iso_key(b, default_library()));
    CHECK(plan_iso_key(a, default_library()) != plan_iso_key(c, default_library()));
}

TEST_CASE("index persistence") {
    OracleOptions opt;
    opt.max_blocks = 2;
    OracleIndex idx = build_index(opt);
    auto path = (std::filesystem::temp_directory_path() / "blockdec_index_test.txt").string();
    idx.save(path);
    OracleIndex back = OracleIndex::load(path);
    CHECK(back.entries == idx.entries);
    CHECK(back.blocks == idx.blocks);
    CHECK(back.params.max_blocks == 2);
    CHECK_THROWS_AS(OracleIndex::load(path + ".missing"), Error);
}

TEST_CASE("random plans are valid") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) CHECK_NOTHROW(validate_plan(random_plan(rng, 5, i % 2 ? Mode::S : Mode::Quiver), default_library()));
}
