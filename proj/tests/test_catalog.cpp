#include <doctest.h>

#include <set>

#include "blockdec/catalog.hpp"

using namespace blockdec;

TEST_CASE("catalog file") {
    auto cat = load_catalog();
    CHECK(cat.size() == 14);
    std::set<std::string> keys;
    for (const auto& e : cat) {
        keys.insert(canonical_form(e.diagram).key);
        CHECK(e.surface_unique == (e.id != "5"));
        CHECK((e.mode == Mode::S) == (e.id == "16" || e.id == "17"));
        CHECK(e.diagram.connected());
    }
    CHECK(keys.size() == cat.size());
    const CatalogEntry& g1 = find_entry(cat, "1");
    CHECK(g1.expected_count == 2);
    CHECK(g1.diagram == parse_diagram("nodes 3\nedge 0 1 1\nedge 1 2 1\nedge 2 0 1\n"));
    CHECK(find_entry(cat, "17").diagram.weight(2, 0) == 4);
    CHECK_THROWS_AS(find_entry(cat, "99"), Error);
}

TEST_CASE("catalog parse errors") {
    CHECK_THROWS_AS(parse_catalog("nodes 2\n"), Error);
    CHECK_THROWS_AS(parse_catalog("graph 1\nnodes 2\nedge 0 1 1\n"), Error);
    CHECK_THROWS_AS(parse_catalog("graph 1\nexpect_count 1\nflag odd\nnodes 2\nedge 0 1 1\n"), Error);
    CHECK_THROWS_AS(parse_catalog("graph 1\nexpect_count 1\nnodes 2\nedge 0 0 1\n"), Error);
    auto one = parse_catalog("graph x\nmode s\nexpect_count 1\nsurface_unique false\nnodes 2\nedge 0 1 2\n");
    CHECK(one.size() == 1);
    CHECK_FALSE(one[0].surface_unique);
}

TEST_CASE("verification reports") {
    auto cat = load_catalog();
    EntryReport r1 = verify_entry(find_entry(cat, "1"));
    CHECK(r1.count_ok);
    CHECK(r1.surface_ok);
    CHECK(r1.same_surface);
    CHECK_FALSE(r1.identical_invariants);
    EntryReport r5 = verify_entry(find_entry(cat, "5"));
    CHECK(r5.count_ok);
    CHECK(r5.surface_ok);
    CHECK_FALSE(r5.same_surface);
    EntryReport r4 = verify_entry(find_entry(cat, "4"));
    CHECK(r4.found_count == 3);
    for (const auto& p : r4.plans) CHECK(glue(p, default_library()).diagram == find_entry(cat, "4").diagram);
}

TEST_CASE("sweep at two nodes") {
    auto cat = load_catalog();
    CHECK(sweep_uniqueness(2, Mode::Quiver, cat).empty());
    auto s = sweep_uniqueness(2, Mode::S, cat);
    REQUIRE(s.size() == 1);
    CHECK(s[0].catalog_id.empty());
    CHECK(s[0].oracle_count == 2);
    CHECK(s[0].decomposer_count == 2);
    CHECK_THROWS_AS(sweep_uniqueness(7, Mode::Quiver, cat), Error);
}
