#include <doctest.h>

#include "blockdec/diagram.hpp"

using namespace blockdec;

TEST_CASE("parse and serialize round trip") {
    std::string text = "nodes 3\nedge 0 1 1\nedge 1 2 4\n";
    Diagram d = parse_diagram(text);
    CHECK(d.size() == 3);
    CHECK(d.arrow(0, 1) == 1);
    CHECK(d.arrow(1, 0) == 0);
    CHECK(d.weight(2, 1) == 4);
    CHECK(serialize_diagram(d) == text);
}

TEST_CASE("matrix input") {
    Diagram d = parse_diagram("0 1 0\n-1 0 2\n0 -2 0\n");
    CHECK(d.arrow(0, 1) == 1);
    CHECK(d.arrow(1, 2) == 4);
    Diagram s = parse_diagram("0 2 0\n-1 0 0\n0 0 0\n", Mode::S);
    CHECK(s.arrow(0, 1) == 2);
    ExchangeMatrix m = to_matrix(s);
    CHECK(from_matrix(m, Mode::S) == s);
    CHECK_THROWS_AS(parse_diagram("0 2\n-1 0\n"), Error);
    CHECK_THROWS_AS(parse_diagram("0 1\n1 0\n"), Error);
}

TEST_CASE("input errors") {
    auto code = [](const std::string& text, Mode m = Mode::Quiver) {
        try {
            parse_diagram(text, m);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Timeout;
    };
    CHECK(code("nodes 2\nedge 0 0 1\n") == Errc::SelfLoop);
    CHECK(code("nodes 2\nedge 0 1 1\nedge 1 0 1\n") == Errc::DuplicatePair);
    CHECK(code("nodes 2\nedge 0 2 1\n") == Errc::NodeOutOfRange);
    CHECK(code("nodes 2\nedge 0 1 3\n", Mode::S) == Errc::InvalidWeight);
    CHECK(code("nodes 2\nedge 0 1 2\n") == Errc::InvalidWeight);
    CHECK(code("nodes 2\nedge 0 x 1\n") == Errc::Parse);
    CHECK(code("") == Errc::Parse);
}

TEST_CASE("parse errors name line and column") {
    try {
        parse_diagram("nodes 2\n\nedge 0 q 1\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3, column 8") != std::string::npos);
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
    Diagram d = parse_diagram("nodes 4\nedge 0 1 1\nedge 1 2 1\nedge 2 0 1\nedge 2 3 4\n");
    CanonicalForm c = canonical_form(d);
    std::vector<int> perm = {2, 0, 3, 1};
    CHECK(canonical_form(relabel(d, perm)).key == c.key);
    CHECK(canonical_form(relabel(d, c.labeling)).key == c.key);
    Diagram other = parse_diagram("nodes 4\nedge 0 1 1\nedge 1 2 1\nedge 2 0 1\nedge 3 2 4\n");
    CHECK(canonical_form(other).key != c.key);
}

TEST_CASE("canonical labelings of the 3-cycle") {
    Diagram d = parse_diagram("nodes 3\nedge 0 1 1\nedge 1 2 1\nedge 2 0 1\n");
    auto labs = canonical_labelings(d);
    CHECK(labs.size() == 3);
    for (const auto& l : labs) CHECK(relabel(d, l) == relabel(d, labs[0]));
}

TEST_CASE("connectivity") {
    CHECK(parse_diagram("nodes 3\nedge 0 1 1\nedge 2 1 1\n").connected());
    CHECK_FALSE(parse_diagram("nodes 3\nedge 0 1 1\n").connected());
}
