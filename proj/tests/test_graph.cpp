#include "doctest.h"

#include <random>

#include "artin/graph.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

LabeledGraph square_all_two() {
    return LabeledGraph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}});
}

GraphErrc error_of(auto&& fn) {
    try {
        fn();
    } catch (const GraphError& e) {
        return e.code();
    }
    FAIL("expected GraphError");
    return GraphErrc::InvalidName;
}

}  // namespace

TEST_CASE("construction validates eagerly") {
    LabeledGraph single({"a"}, {});
    CHECK(single.size() == 1);
    CHECK(single.edge_count() == 0);

    LabeledGraph edge({"b", "a"}, {{"a", "b", 3}});
    CHECK(edge.vertices()[0] == "a");
    CHECK(edge.label("b", "a") == 3);

    CHECK(error_of([] { LabeledGraph({"a"}, {{"a", "a", 2}}); }) == GraphErrc::SelfLoop);
    CHECK(error_of([] { LabeledGraph({"a", "a"}, {}); }) == GraphErrc::DuplicateVertex);
    CHECK(error_of([] { LabeledGraph({"a", "b"}, {{"a", "b", 2}, {"b", "a", 3}}); }) == GraphErrc::DuplicateEdge);
    CHECK(error_of([] { LabeledGraph({"a", "b"}, {{"a", "b", 1}}); }) == GraphErrc::LabelTooSmall);
    CHECK(error_of([] { LabeledGraph({"a"}, {{"a", "z", 2}}); }) == GraphErrc::UnknownEndpoint);
    CHECK(error_of([] { LabeledGraph({"9a"}, {}); }) == GraphErrc::InvalidName);
    CHECK(LabeledGraph().empty());
}

TEST_CASE("equality is structural and independent of construction order") {
    LabeledGraph x({"a", "b", "c"}, {{"a", "b", 2}, {"c", "b", 5}});
    LabeledGraph y({"c", "a", "b"}, {{"b", "c", 5}, {"b", "a", 2}});
    CHECK(x == y);
    CHECK(x != LabeledGraph({"a", "b", "c"}, {{"a", "b", 2}, {"c", "b", 4}}));
}

TEST_CASE("induced subgraphs") {
    auto sq = square_all_two();
    std::vector<VertexName> ab{"a", "b"};
    CHECK(induced(sq, ab) == LabeledGraph({"a", "b"}, {{"a", "b", 2}}));
    std::vector<VertexName> all(sq.vertices().begin(), sq.vertices().end());
    CHECK(induced(sq, all) == sq);

    LabeledGraph tri({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}, {"a", "c", 5}});
    std::vector<VertexName> ac{"a", "c"};
    CHECK(induced(tri, ac) == LabeledGraph({"a", "c"}, {{"a", "c", 5}}));

    std::vector<VertexName> bogus{"a", "q"};
    CHECK(error_of([&] { induced(sq, bogus); }) == GraphErrc::UnknownVertex);
}

TEST_CASE("components") {
    CHECK(components(LabeledGraph({"a", "b"}, {})) == std::vector<std::vector<VertexName>>{{"a"}, {"b"}});
    CHECK(components(square_all_two()) == std::vector<std::vector<VertexName>>{{"a", "b", "c", "d"}});
    CHECK(components(LabeledGraph()).empty());
    LabeledGraph mixed({"a", "b", "c", "d"}, {{"a", "d", 3}, {"b", "c", 2}});
    CHECK(components(mixed) == std::vector<std::vector<VertexName>>{{"a", "d"}, {"b", "c"}});
}

TEST_CASE("center vertices") {
    LabeledGraph path({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}});
    CHECK(center_vertices(path) == std::vector<VertexName>{"b"});

    // Brute force over all four vertices of the square: none is adjacent to its opposite.
    auto sq = square_all_two();
    for (std::size_t u = 0; u < 4; ++u) {
        bool apex = true;
        for (std::size_t v = 0; v < 4; ++v) apex = apex && (u == v || sq.label_at(u, v) == 2);
        CHECK_FALSE(apex);
    }
    CHECK(center_vertices(sq).empty());

    LabeledGraph tri({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}, {"a", "c", 2}});
    CHECK(center_vertices(tri) == std::vector<VertexName>{"a", "b", "c"});
    CHECK(center_vertices(LabeledGraph({"z"}, {})) == std::vector<VertexName>{"z"});
}

TEST_CASE("cone2 and disjoint_union") {
    LabeledGraph ac({"a", "c"}, {});
    CHECK(cone2(ac, "b") == LabeledGraph({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}}));
    CHECK(cone2(LabeledGraph(), "u") == LabeledGraph({"u"}, {}));
    CHECK(cone2(LabeledGraph({"a", "b"}, {{"a", "b", 3}}), "u") ==
          LabeledGraph({"a", "b", "u"}, {{"a", "b", 3}, {"a", "u", 2}, {"b", "u", 2}}));
    CHECK(error_of([&] { cone2(ac, "a"); }) == GraphErrc::NameCollision);

    CHECK(disjoint_union(LabeledGraph({"a"}, {}), LabeledGraph({"b"}, {})) == LabeledGraph({"a", "b"}, {}));
    auto sq = square_all_two();
    CHECK(disjoint_union(sq, LabeledGraph()) == sq);
    auto two = disjoint_union(LabeledGraph({"a", "b"}, {{"a", "b", 2}}), LabeledGraph({"c", "d"}, {{"c", "d", 7}}));
    CHECK(two.size() == 4);
    CHECK(two.edge_count() == 2);
    CHECK(error_of([&] { disjoint_union(sq, LabeledGraph({"a"}, {})); }) == GraphErrc::NameCollision);
}

TEST_CASE("complete all-two") {
    LabeledGraph k4({"a", "b", "c", "d"},
                    {{"a", "b", 2}, {"a", "c", 2}, {"a", "d", 2}, {"b", "c", 2}, {"b", "d", 2}, {"c", "d", 2}});
    CHECK(is_complete_all_two(k4));
    CHECK_FALSE(is_complete_all_two(LabeledGraph({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}, {"a", "c", 3}})));
    CHECK(is_complete_all_two(LabeledGraph({"a"}, {})));
    CHECK(is_complete_all_two(LabeledGraph()));
}

TEST_CASE("erf_extension") {
    CHECK(erf_extension(LabeledGraph()) == LabeledGraph({"w1", "w2"}, {{"w1", "w2", 3}}));

    auto ext = erf_extension(LabeledGraph({"u", "v"}, {}));
    CHECK(ext.label("u", "w1") == 2);
    CHECK(ext.label("v", "w2") == 2);
    CHECK(ext.label("w1", "w2") == 3);
    CHECK_FALSE(ext.label("u", "v"));

    // Fresh names when w1 is taken.
    auto clash = erf_extension(LabeledGraph({"w1"}, {}));
    CHECK(clash.size() == 3);
    CHECK(clash.contains("w1_1"));
    CHECK(clash.label("w1_1", "w2_1") == 3);
    CHECK(clash.label("w1", "w1_1") == 2);
}

TEST_CASE("mask capacity") {
    std::vector<VertexName> names;
    for (int i = 0; i < 65; ++i) names.push_back("v" + std::to_string(i));
    LabeledGraph big(names, {});
    CHECK(error_of([&] { require_mask_capacity(big); }) == GraphErrc::GraphTooLarge);
    names.pop_back();
    CHECK_NOTHROW(require_mask_capacity(LabeledGraph(names, {})));
    CHECK(full_mask(64) == ~VertexMask{0});
    CHECK(full_mask(3) == 7);
}

TEST_CASE("graph properties on random graphs") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 8;
        auto g = oracle::random_graph(rng, n, {2, 3, 5}, 0.5);
        std::vector<VertexName> all(g.vertices().begin(), g.vertices().end());

        // induced(induced(g, A), B) == induced(g, B) for B in A.
        std::vector<VertexName> a, b;
        for (const auto& v : all) {
            if (rng() % 3 != 0) {
                a.push_back(v);
                if (rng() % 2) b.push_back(v);
            }
        }
        CHECK(induced(induced(g, a), b) == induced(g, b));

        // Components of a disjoint union are the union of components.
        auto h = oracle::random_graph(rng, 1 + rng() % 4, {2, 3}, 0.5);
        std::vector<Edge> renamed;
        std::vector<VertexName> hn;
        for (const auto& v : h.vertices()) hn.push_back("y_" + v);
        for (const auto& e : h.edges()) renamed.push_back({"y_" + e.u, "y_" + e.v, e.m});
        LabeledGraph h2(hn, renamed);
        auto joined = components(disjoint_union(g, h2));
        auto expect = components(g);
        auto more = components(h2);
        expect.insert(expect.end(), more.begin(), more.end());
        std::sort(expect.begin(), expect.end());
        std::sort(joined.begin(), joined.end());
        CHECK(joined == expect);

        // Apex of a 2-cone is central.
        auto coned = cone2(g, "apex_");
        auto center = center_vertices(coned);
        CHECK(std::find(center.begin(), center.end(), "apex_") != center.end());

        if (g.size() >= 2) {
            CHECK(is_complete_all_two(g) == (center_vertices(g).size() == g.size()));
        }
    }
}
