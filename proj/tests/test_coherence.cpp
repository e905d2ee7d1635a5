#include "doctest.h"

#include <random>

#include "artin/coherence.hpp"
#include "artin/poison.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

using V = std::vector<VertexName>;

LabeledGraph square() {
    return LabeledGraph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}});
}

LabeledGraph triangle(Label ab, Label bc, Label ac) {
    return LabeledGraph({"a", "b", "c"}, {{"a", "b", ab}, {"b", "c", bc}, {"a", "c", ac}});
}

// Every labeled graph on v1..vn whose edge set is the given skeleton bitmask.
LabeledGraph skeleton(std::size_t n, std::uint64_t bits) {
    std::vector<VertexName> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++k)
            if (bits >> k & 1) edges.push_back({names[i], names[j], 2});
    return LabeledGraph(names, edges);
}

}  // namespace

TEST_CASE("is_chordal examples") {
    auto sq = is_chordal(square());
    CHECK_FALSE(sq.chordal);
    REQUIRE(sq.cycle_witness);
    CHECK(*sq.cycle_witness == V{"a", "b", "c", "d"});

    LabeledGraph k4({"a", "b", "c", "d"},
                    {{"a", "b", 3}, {"a", "c", 7}, {"a", "d", 2}, {"b", "c", 2}, {"b", "d", 5}, {"c", "d", 2}});
    CHECK(is_chordal(k4).chordal);
    CHECK_FALSE(is_chordal(k4).cycle_witness);
    CHECK(is_chordal(LabeledGraph()).chordal);
    CHECK(is_chordal(LabeledGraph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 3}, {"b", "d", 2}})).chordal);

    // Pentagon with a pendant triangle elsewhere.
    LabeledGraph pent({"p", "q", "r", "s", "t", "x"},
                      {{"p", "q", 2}, {"q", "r", 2}, {"r", "s", 2}, {"s", "t", 2}, {"t", "p", 2}, {"x", "p", 2}, {"x", "q", 2}});
    auto res = is_chordal(pent);
    CHECK_FALSE(res.chordal);
    REQUIRE(res.cycle_witness);
    CHECK(oracle::is_induced_cycle(pent, *res.cycle_witness));
}

TEST_CASE("chordality agrees with induced-cycle enumeration on every skeleton with n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::uint64_t pairs = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
            auto g = skeleton(n, bits);
            auto res = is_chordal(g);
            CHECK(res.chordal == !oracle::has_long_induced_cycle(g));
            if (!res.chordal) {
                REQUIRE(res.cycle_witness);
                CHECK(oracle::is_induced_cycle(g, *res.cycle_witness));
            }
        }
    }
}

TEST_CASE("find_bad_clique") {
    auto t = triangle(3, 3, 2);
    CHECK(find_bad_clique(t) == V{"a", "b", "c"});
    CHECK_FALSE(find_bad_clique(triangle(2, 2, 5)));
    LabeledGraph k4({"a", "b", "c", "d"},
                    {{"a", "b", 2}, {"a", "c", 2}, {"a", "d", 2}, {"b", "c", 2}, {"b", "d", 2}, {"c", "d", 2}});
    CHECK_FALSE(find_bad_clique(k4));
    // Disjoint big edges in a K4 only show up on the 4-set.
    LabeledGraph k4_two({"a", "b", "c", "d"},
                        {{"a", "b", 2}, {"a", "c", 3}, {"a", "d", 2}, {"b", "c", 2}, {"b", "d", 5}, {"c", "d", 2}});
    CHECK(find_bad_clique(k4_two) == V{"a", "b", "c", "d"});
    // A path with two big labels is not complete.
    CHECK_FALSE(find_bad_clique(LabeledGraph({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}})));
}

TEST_CASE("is_coherent examples") {
    LabeledGraph p4({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}});
    CHECK(oracle::coherent(p4));
    CHECK(is_coherent(p4).coherent);

    LabeledGraph chord({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}, {"a", "c", 3}});
    auto r = is_coherent(chord);
    CHECK_FALSE(r.coherent);
    CHECK(r.chordal);
    REQUIRE(r.k4_poison_witness);
    CHECK(r.k4_poison_witness->kind == PoisonKind::SquareOneChord);
    CHECK_FALSE(r.clique_witness);

    auto tri = is_coherent(triangle(3, 3, 2));
    CHECK_FALSE(tri.coherent);
    CHECK(tri.clique_witness == V{"a", "b", "c"});

    auto sq = is_coherent(square());
    CHECK_FALSE(sq.coherent);
    CHECK_FALSE(sq.chordal);
}

TEST_CASE("check_path_condition examples") {
    CHECK_FALSE(check_path_condition(LabeledGraph({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}})));
    auto bad = check_path_condition(LabeledGraph({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}}));
    REQUIRE(bad);
    CHECK(*bad == PathViolation{V{"a", "b", "c"}, PathViolationReason::LabelNotTwo});
    auto longer = check_path_condition(LabeledGraph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}}));
    REQUIRE(longer);
    CHECK(*longer == PathViolation{V{"a", "b", "c", "d"}, PathViolationReason::LengthExceedsTwo});
    CHECK_FALSE(check_path_condition(triangle(3, 3, 3)));
}

TEST_CASE("is_erf") {
    LabeledGraph k4({"a", "b", "c", "d"},
                    {{"a", "b", 2}, {"a", "c", 2}, {"a", "d", 2}, {"b", "c", 2}, {"b", "d", 2}, {"c", "d", 2}});
    CHECK(is_erf(k4));
    CHECK_FALSE(is_erf(LabeledGraph({"a", "b"}, {{"a", "b", 3}})));
    CHECK(is_erf(LabeledGraph()));
}

TEST_CASE("coherence and path condition against the brute-force definitions, n <= 5, labels {2,3}") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& g : oracle::all_graphs(n, {2, 3})) {
            auto r = is_coherent(g);
            CHECK(r.coherent == oracle::coherent(g));
            CHECK(check_path_condition(g).has_value() == !oracle::path_condition_holds(g));
            bool lerf = !oracle::poisonous(g);
            if (lerf) CHECK(r.coherent);
            if (r.coherent) CHECK(lerf == !check_path_condition(g).has_value());
            if (is_erf(g)) CHECK(lerf);
        }
    }
}

TEST_CASE("implications between verdicts and witness validity on random graphs") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 1500; ++trial) {
        auto g = oracle::random_graph(rng, 1 + rng() % 9, {2, 3, 4}, std::array{0.2, 0.5, 0.8}[trial % 3]);
        auto r = is_coherent(g);
        bool lerf = !find_poison(g).has_value();
        if (lerf) CHECK(r.coherent);
        if (r.coherent) CHECK(lerf == !check_path_condition(g).has_value());
        if (r.cycle_witness) CHECK(oracle::is_induced_cycle(g, *r.cycle_witness));
        if (r.k4_poison_witness) CHECK(verify_witness(g, *r.k4_poison_witness));
        if (r.clique_witness) {
            const auto& c = *r.clique_witness;
            int big = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    auto m = g.label(c[i], c[j]);
                    REQUIRE(m);
                    big += *m > 2;
                }
            CHECK(big >= 2);
        }
        CHECK(r.coherent == (r.chordal && !r.clique_witness && !r.k4_poison_witness));

        bool erf = is_erf(g);
        if (erf) CHECK(lerf);
        CHECK(find_poison(erf_extension(g)).has_value() == !erf);
    }
}
