#include "doctest.h"

#include <random>

#include "artin/parser.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

SourceError source_error_of(std::string_view text, bool json = false) {
    try {
        if (json) {
            graph_from_json(text);
        } else {
            parse_artin(text);
        }
    } catch (const SourceError& e) {
        return e;
    }
    FAIL("expected SourceError");
    return SourceError(SourceErrc::Syntax, 0, 0, "");
}

}  // namespace

TEST_CASE("parse_artin basics") {
    CHECK(parse_artin("edge a b 3") == LabeledGraph({"a", "b"}, {{"a", "b", 3}}));
    CHECK(parse_artin("vertex a\nvertex b") == LabeledGraph({"a", "b"}, {}));
    CHECK(parse_artin("") == LabeledGraph());
    CHECK(parse_artin("# only a comment\n\n   \n") == LabeledGraph());
    CHECK(parse_artin("vertex a\r\nedge a b 2 # trailing\r\n") == LabeledGraph({"a", "b"}, {{"a", "b", 2}}));
    CHECK(parse_artin("\tedge  x_1\tY 2147483647") == LabeledGraph({"x_1", "Y"}, {{"x_1", "Y", 2147483647}}));
    // A vertex introduced by an edge may still be declared once.
    CHECK(parse_artin("edge a b 2\nvertex a") == LabeledGraph({"a", "b"}, {{"a", "b", 2}}));
}

TEST_CASE("parse_artin errors carry position and kind") {
    auto e = source_error_of("edge a b 1");
    CHECK(e.kind() == SourceErrc::LabelTooSmall);
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);

    e = source_error_of("vertex a\n\nedge a a 2");
    CHECK(e.kind() == SourceErrc::SelfLoop);
    CHECK(e.line() == 3);

    e = source_error_of("edge a b 2\nedge b a 3");
    CHECK(e.kind() == SourceErrc::DuplicateEdge);
    CHECK(e.line() == 2);

    e = source_error_of("vertex a\nvertex a");
    CHECK(e.kind() == SourceErrc::DuplicateVertexDecl);
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);

    CHECK(source_error_of("edge a b 2147483648").kind() == SourceErrc::LabelTooLarge);
    CHECK(source_error_of("edge a b 99999999999999999999999").kind() == SourceErrc::LabelTooLarge);
    CHECK(source_error_of("edge a b -4").kind() == SourceErrc::LabelTooSmall);
    CHECK(source_error_of("edge a b two").kind() == SourceErrc::Syntax);
    CHECK(source_error_of("edge a b").kind() == SourceErrc::Syntax);
    CHECK(source_error_of("edge a b 2 3").kind() == SourceErrc::Syntax);
    CHECK(source_error_of("node a").kind() == SourceErrc::Syntax);
    CHECK(source_error_of("vertex 1a").kind() == SourceErrc::Syntax);
    CHECK(source_error_of("vertex").kind() == SourceErrc::Syntax);
}

TEST_CASE("serialize_artin is canonical") {
    CHECK(serialize_artin(LabeledGraph({"a"}, {})) == "vertex a\n");
    CHECK(serialize_artin(LabeledGraph({"b", "a"}, {{"b", "a", 3}})) == "vertex a\nvertex b\nedge a b 3\n");
    CHECK(serialize_artin(LabeledGraph()) == "");
    CHECK(serialize_artin(parse_artin("edge c a 2\nedge b a 3\n")) ==
          serialize_artin(parse_artin("vertex c\nedge a b 3\nedge a c 2\n")));
}

TEST_CASE("graph JSON") {
    LabeledGraph edge({"a", "b"}, {{"a", "b", 3}});
    CHECK(graph_to_json(edge) == R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":3}]})");
    CHECK(graph_from_json(graph_to_json(edge)) == edge);
    CHECK(graph_to_json(LabeledGraph()) == R"({"vertices":[],"edges":[]})");

    CHECK(source_error_of(R"({"vertices":["a"],"edges":[{"u":"a","v":"a","m":2}]})", true).kind() ==
          SourceErrc::SelfLoop);
    CHECK(source_error_of(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":1}]})", true).kind() ==
          SourceErrc::LabelTooSmall);
    CHECK(source_error_of(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":2.5}]})", true).kind() ==
          SourceErrc::Schema);
    CHECK(source_error_of(R"({"vertices":["a"],"edges":[{"u":"a","v":"b","m":2}]})", true).kind() ==
          SourceErrc::UnknownEndpoint);
    CHECK(source_error_of(R"({"vertices":["a","a"],"edges":[]})", true).kind() == SourceErrc::DuplicateVertexDecl);
    CHECK(source_error_of(R"({"vertices":[1],"edges":[]})", true).kind() == SourceErrc::Schema);
    CHECK(source_error_of(R"({"vertices":[]})", true).kind() == SourceErrc::Schema);
    auto bad = source_error_of("{\n  \"vertices\": [,]}", true);
    CHECK(bad.kind() == SourceErrc::Syntax);
    CHECK(bad.line() == 2);
}

TEST_CASE("round trips in both formats") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        auto g = oracle::random_graph(rng, rng() % 9, {2, 3, 4, 1000}, 0.4);
        auto text = serialize_artin(g);
        CHECK(parse_artin(text) == g);
        CHECK(serialize_artin(parse_artin(text)) == text);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}

TEST_CASE("mutated inputs never escape as anything but SourceError") {
    std::mt19937_64 rng(99);
    const std::string alphabet = "abvertxedg 0123456789#\n\r\t-_{}[]\":,";
    for (int trial = 0; trial < 2000; ++trial) {
        auto text = serialize_artin(oracle::random_graph(rng, 1 + rng() % 5, {2, 3}, 0.5));
        auto json = graph_to_json(oracle::random_graph(rng, 1 + rng() % 5, {2, 3}, 0.5));
        for (auto* s : {&text, &json}) {
            int edits = 1 + static_cast<int>(rng() % 4);
            for (int k = 0; k < edits && !s->empty(); ++k) {
                std::size_t at = rng() % s->size();
                switch (rng() % 3) {
                case 0: (*s)[at] = alphabet[rng() % alphabet.size()]; break;
                case 1: s->erase(at, 1); break;
                default: s->insert(at, 1, alphabet[rng() % alphabet.size()]); break;
                }
            }
        }
        try {
            parse_artin(text);
        } catch (const SourceError&) {
        }
        try {
            graph_from_json(json);
        } catch (const SourceError&) {
        }
    }
}
