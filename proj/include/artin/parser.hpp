#pragma once

// Text formats for labeled graphs.
//
// .artin line format (UTF-8, LF or CRLF, `#` comments, whitespace tokens):
//
//     vertex NAME
//     edge NAME NAME LABEL
//
// Edges declare their endpoints implicitly. serialize_artin emits the
// canonical form: every vertex in order, then every edge with u < v.
//
// JSON: {"vertices": [...], "edges": [{"u": .., "v": .., "m": ..}, ...]}

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "artin/graph.hpp"

namespace artin {

enum class SourceErrc {
    Syntax,
    Schema,
    DuplicateVertexDecl,
    DuplicateEdge,
    SelfLoop,
    LabelTooSmall,
    LabelTooLarge,
    UnknownEndpoint,
};

std::string_view to_string(SourceErrc kind);

class SourceError : public std::runtime_error {
public:
    SourceError(SourceErrc kind, std::size_t line, std::size_t column, const std::string& message);

    SourceErrc kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    SourceErrc kind_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

inline constexpr long long kMaxLabel = 2147483647;

LabeledGraph parse_artin(std::string_view text);
std::string serialize_artin(const LabeledGraph& g);

std::string graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(std::string_view text);

}  // namespace artin
