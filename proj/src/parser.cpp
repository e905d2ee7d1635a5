#include "artin/parser.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"

namespace artin {

std::string_view to_string(SourceErrc kind) {
    switch (kind) {
    case SourceErrc::Syntax: return "Syntax";
    case SourceErrc::Schema: return "Schema";
    case SourceErrc::DuplicateVertexDecl: return "DuplicateVertexDecl";
    case SourceErrc::DuplicateEdge: return "DuplicateEdge";
    case SourceErrc::SelfLoop: return "SelfLoop";
    case SourceErrc::LabelTooSmall: return "LabelTooSmall";
    case SourceErrc::LabelTooLarge: return "LabelTooLarge";
    case SourceErrc::UnknownEndpoint: return "UnknownEndpoint";
    }
    return "Unknown";
}

SourceError::SourceError(SourceErrc kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

// Accepts an optionally signed decimal integer; range is checked by the caller.
Label parse_label(const Token& tok, std::size_t line) {
    std::string_view s = tok.text;
    bool negative = !s.empty() && s.front() == '-';
    std::string_view digits = (negative || (!s.empty() && s.front() == '+')) ? s.substr(1) : s;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw SourceError(SourceErrc::Syntax, line, tok.column, "expected integer label, got '" + std::string(s) + "'");
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range || value > kMaxLabel) {
        if (negative) throw SourceError(SourceErrc::LabelTooSmall, line, tok.column, "label must be at least 2");
        throw SourceError(SourceErrc::LabelTooLarge, line, tok.column, "label exceeds 2147483647");
    }
    if (negative) value = -value;
    if (value < kMinLabel) {
        throw SourceError(SourceErrc::LabelTooSmall, line, tok.column,
                          "label " + std::to_string(value) + " must be at least 2");
    }
    return static_cast<Label>(value);
}

std::string_view check_name(const Token& tok, std::size_t line) {
    if (!is_valid_vertex_name(tok.text)) {
        throw SourceError(SourceErrc::Syntax, line, tok.column, "invalid vertex name '" + std::string(tok.text) + "'");
    }
    return tok.text;
}

SourceErrc source_kind(GraphErrc code) {
    switch (code) {
    case GraphErrc::DuplicateVertex: return SourceErrc::DuplicateVertexDecl;
    case GraphErrc::DuplicateEdge: return SourceErrc::DuplicateEdge;
    case GraphErrc::SelfLoop: return SourceErrc::SelfLoop;
    case GraphErrc::LabelTooSmall: return SourceErrc::LabelTooSmall;
    case GraphErrc::UnknownEndpoint: return SourceErrc::UnknownEndpoint;
    default: return SourceErrc::Schema;
    }
}

std::pair<std::size_t, std::size_t> line_column_at(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

LabeledGraph parse_artin(std::string_view text) {
    std::vector<VertexName> vertices;
    std::set<std::string, std::less<>> known;
    std::set<std::string, std::less<>> declared;
    std::vector<Edge> edges;
    std::set<std::pair<std::string, std::string>> edge_keys;

    auto note_vertex = [&](std::string_view name) {
        if (known.find(name) == known.end()) {
            known.emplace(name);
            vertices.emplace_back(name);
        }
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        const Token& head = tokens.front();
        if (head.text == "vertex") {
            if (tokens.size() != 2) {
                throw SourceError(SourceErrc::Syntax, line_no, head.column, "expected: vertex NAME");
            }
            auto name = check_name(tokens[1], line_no);
            if (!declared.emplace(name).second) {
                throw SourceError(SourceErrc::DuplicateVertexDecl, line_no, tokens[1].column,
                                  "vertex '" + std::string(name) + "' declared twice");
            }
            note_vertex(name);
        } else if (head.text == "edge") {
            if (tokens.size() != 4) {
                throw SourceError(SourceErrc::Syntax, line_no, head.column, "expected: edge NAME NAME LABEL");
            }
            auto u = check_name(tokens[1], line_no);
            auto v = check_name(tokens[2], line_no);
            if (u == v) {
                throw SourceError(SourceErrc::SelfLoop, line_no, tokens[2].column,
                                  "self-loop on '" + std::string(u) + "'");
            }
            Label m = parse_label(tokens[3], line_no);
            std::pair<std::string, std::string> key{u, v};
            if (key.second < key.first) std::swap(key.first, key.second);
            if (!edge_keys.insert(key).second) {
                throw SourceError(SourceErrc::DuplicateEdge, line_no, head.column,
                                  "duplicate edge " + key.first + "-" + key.second);
            }
            note_vertex(u);
            note_vertex(v);
            edges.push_back({std::string(u), std::string(v), m});
        } else {
            throw SourceError(SourceErrc::Syntax, line_no, head.column,
                              "unknown directive '" + std::string(head.text) + "'");
        }
    }
    return LabeledGraph(std::move(vertices), edges);
}

std::string serialize_artin(const LabeledGraph& g) {
    std::string out;
    for (const auto& v : g.vertices()) {
        out += "vertex ";
        out += v;
        out += '\n';
    }
    for (const auto& e : g.edges()) {
        out += "edge " + e.u + " " + e.v + " " + std::to_string(e.m) + "\n";
    }
    return out;
}

std::string graph_to_json(const LabeledGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices()) j["vertices"].push_back(v);
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
        j["edges"].push_back(nlohmann::ordered_json{{"u", e.u}, {"v", e.v}, {"m", e.m}});
    }
    return j.dump();
}

LabeledGraph graph_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column_at(text, e.byte);
        throw SourceError(SourceErrc::Syntax, line, column, "malformed JSON");
    }

    auto schema = [](const std::string& what) { return SourceError(SourceErrc::Schema, 1, 1, what); };
    if (!j.is_object()) throw schema("top level must be an object");
    auto vs = j.find("vertices");
    auto es = j.find("edges");
    if (vs == j.end() || !vs->is_array()) throw schema("\"vertices\" must be an array");
    if (es == j.end() || !es->is_array()) throw schema("\"edges\" must be an array");

    std::vector<VertexName> vertices;
    for (const auto& v : *vs) {
        if (!v.is_string()) throw schema("vertex names must be strings");
        auto name = v.get<std::string>();
        if (!is_valid_vertex_name(name)) throw schema("invalid vertex name '" + name + "'");
        vertices.push_back(std::move(name));
    }

    std::vector<Edge> edges;
    for (const auto& e : *es) {
        if (!e.is_object()) throw schema("edges must be objects");
        auto u = e.find("u");
        auto v = e.find("v");
        auto m = e.find("m");
        if (u == e.end() || !u->is_string() || v == e.end() || !v->is_string()) {
            throw schema("edge endpoints \"u\" and \"v\" must be strings");
        }
        if (m == e.end() || !(m->is_number_integer())) throw schema("edge label \"m\" must be an integer");
        if (m->is_number_unsigned() ? m->get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxLabel)
                                    : m->get<std::int64_t>() > kMaxLabel) {
            throw SourceError(SourceErrc::LabelTooLarge, 1, 1, "label exceeds 2147483647");
        }
        auto value = m->get<std::int64_t>();
        if (value < kMinLabel) throw SourceError(SourceErrc::LabelTooSmall, 1, 1, "label must be at least 2");
        edges.push_back({u->get<std::string>(), v->get<std::string>(), static_cast<Label>(value)});
    }

    try {
        return LabeledGraph(std::move(vertices), edges);
    } catch (const GraphError& e) {
        throw SourceError(source_kind(e.code()), 1, 1, e.what());
    }
}

}  // namespace artin
