#pragma once

// Finite simplicial graphs with edges labeled by integers >= 2: the defining
// data of an Artin group. Vertices are identified by name and always kept in
// lexicographic order, so index i of a graph is the i-th smallest name.

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace artin {

using VertexName = std::string;

/// Edge label m of the Artin relation (ab)^m = (ba)^m. Always >= 2.
using Label = std::int32_t;

inline constexpr Label kMinLabel = 2;

struct Edge {
    VertexName u;
    VertexName v;
    Label m = kMinLabel;

    auto operator<=>(const Edge&) const = default;
};

enum class GraphErrc {
    InvalidName,
    DuplicateVertex,
    DuplicateEdge,
    SelfLoop,
    LabelTooSmall,
    UnknownEndpoint,
    UnknownVertex,
    NameCollision,
    GraphTooLarge,
    MalformedCertificate,
};

std::string_view to_string(GraphErrc code);

class GraphError : public std::invalid_argument {
public:
    GraphError(GraphErrc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}

    GraphErrc code() const noexcept { return code_; }

private:
    GraphErrc code_;
};

/// True for names of the form [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_vertex_name(std::string_view name) noexcept;

/// Immutable labeled graph. All invariants are checked on construction.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(std::vector<VertexName> vertices, std::span<const Edge> edges);
    LabeledGraph(std::vector<VertexName> vertices, std::initializer_list<Edge> edges)
        : LabeledGraph(std::move(vertices), std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    std::span<const VertexName> vertices() const noexcept { return names_; }
    const VertexName& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const noexcept;
    bool contains(std::string_view name) const noexcept { return index_of(name).has_value(); }

    // 0 when i and j are not adjacent (including i == j).
    Label label_at(std::size_t i, std::size_t j) const noexcept { return labels_[i * names_.size() + j]; }
    bool adjacent(std::size_t i, std::size_t j) const noexcept { return label_at(i, j) != 0; }

    std::optional<Label> label(std::string_view a, std::string_view b) const noexcept;

    /// Edges with u < v, sorted by (u, v).
    std::vector<Edge> edges() const;
    std::size_t edge_count() const noexcept;

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    std::vector<VertexName> names_;
    std::vector<Label> labels_;  // row-major size() x size()
};

/// Full subgraph on `subset`. Throws UnknownVertex.
LabeledGraph induced(const LabeledGraph& g, std::span<const VertexName> subset);

/// Connected components, each sorted; the list is sorted by smallest member.
std::vector<std::vector<VertexName>> components(const LabeledGraph& g);

/// Vertices 2-adjacent to every other vertex.
std::vector<VertexName> center_vertices(const LabeledGraph& g);

/// g plus `apex` joined to every vertex of g by an edge labeled 2.
LabeledGraph cone2(const LabeledGraph& g, const VertexName& apex);

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

bool is_complete_all_two(const LabeledGraph& g) noexcept;

/// Adds two fresh vertices (w1, w2 unless taken), each 2-adjacent to all of g,
/// joined to each other by an edge labeled 3.
LabeledGraph erf_extension(const LabeledGraph& g);

// Vertex subsets as bitmasks over the lexicographic vertex order.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxMaskVertices = 64;

/// Throws GraphTooLarge when g does not fit a VertexMask.
void require_mask_capacity(const LabeledGraph& g);

inline VertexMask full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

}  // namespace artin
