#include "artin/graph.hpp"

#include <algorithm>
#include <numeric>

namespace artin {

std::string_view to_string(GraphErrc code) {
    switch (code) {
    case GraphErrc::InvalidName: return "InvalidName";
    case GraphErrc::DuplicateVertex: return "DuplicateVertex";
    case GraphErrc::DuplicateEdge: return "DuplicateEdge";
    case GraphErrc::SelfLoop: return "SelfLoop";
    case GraphErrc::LabelTooSmall: return "LabelTooSmall";
    case GraphErrc::UnknownEndpoint: return "UnknownEndpoint";
    case GraphErrc::UnknownVertex: return "UnknownVertex";
    case GraphErrc::NameCollision: return "NameCollision";
    case GraphErrc::GraphTooLarge: return "GraphTooLarge";
    case GraphErrc::MalformedCertificate: return "MalformedCertificate";
    }
    return "Unknown";
}

bool is_valid_vertex_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(name.front())) return false;
    return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c); });
}

LabeledGraph::LabeledGraph(std::vector<VertexName> vertices, std::span<const Edge> edges)
    : names_(std::move(vertices)) {
    for (const auto& name : names_) {
        if (!is_valid_vertex_name(name)) throw GraphError(GraphErrc::InvalidName, "invalid vertex name '" + name + "'");
    }
    std::sort(names_.begin(), names_.end());
    if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
        throw GraphError(GraphErrc::DuplicateVertex, "duplicate vertex '" + *dup + "'");
    }

    const std::size_t n = names_.size();
    labels_.assign(n * n, 0);
    for (const auto& e : edges) {
        if (e.u == e.v) throw GraphError(GraphErrc::SelfLoop, "self-loop on '" + e.u + "'");
        if (e.m < kMinLabel) {
            throw GraphError(GraphErrc::LabelTooSmall,
                             "label " + std::to_string(e.m) + " on edge " + e.u + "-" + e.v + " is below 2");
        }
        auto i = index_of(e.u);
        auto j = index_of(e.v);
        if (!i || !j) {
            throw GraphError(GraphErrc::UnknownEndpoint,
                             "edge " + e.u + "-" + e.v + " references undeclared vertex '" + (i ? e.v : e.u) + "'");
        }
        if (labels_[*i * n + *j] != 0) {
            throw GraphError(GraphErrc::DuplicateEdge, "duplicate edge " + e.u + "-" + e.v);
        }
        labels_[*i * n + *j] = e.m;
        labels_[*j * n + *i] = e.m;
    }
}

std::optional<std::size_t> LabeledGraph::index_of(std::string_view name) const noexcept {
    auto it = std::lower_bound(names_.begin(), names_.end(), name,
                               [](const VertexName& a, std::string_view b) { return std::string_view(a) < b; });
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::optional<Label> LabeledGraph::label(std::string_view a, std::string_view b) const noexcept {
    auto i = index_of(a);
    auto j = index_of(b);
    if (!i || !j) return std::nullopt;
    Label m = label_at(*i, *j);
    if (m == 0) return std::nullopt;
    return m;
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (Label m = label_at(i, j)) out.push_back({names_[i], names_[j], m});
        }
    }
    return out;
}

std::size_t LabeledGraph::edge_count() const noexcept {
    auto nonzero = std::count_if(labels_.begin(), labels_.end(), [](Label m) { return m != 0; });
    return static_cast<std::size_t>(nonzero) / 2;
}

LabeledGraph induced(const LabeledGraph& g, std::span<const VertexName> subset) {
    std::vector<VertexName> keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<std::size_t> idx;
    idx.reserve(keep.size());
    for (const auto& name : keep) {
        auto i = g.index_of(name);
        if (!i) throw GraphError(GraphErrc::UnknownVertex, "vertex '" + name + "' is not in the graph");
        idx.push_back(*i);
    }

    std::vector<Edge> edges;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            if (Label m = g.label_at(idx[a], idx[b])) edges.push_back({keep[a], keep[b], m});
        }
    }
    return LabeledGraph(std::move(keep), edges);
}

std::vector<std::vector<VertexName>> components(const LabeledGraph& g) {
    const std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexName>> out;
    std::vector<std::size_t> stack;
    // Seeds in ascending order, so the list comes out sorted by least member.
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w = 0; w < n; ++w) {
                if (!seen[w] && g.adjacent(v, w)) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        auto& names = out.emplace_back();
        for (auto v : comp) names.push_back(g.name(v));
    }
    return out;
}

std::vector<VertexName> center_vertices(const LabeledGraph& g) {
    std::vector<VertexName> out;
    for (std::size_t u = 0; u < g.size(); ++u) {
        bool apex = true;
        for (std::size_t v = 0; v < g.size() && apex; ++v) {
            if (v != u && g.label_at(u, v) != 2) apex = false;
        }
        if (apex) out.push_back(g.name(u));
    }
    return out;
}

LabeledGraph cone2(const LabeledGraph& g, const VertexName& apex) {
    if (g.contains(apex)) throw GraphError(GraphErrc::NameCollision, "apex '" + apex + "' already in graph");
    std::vector<VertexName> names(g.vertices().begin(), g.vertices().end());
    std::vector<Edge> edges = g.edges();
    for (const auto& v : names) edges.push_back({apex, v, 2});
    names.push_back(apex);
    return LabeledGraph(std::move(names), edges);
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
    for (const auto& v : b.vertices()) {
        if (a.contains(v)) throw GraphError(GraphErrc::NameCollision, "vertex '" + v + "' appears in both graphs");
    }
    std::vector<VertexName> names(a.vertices().begin(), a.vertices().end());
    names.insert(names.end(), b.vertices().begin(), b.vertices().end());
    std::vector<Edge> edges = a.edges();
    auto more = b.edges();
    edges.insert(edges.end(), more.begin(), more.end());
    return LabeledGraph(std::move(names), edges);
}

bool is_complete_all_two(const LabeledGraph& g) noexcept {
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (g.label_at(i, j) != 2) return false;
        }
    }
    return true;
}

LabeledGraph erf_extension(const LabeledGraph& g) {
    VertexName w1 = "w1";
    VertexName w2 = "w2";
    for (int suffix = 1; g.contains(w1) || g.contains(w2); ++suffix) {
        w1 = "w1_" + std::to_string(suffix);
        w2 = "w2_" + std::to_string(suffix);
    }
    std::vector<VertexName> names(g.vertices().begin(), g.vertices().end());
    std::vector<Edge> edges = g.edges();
    for (const auto& v : names) {
        edges.push_back({v, w1, 2});
        edges.push_back({v, w2, 2});
    }
    edges.push_back({w1, w2, 3});
    names.push_back(w1);
    names.push_back(w2);
    return LabeledGraph(std::move(names), edges);
}

void require_mask_capacity(const LabeledGraph& g) {
    if (g.size() > kMaxMaskVertices) {
        throw GraphError(GraphErrc::GraphTooLarge,
                         "graph has " + std::to_string(g.size()) + " vertices; at most 64 are supported");
    }
}

}  // namespace artin
