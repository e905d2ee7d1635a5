#include "artin/sclass.hpp"

#include <bit>
#include <unordered_map>

namespace artin {

bool SCertificate::is_empty_leaf() const noexcept {
    const auto* leaf = std::get_if<Leaf>(&node);
    return leaf != nullptr && leaf->vertices.empty();
}

namespace {

bool same_ptr_target(const SCertificatePtr& a, const SCertificatePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

class SubsetSolver {
public:
    SubsetSolver(const LabeledGraph& g, ApexStrategy strategy) : g_(g), strategy_(strategy) {
        const std::size_t n = g.size();
        adjacent_.assign(n, 0);
        two_adjacent_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Label m = g.label_at(i, j);
                if (m != 0) adjacent_[i] |= bit(j);
                if (m == 2) two_adjacent_[i] |= bit(j);
            }
        }
    }

    SCertificatePtr solve(VertexMask mask) {
        if (strategy_ == ApexStrategy::ExhaustiveMemoized) {
            if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
            auto result = compute(mask);
            memo_.emplace(mask, result);
            return result;
        }
        return compute(mask);
    }

private:
    static VertexMask bit(std::size_t i) { return VertexMask{1} << i; }

    static std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

    VertexMask component_of(std::size_t seed, VertexMask within) const {
        VertexMask comp = bit(seed);
        VertexMask frontier = comp;
        while (frontier) {
            std::size_t v = lowest(frontier);
            frontier &= frontier - 1;
            VertexMask fresh = adjacent_[v] & within & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        return comp;
    }

    SCertificatePtr leaf(VertexMask mask) const {
        SCertificate::Leaf node;
        std::vector<std::size_t> idx;
        for (VertexMask m = mask; m; m &= m - 1) idx.push_back(lowest(m));
        for (auto i : idx) node.vertices.push_back(g_.name(i));
        if (idx.size() == 2 && g_.adjacent(idx[0], idx[1])) node.label = g_.label_at(idx[0], idx[1]);
        return std::make_shared<const SCertificate>(SCertificate{std::move(node)});
    }

    SCertificatePtr compute(VertexMask mask) {
        const int size = std::popcount(mask);
        if (size <= 1) return leaf(mask);

        std::vector<VertexMask> parts;
        for (VertexMask rest = mask; rest;) {
            VertexMask comp = component_of(lowest(rest), mask);
            parts.push_back(comp);
            rest &= ~comp;
        }
        if (parts.size() > 1) {
            SCertificate::Union node;
            for (auto part : parts) {
                auto child = solve(part);
                if (!child) return nullptr;
                node.children.push_back(std::move(child));
            }
            return std::make_shared<const SCertificate>(SCertificate{std::move(node)});
        }

        if (size == 2) return leaf(mask);

        for (VertexMask m = mask; m; m &= m - 1) {
            std::size_t u = lowest(m);
            VertexMask others = mask & ~bit(u);
            if ((two_adjacent_[u] & others) != others) continue;
            if (auto child = solve(others)) {
                return std::make_shared<const SCertificate>(SCertificate{SCertificate::Cone{g_.name(u), std::move(child)}});
            }
            if (strategy_ == ApexStrategy::GreedyFirst) break;
        }
        return nullptr;
    }

    const LabeledGraph& g_;
    ApexStrategy strategy_;
    std::vector<VertexMask> adjacent_;
    std::vector<VertexMask> two_adjacent_;
    std::unordered_map<VertexMask, SCertificatePtr> memo_;
};

}  // namespace

bool operator==(const SCertificate& a, const SCertificate& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* la = std::get_if<SCertificate::Leaf>(&a.node)) {
        const auto& lb = std::get<SCertificate::Leaf>(b.node);
        return la->vertices == lb.vertices && la->label == lb.label;
    }
    if (const auto* ua = std::get_if<SCertificate::Union>(&a.node)) {
        const auto& ub = std::get<SCertificate::Union>(b.node);
        if (ua->children.size() != ub.children.size()) return false;
        for (std::size_t i = 0; i < ua->children.size(); ++i) {
            if (!same_ptr_target(ua->children[i], ub.children[i])) return false;
        }
        return true;
    }
    const auto& ca = std::get<SCertificate::Cone>(a.node);
    const auto& cb = std::get<SCertificate::Cone>(b.node);
    return ca.apex == cb.apex && same_ptr_target(ca.child, cb.child);
}

std::optional<SCertificate> in_class_s(const LabeledGraph& g, ApexStrategy strategy) {
    require_mask_capacity(g);
    SubsetSolver solver(g, strategy);
    auto root = solver.solve(full_mask(g.size()));
    if (!root) return std::nullopt;
    return *root;
}

LabeledGraph replay_certificate(const SCertificate& cert) {
    if (const auto* leaf = std::get_if<SCertificate::Leaf>(&cert.node)) {
        if (leaf->vertices.size() > 2) throw GraphError(GraphErrc::MalformedCertificate, "leaf holds more than two vertices");
        if (leaf->label && leaf->vertices.size() != 2) {
            throw GraphError(GraphErrc::MalformedCertificate, "labeled leaf must hold two vertices");
        }
        if (leaf->label) return LabeledGraph(leaf->vertices, {Edge{leaf->vertices[0], leaf->vertices[1], *leaf->label}});
        return LabeledGraph(leaf->vertices, {});
    }
    if (const auto* un = std::get_if<SCertificate::Union>(&cert.node)) {
        if (un->children.size() < 2) throw GraphError(GraphErrc::MalformedCertificate, "union needs at least two children");
        LabeledGraph acc;
        for (const auto& child : un->children) {
            if (!child) throw GraphError(GraphErrc::MalformedCertificate, "missing union child");
            acc = disjoint_union(acc, replay_certificate(*child));
        }
        return acc;
    }
    const auto& cone = std::get<SCertificate::Cone>(cert.node);
    if (!cone.child) throw GraphError(GraphErrc::MalformedCertificate, "missing cone child");
    return cone2(replay_certificate(*cone.child), cone.apex);
}

bool verify_certificate(const LabeledGraph& g, const SCertificate& cert) {
    try {
        return replay_certificate(cert) == g;
    } catch (const GraphError&) {
        return false;
    }
}

StrategyComparison compare_strategies(const LabeledGraph& g) {
    return {in_class_s(g, ApexStrategy::GreedyFirst).has_value(),
            in_class_s(g, ApexStrategy::ExhaustiveMemoized).has_value()};
}

}  // namespace artin
