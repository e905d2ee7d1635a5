#pragma once

// Membership in the class S: graphs built from one- and two-vertex graphs by
// disjoint unions and 2-cones. A graph lies in S exactly when its Artin group
// is subgroup separable. A successful decision yields a construction tree
// that verify_certificate can replay independently.

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

struct SCertificate;
using SCertificatePtr = std::shared_ptr<const SCertificate>;

struct SCertificate {
    /// One or two vertices, with the edge label when two are adjacent. Zero
    /// vertices is the empty graph.
    struct Leaf {
        std::vector<VertexName> vertices;
        std::optional<Label> label;
    };
    struct Union {
        std::vector<SCertificatePtr> children;
    };
    struct Cone {
        VertexName apex;
        SCertificatePtr child;
    };

    std::variant<Leaf, Union, Cone> node;

    bool is_empty_leaf() const noexcept;

    friend bool operator==(const SCertificate& a, const SCertificate& b);
};

enum class ApexStrategy {
    /// Tries only the lexicographically least apex.
    GreedyFirst,
    /// Tries every apex, memoizing results per vertex subset.
    ExhaustiveMemoized,
};

/// A certificate iff g is in S. Throws GraphError(GraphTooLarge) past 64 vertices.
std::optional<SCertificate> in_class_s(const LabeledGraph& g,
                                       ApexStrategy strategy = ApexStrategy::ExhaustiveMemoized);

/// Replays the tree with disjoint_union / cone2 and compares against g.
bool verify_certificate(const LabeledGraph& g, const SCertificate& cert);

/// Replays the tree; throws GraphError on malformed trees.
LabeledGraph replay_certificate(const SCertificate& cert);

struct StrategyComparison {
    bool greedy_in_s = false;
    bool exhaustive_in_s = false;

    bool agree() const noexcept { return greedy_in_s == exhaustive_in_s; }
};

StrategyComparison compare_strategies(const LabeledGraph& g);

}  // namespace artin
