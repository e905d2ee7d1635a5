#pragma once

// Coherence, ERF, and the full-path condition that separates LERF from
// coherent Artin groups.

#include <optional>
#include <string_view>
#include <vector>

#include "artin/graph.hpp"
#include "artin/poison.hpp"

namespace artin {

struct ChordalityResult {
    bool chordal = true;
    /// Induced cycle of length >= 4, in cyclic order from its least vertex.
    std::optional<std::vector<VertexName>> cycle_witness;
};

struct CoherenceReport {
    bool coherent = true;
    bool chordal = true;
    std::optional<std::vector<VertexName>> cycle_witness;
    std::optional<std::vector<VertexName>> clique_witness;
    std::optional<PoisonWitness> k4_poison_witness;
};

enum class PathViolationReason { LengthExceedsTwo, LabelNotTwo };

std::string_view to_string(PathViolationReason reason);

struct PathViolation {
    std::vector<VertexName> vertices;
    PathViolationReason reason;

    bool operator==(const PathViolation&) const = default;
};

/// Chordality of the unlabeled skeleton.
ChordalityResult is_chordal(const LabeledGraph& g);

/// A complete 3- or 4-vertex subgraph with at least two labels > 2.
std::optional<std::vector<VertexName>> find_bad_clique(const LabeledGraph& g);

CoherenceReport is_coherent(const LabeledGraph& g);

/// nullopt iff every induced open path with two or more edges has exactly two
/// edges, both labeled 2. Checking paths on three and four vertices suffices
/// since every subpath of an induced path is induced.
std::optional<PathViolation> check_path_condition(const LabeledGraph& g);

bool is_erf(const LabeledGraph& g) noexcept;

}  // namespace artin
