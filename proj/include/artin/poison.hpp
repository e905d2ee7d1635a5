#pragma once

// Detection of the five poisonous full subgraphs. A graph containing any of
// them defines an Artin group that is not subgroup separable; a graph
// containing none of them defines one that is.
//
//   1  square, all four edges labeled 2, no chords
//   2  open path on four vertices, all three edges labeled 2
//   3  connected triple with at most one edge labeled 2
//   4  square labeled 2 with exactly one chord, labeled m > 2
//   5  square labeled 2 with both chords, labeled m > 2 and n > 2
//
// Witness tuples: kind 3 is the sorted triple; kind 2 lists the path starting
// at its lesser endpoint; kinds 1, 4, 5 list the square in cyclic order from
// its least vertex, second element the lesser neighbor, so any chords join
// positions 0-2 and 1-3.

#include <optional>
#include <string_view>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

enum class PoisonKind : int {
    Square = 1,
    OpenPath = 2,
    BadTriple = 3,
    SquareOneChord = 4,
    SquareTwoChords = 5,
};

inline constexpr int kPoisonKindCount = 5;

struct PoisonWitness {
    PoisonKind kind;
    std::vector<VertexName> vertices;

    bool operator==(const PoisonWitness&) const = default;
};

std::optional<PoisonWitness> find_square_all_two(const LabeledGraph& g);
std::optional<PoisonWitness> find_open_path3_all_two(const LabeledGraph& g);
std::optional<PoisonWitness> find_bad_triple(const LabeledGraph& g);
std::optional<PoisonWitness> find_square_one_chord(const LabeledGraph& g);
std::optional<PoisonWitness> find_square_two_chords(const LabeledGraph& g);

/// First witness over kinds 1..5 in order; nullopt iff g is not poisonous.
std::optional<PoisonWitness> find_poison(const LabeledGraph& g);

/// Re-checks a witness against g directly from the pattern definitions.
bool verify_witness(const LabeledGraph& g, const PoisonWitness& w);

}  // namespace artin
