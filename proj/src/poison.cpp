#include "artin/poison.hpp"

#include <algorithm>
#include <array>

namespace artin {

namespace {

using Quad = std::array<std::size_t, 4>;

// The three ways to split a 4-set into two disjoint pairs, as positions.
constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kMatchings{{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

enum class PairState { Absent, Two, Big };

PairState state(const LabeledGraph& g, std::size_t a, std::size_t b) {
    Label m = g.label_at(a, b);
    if (m == 0) return PairState::Absent;
    return m == 2 ? PairState::Two : PairState::Big;
}

// Square patterns (kinds 1, 4, 5): for some split of the 4-set into two
// "diagonal" pairs, the other four pairs are all 2-edges and the diagonals
// take the states required by the kind. Returns the cyclic tuple.
std::optional<Quad> match_square(const LabeledGraph& g, const Quad& q, PoisonKind kind) {
    for (const auto& matching : kMatchings) {
        bool rim_ok = true;
        for (int a = 0; a < 4 && rim_ok; ++a) {
            for (int b = a + 1; b < 4 && rim_ok; ++b) {
                bool diagonal = (matching[0][0] == a && matching[0][1] == b) || (matching[1][0] == a && matching[1][1] == b);
                if (!diagonal && state(g, q[a], q[b]) != PairState::Two) rim_ok = false;
            }
        }
        if (!rim_ok) continue;

        PairState d0 = state(g, q[matching[0][0]], q[matching[0][1]]);
        PairState d1 = state(g, q[matching[1][0]], q[matching[1][1]]);
        bool match = false;
        switch (kind) {
        case PoisonKind::Square:
            match = d0 == PairState::Absent && d1 == PairState::Absent;
            break;
        case PoisonKind::SquareOneChord:
            match = (d0 == PairState::Absent && d1 == PairState::Big) || (d0 == PairState::Big && d1 == PairState::Absent);
            break;
        case PoisonKind::SquareTwoChords:
            match = d0 == PairState::Big && d1 == PairState::Big;
            break;
        default:
            break;
        }
        if (!match) continue;

        // q[0] is the least vertex; its diagonal partner sits opposite it.
        std::size_t opposite = q[matching[0][1]];
        std::size_t n1 = q[matching[1][0]];
        std::size_t n2 = q[matching[1][1]];
        return Quad{q[0], std::min(n1, n2), opposite, std::max(n1, n2)};
    }
    return std::nullopt;
}

std::optional<Quad> match_open_path(const LabeledGraph& g, const Quad& q) {
    std::array<int, 4> degree{};
    int edges = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            Label m = g.label_at(q[a], q[b]);
            if (m == 0) continue;
            if (m != 2) return std::nullopt;
            ++edges;
            ++degree[a];
            ++degree[b];
        }
    }
    if (edges != 3) return std::nullopt;
    auto sorted = degree;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{1, 1, 2, 2}) return std::nullopt;

    int start = 0;
    while (degree[start] != 1) ++start;  // first endpoint in sorted order is the lesser one
    Quad path{};
    std::array<bool, 4> used{};
    int cur = start;
    for (int k = 0; k < 4; ++k) {
        path[k] = q[cur];
        used[cur] = true;
        for (int nxt = 0; nxt < 4; ++nxt) {
            if (!used[nxt] && g.adjacent(q[cur], q[nxt])) {
                cur = nxt;
                break;
            }
        }
    }
    return path;
}

template <typename Match>
std::optional<PoisonWitness> scan_quads(const LabeledGraph& g, PoisonKind kind, Match match) {
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (auto hit = match(Quad{a, b, c, d})) {
                        PoisonWitness w{kind, {}};
                        for (auto v : *hit) w.vertices.push_back(g.name(v));
                        return w;
                    }
                }
    return std::nullopt;
}

}  // namespace

std::optional<PoisonWitness> find_square_all_two(const LabeledGraph& g) {
    return scan_quads(g, PoisonKind::Square, [&](const Quad& q) { return match_square(g, q, PoisonKind::Square); });
}

std::optional<PoisonWitness> find_open_path3_all_two(const LabeledGraph& g) {
    return scan_quads(g, PoisonKind::OpenPath, [&](const Quad& q) { return match_open_path(g, q); });
}

std::optional<PoisonWitness> find_bad_triple(const LabeledGraph& g) {
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                std::array<Label, 3> m{g.label_at(a, b), g.label_at(b, c), g.label_at(a, c)};
                int edges = static_cast<int>(std::count_if(m.begin(), m.end(), [](Label x) { return x != 0; }));
                int twos = static_cast<int>(std::count(m.begin(), m.end(), 2));
                // On three vertices, two or more edges means connected.
                if (edges >= 2 && twos <= 1) {
                    return PoisonWitness{PoisonKind::BadTriple, {g.name(a), g.name(b), g.name(c)}};
                }
            }
    return std::nullopt;
}

std::optional<PoisonWitness> find_square_one_chord(const LabeledGraph& g) {
    return scan_quads(g, PoisonKind::SquareOneChord,
                      [&](const Quad& q) { return match_square(g, q, PoisonKind::SquareOneChord); });
}

std::optional<PoisonWitness> find_square_two_chords(const LabeledGraph& g) {
    return scan_quads(g, PoisonKind::SquareTwoChords,
                      [&](const Quad& q) { return match_square(g, q, PoisonKind::SquareTwoChords); });
}

std::optional<PoisonWitness> find_poison(const LabeledGraph& g) {
    if (auto w = find_square_all_two(g)) return w;
    if (auto w = find_open_path3_all_two(g)) return w;
    if (auto w = find_bad_triple(g)) return w;
    if (auto w = find_square_one_chord(g)) return w;
    return find_square_two_chords(g);
}

// Written against names and the pattern tables below, sharing nothing with
// the index-based detectors above.
bool verify_witness(const LabeledGraph& g, const PoisonWitness& w) {
    const auto& vs = w.vertices;
    for (const auto& v : vs) {
        if (!g.contains(v)) return false;
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) return false;
        }
    }
    auto lab = [&](int i, int j) -> Label { return g.label(vs[i], vs[j]).value_or(0); };
    auto is_two = [&](int i, int j) { return lab(i, j) == 2; };
    auto absent = [&](int i, int j) { return lab(i, j) == 0; };
    auto big = [&](int i, int j) { return lab(i, j) > 2; };

    switch (w.kind) {
    case PoisonKind::BadTriple: {
        if (vs.size() != 3) return false;
        int edges = !absent(0, 1) + !absent(1, 2) + !absent(0, 2);
        int twos = is_two(0, 1) + is_two(1, 2) + is_two(0, 2);
        return edges >= 2 && twos <= 1;
    }
    case PoisonKind::OpenPath:
        return vs.size() == 4 && is_two(0, 1) && is_two(1, 2) && is_two(2, 3) && absent(0, 2) && absent(1, 3) &&
               absent(0, 3);
    case PoisonKind::Square:
    case PoisonKind::SquareOneChord:
    case PoisonKind::SquareTwoChords: {
        if (vs.size() != 4) return false;
        if (!(is_two(0, 1) && is_two(1, 2) && is_two(2, 3) && is_two(3, 0))) return false;
        if (w.kind == PoisonKind::Square) return absent(0, 2) && absent(1, 3);
        if (w.kind == PoisonKind::SquareTwoChords) return big(0, 2) && big(1, 3);
        return (big(0, 2) && absent(1, 3)) || (absent(0, 2) && big(1, 3));
    }
    }
    return false;
}

}  // namespace artin
