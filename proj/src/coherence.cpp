#include "artin/coherence.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace artin {

std::string_view to_string(PathViolationReason reason) {
    switch (reason) {
    case PathViolationReason::LengthExceedsTwo: return "LengthExceedsTwo";
    case PathViolationReason::LabelNotTwo: return "LabelNotTwo";
    }
    return "Unknown";
}

namespace {

// Lexicographic BFS. Ties go to the smallest vertex index.
std::vector<std::size_t> lex_bfs_order(const LabeledGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> stamp(n);
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (best == n || stamp[v] > stamp[best]) best = v;
        }
        visited[best] = true;
        order.push_back(best);
        for (std::size_t w = 0; w < n; ++w) {
            if (!visited[w] && g.adjacent(best, w)) stamp[w].push_back(n - step);
        }
    }
    return order;
}

// Reverse LexBFS order is a perfect elimination ordering iff g is chordal.
bool has_perfect_elimination(const LabeledGraph& g) {
    const std::size_t n = g.size();
    auto order = lex_bfs_order(g);
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = order[i];
        std::vector<std::size_t> earlier;
        for (std::size_t w = 0; w < n; ++w) {
            if (g.adjacent(v, w) && position[w] < i) earlier.push_back(w);
        }
        if (earlier.size() < 2) continue;
        std::size_t parent = *std::max_element(earlier.begin(), earlier.end(),
                                               [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
        for (auto w : earlier) {
            if (w != parent && !g.adjacent(parent, w)) return false;
        }
    }
    return true;
}

std::vector<VertexName> canonical_cycle(const LabeledGraph& g, std::vector<std::size_t> cycle) {
    auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    std::vector<VertexName> out;
    for (auto v : cycle) out.push_back(g.name(v));
    return out;
}

// Any induced cycle of length >= 4 passes through some v with non-adjacent
// neighbours a, b, and the rest of it is an a-b path avoiding N[v]. A shortest
// such path is chordless, so v plus that path is an induced cycle.
std::optional<std::vector<VertexName>> find_induced_long_cycle(const LabeledGraph& g) {
    const std::size_t n = g.size();
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t a = 0; a < n; ++a) {
            if (a == v || !g.adjacent(v, a)) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (b == v || !g.adjacent(v, b) || g.adjacent(a, b)) continue;

                auto allowed = [&](std::size_t w) { return w == b || (w != v && !g.adjacent(v, w)); };
                std::vector<std::size_t> parent(n, n);
                std::deque<std::size_t> queue{a};
                parent[a] = a;
                while (!queue.empty() && parent[b] == n) {
                    std::size_t x = queue.front();
                    queue.pop_front();
                    for (std::size_t y = 0; y < n; ++y) {
                        if (parent[y] == n && allowed(y) && g.adjacent(x, y)) {
                            parent[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if (parent[b] == n) continue;

                std::vector<std::size_t> path;
                for (std::size_t x = b; x != a; x = parent[x]) path.push_back(x);
                path.push_back(a);
                std::reverse(path.begin(), path.end());
                std::vector<std::size_t> cycle{v};
                cycle.insert(cycle.end(), path.begin(), path.end());
                return canonical_cycle(g, std::move(cycle));
            }
        }
    }
    return std::nullopt;
}

// Endpoints-first path order for an induced path on `vs` (sorted indices);
// nullopt when the induced subgraph is not a path through all of them.
std::optional<std::vector<std::size_t>> as_induced_path(const LabeledGraph& g, const std::vector<std::size_t>& vs) {
    const std::size_t k = vs.size();
    std::vector<int> degree(k, 0);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (g.adjacent(vs[i], vs[j])) {
                ++edges;
                ++degree[i];
                ++degree[j];
            }
        }
    }
    if (edges != k - 1) return std::nullopt;
    if (std::count(degree.begin(), degree.end(), 1) != 2) return std::nullopt;
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d == 0 || d > 2; })) return std::nullopt;

    std::size_t cur = static_cast<std::size_t>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    std::vector<bool> used(k, false);
    std::vector<std::size_t> path;
    while (path.size() < k) {
        path.push_back(vs[cur]);
        used[cur] = true;
        for (std::size_t nxt = 0; nxt < k; ++nxt) {
            if (!used[nxt] && g.adjacent(vs[cur], vs[nxt])) {
                cur = nxt;
                break;
            }
        }
    }
    return path;
}

std::vector<VertexName> names_of(const LabeledGraph& g, const std::vector<std::size_t>& vs) {
    std::vector<VertexName> out;
    for (auto v : vs) out.push_back(g.name(v));
    return out;
}

}  // namespace

ChordalityResult is_chordal(const LabeledGraph& g) {
    if (has_perfect_elimination(g)) return {true, std::nullopt};
    return {false, find_induced_long_cycle(g)};
}

std::optional<std::vector<VertexName>> find_bad_clique(const LabeledGraph& g) {
    const std::size_t n = g.size();
    auto check = [&](const std::vector<std::size_t>& vs) {
        int big = 0;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                Label m = g.label_at(vs[i], vs[j]);
                if (m == 0) return false;
                if (m > 2) ++big;
            }
        }
        return big >= 2;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                if (check({a, b, c})) return names_of(g, {a, b, c});
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (check({a, b, c, d})) return names_of(g, {a, b, c, d});
                }
    return std::nullopt;
}

CoherenceReport is_coherent(const LabeledGraph& g) {
    CoherenceReport r;
    auto chordal = is_chordal(g);
    r.chordal = chordal.chordal;
    r.cycle_witness = std::move(chordal.cycle_witness);
    r.clique_witness = find_bad_clique(g);
    r.k4_poison_witness = find_square_one_chord(g);
    r.coherent = r.chordal && !r.clique_witness && !r.k4_poison_witness;
    return r;
}

std::optional<PathViolation> check_path_condition(const LabeledGraph& g) {
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                auto path = as_induced_path(g, {a, b, c});
                if (!path) continue;
                const auto& p = *path;
                if (g.label_at(p[0], p[1]) != 2 || g.label_at(p[1], p[2]) != 2) {
                    return PathViolation{names_of(g, p), PathViolationReason::LabelNotTwo};
                }
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (auto path = as_induced_path(g, {a, b, c, d})) {
                        return PathViolation{names_of(g, *path), PathViolationReason::LengthExceedsTwo};
                    }
                }
    return std::nullopt;
}

bool is_erf(const LabeledGraph& g) noexcept { return is_complete_all_two(g); }

}  // namespace artin
