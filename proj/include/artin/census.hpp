#pragma once

// Enumeration and sampling of labeled graphs, and the census that classifies
// each one with every decider and counts disagreements between them.
//
// run_census_serial is the reference; run_census splits the index range
// across OpenMP threads and merges per-thread partial results.

#include <array>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "artin/graph.hpp"
#include "artin/poison.hpp"

namespace artin {

inline constexpr std::uint64_t kMaxExhaustiveGraphs = 100'000'000;
inline constexpr std::size_t kMaxExhaustiveVertices = 9;

enum class CensusErrc { InvalidSpec, TooManyGraphs };

class CensusError : public std::invalid_argument {
public:
    CensusError(CensusErrc code, const std::string& what) : std::invalid_argument(what), code_(code) {}
    CensusErrc code() const noexcept { return code_; }

private:
    CensusErrc code_;
};

struct Exhaustive {};

struct Sampled {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double edge_prob = 0.5;
};

struct CensusSpec {
    std::size_t n = 1;
    std::vector<Label> labels{2};
    std::variant<Exhaustive, Sampled> mode = Exhaustive{};
};

/// Throws CensusError when the spec is out of range.
void validate(const CensusSpec& spec);

/// Sorted, deduplicated copy; throws CensusError(InvalidSpec) on an empty set
/// or a label below 2.
std::vector<Label> normalize_labels(std::vector<Label> labels);

/// (|labels| + 1)^(n(n-1)/2), saturating at UINT64_MAX.
std::uint64_t exhaustive_count(std::size_t n, std::size_t label_count) noexcept;

/// Vertex names v1..vn.
std::vector<VertexName> census_vertex_names(std::size_t n);

/// Every graph on v1..vn whose edges take labels from `labels`. The index is
/// a mixed-radix number: digit k (least significant first) is the state of
/// the k-th pair in lexicographic order, 0 = absent, d = labels[d-1].
class GraphEnumerator {
public:
    GraphEnumerator(std::size_t n, std::vector<Label> labels);

    std::uint64_t count() const noexcept { return count_; }
    LabeledGraph at(std::uint64_t index) const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = LabeledGraph;
        using difference_type = std::ptrdiff_t;

        iterator(const GraphEnumerator* owner, std::uint64_t index) : owner_(owner), index_(index) {}
        LabeledGraph operator*() const { return owner_->at(index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        bool operator==(const iterator& other) const { return index_ == other.index_; }

    private:
        const GraphEnumerator* owner_;
        std::uint64_t index_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count_}; }

private:
    std::vector<VertexName> names_;
    std::vector<Label> labels_;
    std::uint64_t count_;
};

/// Throws CensusError(TooManyGraphs) past the exhaustive bound.
GraphEnumerator enumerate_graphs(std::size_t n, std::vector<Label> labels);

/// splitmix64 step; identical on every platform.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for the i-th sample of a sampled census.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept;

LabeledGraph random_graph(std::size_t n, const std::vector<Label>& labels, double edge_prob, std::uint64_t seed);

struct GraphVerdict {
    bool lerf = false;
    bool erf = false;
    bool coherent = false;
    std::optional<PoisonKind> poison_kind;
    /// Deciders disagree, an implication fails, or an emitted artifact does not verify.
    bool disagreement = false;
};

/// Runs every decider on g and cross-checks their verdicts and artifacts.
GraphVerdict classify(const LabeledGraph& g);

struct CensusResult {
    std::uint64_t total = 0;
    std::uint64_t lerf = 0;
    std::uint64_t erf = 0;
    std::uint64_t coherent = 0;
    std::array<std::uint64_t, kPoisonKindCount> poison_by_kind{};
    std::uint64_t disagreements = 0;
    std::chrono::milliseconds elapsed{0};

    void add(const GraphVerdict& v);
    void merge(const CensusResult& other);

    /// erf <= lerf <= coherent <= total and lerf + poisoned = total.
    bool counts_consistent() const noexcept;

    bool same_counts(const CensusResult& other) const noexcept;
};

CensusResult run_census_serial(const CensusSpec& spec);

/// threads == 0 uses the OpenMP default.
CensusResult run_census(const CensusSpec& spec, int threads = 0);

std::string census_to_json(const CensusResult& r);

}  // namespace artin
