#include "artin/census.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "artin/coherence.hpp"
#include "artin/sclass.hpp"
#include "json.hpp"

namespace artin {

std::vector<Label> normalize_labels(std::vector<Label> labels) {
    if (labels.empty()) throw CensusError(CensusErrc::InvalidSpec, "label set is empty");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.front() < kMinLabel) {
        throw CensusError(CensusErrc::InvalidSpec, "label " + std::to_string(labels.front()) + " is below 2");
    }
    return labels;
}

std::uint64_t exhaustive_count(std::size_t n, std::size_t label_count) noexcept {
    const std::uint64_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
    const std::uint64_t radix = label_count + 1;
    std::uint64_t total = 1;
    for (std::uint64_t k = 0; k < pairs; ++k) {
        if (total > UINT64_MAX / radix) return UINT64_MAX;
        total *= radix;
    }
    return total;
}

void validate(const CensusSpec& spec) {
    auto labels = normalize_labels(spec.labels);
    if (spec.n == 0) throw CensusError(CensusErrc::InvalidSpec, "n must be at least 1");
    if (std::holds_alternative<Exhaustive>(spec.mode)) {
        if (spec.n > kMaxExhaustiveVertices) {
            throw CensusError(CensusErrc::TooManyGraphs,
                              "exhaustive census supports n <= " + std::to_string(kMaxExhaustiveVertices));
        }
        if (exhaustive_count(spec.n, labels.size()) > kMaxExhaustiveGraphs) {
            throw CensusError(CensusErrc::TooManyGraphs, "exhaustive census would exceed 10^8 graphs");
        }
        return;
    }
    const auto& sampled = std::get<Sampled>(spec.mode);
    if (spec.n > kMaxMaskVertices) throw CensusError(CensusErrc::InvalidSpec, "sampled census supports n <= 64");
    if (!(sampled.edge_prob >= 0.0 && sampled.edge_prob <= 1.0)) {
        throw CensusError(CensusErrc::InvalidSpec, "edge probability must lie in [0, 1]");
    }
}

std::vector<VertexName> census_vertex_names(std::size_t n) {
    std::vector<VertexName> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

GraphEnumerator::GraphEnumerator(std::size_t n, std::vector<Label> labels)
    : names_(census_vertex_names(n)), labels_(normalize_labels(std::move(labels))), count_(exhaustive_count(n, labels_.size())) {
    if (count_ > kMaxExhaustiveGraphs) throw CensusError(CensusErrc::TooManyGraphs, "enumeration would exceed 10^8 graphs");
}

LabeledGraph GraphEnumerator::at(std::uint64_t index) const {
    const std::uint64_t radix = labels_.size() + 1;
    std::vector<Edge> edges;
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto digit = index % radix;
            index /= radix;
            if (digit != 0) edges.push_back({names_[i], names_[j], labels_[digit - 1]});
        }
    }
    return LabeledGraph(names_, edges);
}

GraphEnumerator enumerate_graphs(std::size_t n, std::vector<Label> labels) {
    return GraphEnumerator(n, std::move(labels));
}

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t state = seed ^ (index * 0xD1B54A32D192ED03ULL);
    return splitmix64(state);
}

LabeledGraph random_graph(std::size_t n, const std::vector<Label>& labels, double edge_prob, std::uint64_t seed) {
    if (n > kMaxMaskVertices) throw CensusError(CensusErrc::InvalidSpec, "random graphs support n <= 64");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
        throw CensusError(CensusErrc::InvalidSpec, "edge probability must lie in [0, 1]");
    }
    auto sorted = normalize_labels(labels);
    auto names = census_vertex_names(n);
    std::uint64_t state = seed;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // 53-bit uniform in [0, 1); exact in double on every platform.
            double u = static_cast<double>(splitmix64(state) >> 11) * 0x1p-53;
            if (u < edge_prob) {
                auto pick = splitmix64(state) % sorted.size();
                edges.push_back({names[i], names[j], sorted[pick]});
            }
        }
    }
    return LabeledGraph(std::move(names), edges);
}

GraphVerdict classify(const LabeledGraph& g) {
    GraphVerdict v;
    auto witness = find_poison(g);
    auto cert = in_class_s(g, ApexStrategy::ExhaustiveMemoized);
    auto coherence = is_coherent(g);
    v.lerf = !witness.has_value();
    v.erf = is_erf(g);
    v.coherent = coherence.coherent;
    if (witness) v.poison_kind = witness->kind;

    bool bad = witness.has_value() == cert.has_value();
    if (witness && !verify_witness(g, *witness)) bad = true;
    if (cert && !verify_certificate(g, *cert)) bad = true;
    if (v.erf && !v.lerf) bad = true;
    if (v.lerf && !v.coherent) bad = true;
    if (v.coherent && v.lerf != !check_path_condition(g).has_value()) bad = true;
    v.disagreement = bad;
    return v;
}

void CensusResult::add(const GraphVerdict& v) {
    ++total;
    if (v.lerf) ++lerf;
    if (v.erf) ++erf;
    if (v.coherent) ++coherent;
    if (v.poison_kind) ++poison_by_kind[static_cast<std::size_t>(*v.poison_kind) - 1];
    if (v.disagreement) ++disagreements;
}

void CensusResult::merge(const CensusResult& other) {
    total += other.total;
    lerf += other.lerf;
    erf += other.erf;
    coherent += other.coherent;
    for (std::size_t k = 0; k < poison_by_kind.size(); ++k) poison_by_kind[k] += other.poison_by_kind[k];
    disagreements += other.disagreements;
}

bool CensusResult::counts_consistent() const noexcept {
    std::uint64_t poisoned = 0;
    for (auto c : poison_by_kind) poisoned += c;
    return erf <= lerf && lerf <= coherent && coherent <= total && lerf + poisoned == total;
}

bool CensusResult::same_counts(const CensusResult& o) const noexcept {
    return total == o.total && lerf == o.lerf && erf == o.erf && coherent == o.coherent &&
           poison_by_kind == o.poison_by_kind && disagreements == o.disagreements;
}

namespace {

class CensusSource {
public:
    explicit CensusSource(const CensusSpec& spec) : spec_(spec), labels_(normalize_labels(spec.labels)) {
        if (std::holds_alternative<Exhaustive>(spec.mode)) {
            enumerator_.emplace(spec.n, labels_);
            count_ = enumerator_->count();
        } else {
            count_ = std::get<Sampled>(spec.mode).samples;
        }
    }

    std::uint64_t count() const noexcept { return count_; }

    LabeledGraph at(std::uint64_t i) const {
        if (enumerator_) return enumerator_->at(i);
        const auto& s = std::get<Sampled>(spec_.mode);
        return random_graph(spec_.n, labels_, s.edge_prob, sample_seed(s.seed, i));
    }

private:
    const CensusSpec& spec_;
    std::vector<Label> labels_;
    std::optional<GraphEnumerator> enumerator_;
    std::uint64_t count_ = 0;
};

using Clock = std::chrono::steady_clock;

}  // namespace

CensusResult run_census_serial(const CensusSpec& spec) {
    validate(spec);
    auto start = Clock::now();
    CensusSource source(spec);
    CensusResult result;
    for (std::uint64_t i = 0; i < source.count(); ++i) result.add(classify(source.at(i)));
    if (!result.counts_consistent()) ++result.disagreements;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
}

CensusResult run_census(const CensusSpec& spec, int threads) {
    validate(spec);
    auto start = Clock::now();
    CensusSource source(spec);
    CensusResult result;
    const auto count = static_cast<std::int64_t>(source.count());

#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(workers)
    {
        CensusResult local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t i = 0; i < count; ++i) local.add(classify(source.at(static_cast<std::uint64_t>(i))));
#pragma omp critical(artin_census_merge)
        result.merge(local);
    }
#else
    (void)threads;
    for (std::int64_t i = 0; i < count; ++i) result.add(classify(source.at(static_cast<std::uint64_t>(i))));
#endif

    if (!result.counts_consistent()) ++result.disagreements;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
}

std::string census_to_json(const CensusResult& r) {
    nlohmann::ordered_json j;
    j["total"] = r.total;
    j["lerf"] = r.lerf;
    j["erf"] = r.erf;
    j["coherent"] = r.coherent;
    nlohmann::ordered_json kinds;
    for (std::size_t k = 0; k < r.poison_by_kind.size(); ++k) kinds[std::to_string(k + 1)] = r.poison_by_kind[k];
    j["poison_by_kind"] = kinds;
    j["disagreements"] = r.disagreements;
    j["elapsed_ms"] = r.elapsed.count();
    return j.dump();
}

}  // namespace artin
