#pragma once

// One record per analyzed graph, with JSON and human-readable renderings.

#include <optional>
#include <string>

#include "artin/coherence.hpp"
#include "artin/graph.hpp"
#include "artin/poison.hpp"
#include "artin/sclass.hpp"
#include "json.hpp"

namespace artin {

struct ConsistencyFlags {
    bool deciders_agree = true;
    bool lerf_implies_coherent_ok = true;
    bool coherent_path_iff_lerf_ok = true;
    // Not part of the JSON record.
    bool erf_implies_lerf_ok = true;

    bool all_ok() const noexcept {
        return deciders_agree && lerf_implies_coherent_ok && coherent_path_iff_lerf_ok && erf_implies_lerf_ok;
    }
};

struct ClassificationReport {
    std::string graph;  // canonical .artin text
    bool lerf = false;
    bool erf = false;
    bool coherent = false;
    std::optional<PoisonWitness> poison_witness;
    std::optional<SCertificate> s_certificate;
    CoherenceReport coherence;
    std::optional<PathViolation> path_violation;
    ConsistencyFlags consistency;
};

ClassificationReport analyze(const LabeledGraph& g);

using ordered_json = nlohmann::ordered_json;

ordered_json witness_to_json(const PoisonWitness& w);
ordered_json certificate_to_json(const SCertificate& cert);
/// Throws std::invalid_argument on schema violations.
SCertificate certificate_from_json(const nlohmann::json& j);
ordered_json coherence_to_json(const CoherenceReport& r);
ordered_json path_violation_to_json(const PathViolation& v);
ordered_json report_to_json(const ClassificationReport& r);

struct TextOptions {
    bool witness = false;
    bool certificate = false;
};

std::string report_to_text(const ClassificationReport& r, TextOptions options = {});

}  // namespace artin
