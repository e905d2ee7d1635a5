#include "artin/report.hpp"

#include <sstream>
#include <stdexcept>

#include "artin/parser.hpp"

namespace artin {

ClassificationReport analyze(const LabeledGraph& g) {
    ClassificationReport r;
    r.graph = serialize_artin(g);
    r.poison_witness = find_poison(g);
    r.s_certificate = in_class_s(g, ApexStrategy::ExhaustiveMemoized);
    r.coherence = is_coherent(g);
    r.path_violation = check_path_condition(g);
    r.lerf = !r.poison_witness.has_value();
    r.erf = is_erf(g);
    r.coherent = r.coherence.coherent;

    auto& c = r.consistency;
    c.deciders_agree = r.poison_witness.has_value() != r.s_certificate.has_value();
    if (r.poison_witness && !verify_witness(g, *r.poison_witness)) c.deciders_agree = false;
    if (r.s_certificate && !verify_certificate(g, *r.s_certificate)) c.deciders_agree = false;
    c.lerf_implies_coherent_ok = !r.lerf || r.coherent;
    c.coherent_path_iff_lerf_ok = !r.coherent || (r.lerf == !r.path_violation.has_value());
    c.erf_implies_lerf_ok = !r.erf || r.lerf;
    return r;
}

namespace {

ordered_json names_json(const std::vector<VertexName>& vs) {
    ordered_json a = ordered_json::array();
    for (const auto& v : vs) a.push_back(v);
    return a;
}

std::string join(const std::vector<VertexName>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += vs[i];
    }
    return out;
}

void render_certificate(std::ostream& os, const SCertificate& cert, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (const auto* leaf = std::get_if<SCertificate::Leaf>(&cert.node)) {
        if (leaf->vertices.empty()) {
            os << pad << "empty\n";
            return;
        }
        os << pad << "leaf " << join(leaf->vertices);
        if (leaf->label) os << " (m=" << *leaf->label << ")";
        os << '\n';
    } else if (const auto* un = std::get_if<SCertificate::Union>(&cert.node)) {
        os << pad << "union\n";
        for (const auto& child : un->children) render_certificate(os, *child, depth + 1);
    } else {
        const auto& cone = std::get<SCertificate::Cone>(cert.node);
        os << pad << "cone " << cone.apex << '\n';
        render_certificate(os, *cone.child, depth + 1);
    }
}

}  // namespace

ordered_json witness_to_json(const PoisonWitness& w) {
    return ordered_json{{"kind", static_cast<int>(w.kind)}, {"vertices", names_json(w.vertices)}};
}

ordered_json certificate_to_json(const SCertificate& cert) {
    if (const auto* leaf = std::get_if<SCertificate::Leaf>(&cert.node)) {
        ordered_json body{{"vertices", names_json(leaf->vertices)}};
        body["m"] = leaf->label ? ordered_json(*leaf->label) : ordered_json(nullptr);
        return ordered_json{{"leaf", body}};
    }
    if (const auto* un = std::get_if<SCertificate::Union>(&cert.node)) {
        ordered_json children = ordered_json::array();
        for (const auto& child : un->children) children.push_back(certificate_to_json(*child));
        return ordered_json{{"union", children}};
    }
    const auto& cone = std::get<SCertificate::Cone>(cert.node);
    return ordered_json{{"cone", ordered_json{{"apex", cone.apex}, {"child", certificate_to_json(*cone.child)}}}};
}

SCertificate certificate_from_json(const nlohmann::json& j) {
    auto fail = [](const char* what) { return std::invalid_argument(std::string("certificate: ") + what); };
    if (!j.is_object() || j.size() != 1) throw fail("node must be an object with one key");
    if (auto it = j.find("leaf"); it != j.end()) {
        SCertificate::Leaf leaf;
        if (!it->is_object() || !it->contains("vertices") || !(*it)["vertices"].is_array()) throw fail("bad leaf");
        for (const auto& v : (*it)["vertices"]) {
            if (!v.is_string()) throw fail("leaf vertices must be strings");
            leaf.vertices.push_back(v.get<std::string>());
        }
        if (auto m = it->find("m"); m != it->end() && !m->is_null()) {
            if (!m->is_number_integer()) throw fail("leaf label must be an integer");
            leaf.label = m->get<Label>();
        }
        return SCertificate{std::move(leaf)};
    }
    if (auto it = j.find("union"); it != j.end()) {
        if (!it->is_array()) throw fail("union must be an array");
        SCertificate::Union un;
        for (const auto& child : *it) un.children.push_back(std::make_shared<const SCertificate>(certificate_from_json(child)));
        return SCertificate{std::move(un)};
    }
    if (auto it = j.find("cone"); it != j.end()) {
        if (!it->is_object() || !it->contains("apex") || !(*it)["apex"].is_string() || !it->contains("child")) {
            throw fail("bad cone");
        }
        return SCertificate{SCertificate::Cone{(*it)["apex"].get<std::string>(),
                                               std::make_shared<const SCertificate>(certificate_from_json((*it)["child"]))}};
    }
    throw fail("unknown node type");
}

ordered_json coherence_to_json(const CoherenceReport& r) {
    ordered_json j;
    j["coherent"] = r.coherent;
    j["chordal"] = r.chordal;
    j["cycle_witness"] = r.cycle_witness ? names_json(*r.cycle_witness) : ordered_json(nullptr);
    j["clique_witness"] = r.clique_witness ? names_json(*r.clique_witness) : ordered_json(nullptr);
    j["k4_poison_witness"] = r.k4_poison_witness ? witness_to_json(*r.k4_poison_witness) : ordered_json(nullptr);
    return j;
}

ordered_json path_violation_to_json(const PathViolation& v) {
    return ordered_json{{"vertices", names_json(v.vertices)}, {"reason", std::string(to_string(v.reason))}};
}

ordered_json report_to_json(const ClassificationReport& r) {
    ordered_json j;
    j["graph"] = r.graph;
    j["lerf"] = r.lerf;
    j["erf"] = r.erf;
    j["coherent"] = r.coherent;
    j["poison_witness"] = r.poison_witness ? witness_to_json(*r.poison_witness) : ordered_json(nullptr);
    j["s_certificate"] = r.s_certificate ? certificate_to_json(*r.s_certificate) : ordered_json(nullptr);
    j["coherence"] = coherence_to_json(r.coherence);
    j["path_violation"] = r.path_violation ? path_violation_to_json(*r.path_violation) : ordered_json(nullptr);
    j["consistency"] = ordered_json{{"deciders_agree", r.consistency.deciders_agree},
                                    {"lerf_implies_coherent_ok", r.consistency.lerf_implies_coherent_ok},
                                    {"coherent_path_iff_lerf_ok", r.consistency.coherent_path_iff_lerf_ok}};
    return j;
}

std::string report_to_text(const ClassificationReport& r, TextOptions options) {
    std::ostringstream os;
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    os << "lerf: " << yes_no(r.lerf) << '\n';
    os << "erf: " << yes_no(r.erf) << '\n';
    os << "coherent: " << yes_no(r.coherent) << '\n';
    if (r.poison_witness) {
        os << "poison: kind " << static_cast<int>(r.poison_witness->kind) << " (" << join(r.poison_witness->vertices)
           << ")\n";
    }
    if (!r.coherence.chordal && r.coherence.cycle_witness) {
        os << "induced cycle: (" << join(*r.coherence.cycle_witness) << ")\n";
    }
    if (r.coherence.clique_witness) os << "bad clique: {" << join(*r.coherence.clique_witness) << "}\n";
    if (r.path_violation) {
        os << "path violation: " << to_string(r.path_violation->reason) << " (" << join(r.path_violation->vertices)
           << ")\n";
    }
    if (!r.consistency.all_ok()) os << "consistency: FAILED\n";
    if (options.witness && r.poison_witness) os << "witness: " << witness_to_json(*r.poison_witness).dump() << '\n';
    if (options.certificate && r.s_certificate) {
        os << "certificate:\n";
        render_certificate(os, *r.s_certificate, 1);
    }
    return os.str();
}

}  // namespace artin
