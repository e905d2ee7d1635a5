#include "artin/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "artin/census.hpp"
#include "artin/parser.hpp"
#include "artin/report.hpp"

namespace artin {

namespace {

struct CheckOptions {
    std::string path;
    bool json = false;
    bool certificate = false;
    bool witness = false;
    bool assert_lerf = false;
};

struct CensusOptions {
    std::size_t n = 0;
    std::string labels = "2,3";
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double edge_prob = 0.5;
    bool json = false;
    int threads = 0;
};

struct GenOptions {
    std::size_t n = 0;
    std::string labels = "2";
    double edge_prob = 0.5;
    std::uint64_t seed = 0;
};

struct SelfcheckOptions {
    std::size_t max_n = 4;
    std::string labels = "2,3";
    int threads = 0;
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Label> parse_label_list(const std::string& text) {
    std::vector<Label> labels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
            throw InputError("invalid label '" + item + "'");
        }
        if (value < kMinLabel || value > kMaxLabel) throw InputError("label " + item + " out of range [2, 2147483647]");
        labels.push_back(static_cast<Label>(value));
    }
    if (labels.empty()) throw InputError("label list is empty");
    return labels;
}

std::string census_line(const CensusResult& r) {
    std::ostringstream os;
    os << "total=" << r.total << " lerf=" << r.lerf << " erf=" << r.erf << " coherent=" << r.coherent
       << " poison_by_kind=[";
    for (std::size_t k = 0; k < r.poison_by_kind.size(); ++k) {
        if (k) os << ' ';
        os << (k + 1) << ':' << r.poison_by_kind[k];
    }
    os << "] disagreements=" << r.disagreements << " elapsed_ms=" << r.elapsed.count();
    return os.str();
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    std::ifstream in(opt.path, std::ios::binary);
    if (!in) {
        err << opt.path << ": cannot read file\n";
        return kExitInputError;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    ClassificationReport report;
    try {
        report = analyze(parse_artin(buffer.str()));
    } catch (const SourceError& e) {
        err << opt.path << ":" << e.what() << '\n';
        return kExitInputError;
    } catch (const GraphError& e) {
        err << opt.path << ": " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitInputError;
    }

    if (opt.json) {
        out << report_to_json(report).dump(2) << '\n';
    } else {
        out << report_to_text(report, {opt.witness, opt.certificate});
    }
    if (!report.consistency.all_ok()) {
        err << "internal invariant breach: deciders or cross-checks disagree\n";
        return kExitInvariantBreach;
    }
    if (opt.assert_lerf && !report.lerf) return kExitAssertionFailed;
    return kExitOk;
}

int cmd_census(const CensusOptions& opt, std::ostream& out, std::ostream& err) {
    CensusSpec spec;
    spec.n = opt.n;
    spec.labels = parse_label_list(opt.labels);
    if (opt.exhaustive) {
        spec.mode = Exhaustive{};
    } else {
        spec.mode = Sampled{opt.samples, opt.seed, opt.edge_prob};
    }
    CensusResult result;
    try {
        result = run_census(spec, opt.threads);
    } catch (const CensusError& e) {
        err << "invalid census: " << e.what() << '\n';
        return kExitInputError;
    }
    out << (opt.json ? census_to_json(result) : census_line(result)) << '\n';
    return result.disagreements == 0 ? kExitOk : kExitInvariantBreach;
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        out << serialize_artin(random_graph(opt.n, parse_label_list(opt.labels), opt.edge_prob, opt.seed));
    } catch (const CensusError& e) {
        err << "invalid generator flags: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

int cmd_selfcheck(const SelfcheckOptions& opt, std::ostream& out, std::ostream& err) {
    auto labels = parse_label_list(opt.labels);
    if (opt.max_n == 0) throw InputError("--max-n must be at least 1");
    std::vector<CensusSpec> specs;
    for (std::size_t n = 1; n <= opt.max_n; ++n) {
        CensusSpec spec{n, labels, Exhaustive{}};
        try {
            validate(spec);
        } catch (const CensusError& e) {
            err << "invalid selfcheck bound at n=" << n << ": " << e.what() << '\n';
            return kExitInputError;
        }
        specs.push_back(std::move(spec));
    }

    bool ok = true;
    for (const auto& spec : specs) {
        auto r = run_census(spec, opt.threads);
        bool pass = r.disagreements == 0 && r.counts_consistent();
        ok = ok && pass;
        out << "n=" << spec.n << ' ' << census_line(r) << ' ' << (pass ? "ok" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitInvariantBreach;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide subgroup separability, ERF and coherence of Artin groups from their defining graphs",
                 "artinsep"};
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Classify the graph in an .artin file");
    check_cmd->add_option("file", check.path, "Input .artin file")->required();
    check_cmd->add_flag("--json", check.json, "Emit the JSON report");
    check_cmd->add_flag("--certificate", check.certificate, "Show the S-class construction certificate");
    check_cmd->add_flag("--witness", check.witness, "Show the poison witness");
    check_cmd->add_flag("--assert-lerf", check.assert_lerf, "Exit 3 when the group is not LERF");

    CensusOptions census;
    auto* census_cmd = app.add_subcommand("census", "Classify every graph (or a sample) on n vertices");
    census_cmd->add_option("--n", census.n, "Vertex count")->required();
    census_cmd->add_option("--labels", census.labels, "Comma-separated edge labels")->capture_default_str();
    auto* exhaustive_flag = census_cmd->add_flag("--exhaustive", census.exhaustive, "Enumerate every graph");
    auto* samples_opt = census_cmd->add_option("--samples", census.samples, "Number of random graphs");
    census_cmd->add_option("--seed", census.seed, "Sampling seed")->capture_default_str();
    census_cmd->add_option("--edge-prob", census.edge_prob, "Edge probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    census_cmd->add_flag("--json", census.json, "Emit JSON");
    census_cmd->add_option("--threads", census.threads, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
    exhaustive_flag->excludes(samples_opt);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit a seeded random graph in .artin format");
    gen_cmd->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::Range(std::size_t{0}, kMaxMaskVertices));
    gen_cmd->add_option("--labels", gen.labels, "Comma-separated edge labels")->capture_default_str();
    gen_cmd->add_option("--edge-prob", gen.edge_prob, "Edge probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();

    SelfcheckOptions selfcheck;
    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Exhaustively cross-check the deciders for n <= max-n");
    selfcheck_cmd->add_option("--max-n", selfcheck.max_n, "Largest vertex count")->capture_default_str();
    selfcheck_cmd->add_option("--labels", selfcheck.labels, "Comma-separated edge labels")->capture_default_str();
    selfcheck_cmd->add_option("--threads", selfcheck.threads, "Worker threads (0 = default)")
        ->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    if (census_cmd->parsed() && !census.exhaustive && samples_opt->count() == 0) {
        err << "census: one of --exhaustive or --samples is required\n";
        return kExitInputError;
    }

    try {
        if (check_cmd->parsed()) return cmd_check(check, out, err);
        if (census_cmd->parsed()) return cmd_census(census, out, err);
        if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
        return cmd_selfcheck(selfcheck, out, err);
    } catch (const InputError& e) {
        err << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInvariantBreach;
    }
}

}  // namespace artin
