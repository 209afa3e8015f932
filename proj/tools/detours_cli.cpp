#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "detours/generators.hpp"
#include "detours/io.hpp"
#include "detours/report.hpp"
#include "detours/transversal.hpp"

using namespace detours;
using nlohmann::json;

namespace {

item_mode parse_mode(const std::string& s) { return s == "cycle" ? item_mode::cycle : item_mode::path; }

graph_format guess_format(const std::string& path) {
    for (const char* ext : {".dimacs", ".col", ".clq"})
        if (path.size() >= std::string(ext).size() && path.compare(path.size() - std::string(ext).size(), std::string::npos, ext) == 0)
            return graph_format::dimacs;
    return graph_format::edge_list;
}

// Writes to --out when given, standard output otherwise.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot write '" + out_path + "'");
    out << text;
}

struct analyze_args {
    std::string input;
    std::string format;
    std::string mode = "path";
    bool oracle = false;
    bool json = false;
    std::string out;
};

int run_analyze(const analyze_args& a) {
    const std::string source = a.input;
    try {
        analyze_options opt;
        opt.mode = parse_mode(a.mode);
        opt.oracle = a.oracle;
        opt.budget = budget_from_env();
        opt.source = source;
        const auto format = a.format.empty() ? guess_format(a.input) : parse_format(a.format);
        const auto parsed = a.input == "-" ? parse_graph(std::cin, format) : parse_graph_file(a.input, format);
        for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
        const auto r = analyze(parsed, opt);
        emit(a.out, a.json ? json(r).dump(2) + "\n" : render_text(r));
        return 0;
    } catch (const error& e) {
        const auto f = failure_from(e, source);
        std::cerr << "error: " << f.message << '\n';
        try {
            emit(a.out, a.json ? json(f).dump(2) + "\n" : render_text(f));
        } catch (const error&) {
        }
        return f.exit_code;
    }
}

struct generate_args {
    std::string kind = "ktree";
    int n = 8;
    int k = 2;
    double density = 0.5;
    std::uint64_t seed = 0;
    std::string name;
    std::string format = "edge-list";
    std::string out;
};

int run_generate(const generate_args& a) {
    gen_spec spec;
    spec.kind = parse_gen_kind(a.kind);
    spec.n = a.n;
    spec.k = a.k;
    spec.density = a.density;
    spec.seed = a.seed;
    spec.name = a.name;
    const auto g = generate(spec);
    std::ostringstream text;
    if (parse_format(a.format) == graph_format::dimacs)
        write_dimacs(text, g, metadata(spec));
    else
        write_edge_list(text, g, metadata(spec));
    emit(a.out, text.str());
    return 0;
}

struct batch_args {
    std::string kind = "ktree";
    int count = 100;
    int n_min = 6;
    int n_max = 12;
    int k_min = 1;
    int k_max = 4;
    double density = 0.5;
    std::uint64_t seed = 1;
    std::string mode = "path";
    bool oracle = false;
    std::string summary;
};

int run_batch(const batch_args& a) {
    corpus_spec spec;
    spec.kind = parse_gen_kind(a.kind);
    spec.count = a.count;
    spec.n_min = a.n_min;
    spec.n_max = a.n_max;
    spec.k_min = a.k_min;
    spec.k_max = a.k_max;
    spec.density = a.density;
    spec.seed = a.seed;
    spec.require_biconnected = parse_mode(a.mode) == item_mode::cycle;
    const auto corpus = generate_corpus(spec);

    analyze_options opt;
    opt.mode = parse_mode(a.mode);
    opt.oracle = a.oracle;
    opt.budget = budget_from_env();

    json rows = json::array();
    int failures = 0, resource = 0, verified = 0;
    std::cout << std::setw(5) << "#" << std::setw(5) << "n" << std::setw(5) << "m" << std::setw(7) << "omega"
              << std::setw(6) << "type" << std::setw(5) << "|F|" << std::setw(7) << "bound" << std::setw(5) << "opt"
              << "  status\n";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        parsed_graph pg{inst.g, {}, {}};
        for (vertex v = 0; v < inst.g.order(); ++v) pg.labels.push_back(std::to_string(v));
        std::ostringstream src;
        src << to_string(inst.spec.kind) << " n=" << inst.spec.n << " k=" << inst.spec.k << " seed=" << inst.spec.seed;
        opt.source = src.str();
        json row{{"index", i}, {"spec", metadata(inst.spec)}, {"n", inst.g.order()}, {"m", inst.g.size()}};
        std::cout << std::setw(5) << i << std::setw(5) << inst.g.order() << std::setw(5) << inst.g.size();
        try {
            const auto r = analyze(pg, opt);
            row["status"] = r.verified ? "ok" : "unverified";
            row["omega"] = r.input.omega;
            row["central_type"] = r.central_type;
            row["f_size"] = r.transversal.size();
            row["bound"] = r.bound;
            if (r.optimum) row["opt_size"] = r.optimum->size;
            r.verified ? ++verified : ++failures;
            std::cout << std::setw(7) << r.input.omega << std::setw(6) << r.central_type << std::setw(5)
                      << r.transversal.size() << std::setw(7) << r.bound << std::setw(5)
                      << (r.optimum ? std::to_string(r.optimum->size) : "-") << "  "
                      << (r.verified ? "ok" : "UNVERIFIED") << '\n';
        } catch (const error& e) {
            const auto f = failure_from(e, opt.source);
            row["status"] = f.reason;
            row["message"] = f.message;
            f.category == "resource" ? ++resource : ++failures;
            std::cout << "  " << f.reason << ": " << f.message << '\n';
        }
        rows.push_back(std::move(row));
    }
    std::cout << "instances=" << corpus.size() << " verified=" << verified << " failures=" << failures
              << " budget_exceeded=" << resource << '\n';
    if (!a.summary.empty()) {
        json s{{"schema_version", report_schema_version},
               {"mode", a.mode},
               {"instances", corpus.size()},
               {"verified", verified},
               {"failures", failures},
               {"budget_exceeded", resource},
               {"prng", prng_name},
               {"rows", rows}};
        emit(a.summary, s.dump(2) + "\n");
    }
    if (failures > 0) return 5;
    return resource > 0 ? 4 : 0;
}

int run_bounds(int omega_max, bool as_json) {
    const auto rows = bounds_table(omega_max);
    if (as_json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"omega", r.omega},
                           {"path_bound", r.path_bound},
                           {"path_prior", r.path_prior},
                           {"path_improved", r.path_improved},
                           {"cycle_bound", r.cycle_bound},
                           {"cycle_prior", r.cycle_prior},
                           {"cycle_improved", r.cycle_improved}});
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << std::setw(6) << "omega" << std::setw(10) << "4c(w/5)" << std::setw(10) << "max(1,w-2)" << std::setw(10)
              << "path_imp" << std::setw(10) << "2c(w/3)" << std::setw(11) << "max(1,w-3)" << std::setw(10)
              << "cycle_imp" << '\n';
    for (const auto& r : rows)
        std::cout << std::setw(6) << r.omega << std::setw(10) << r.path_bound << std::setw(10) << r.path_prior
                  << std::setw(10) << (r.path_improved ? "yes" : "no") << std::setw(10) << r.cycle_bound
                  << std::setw(11) << r.cycle_prior << std::setw(10) << (r.cycle_improved ? "yes" : "no") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest path and longest cycle transversals of chordal graphs"};
    app.require_subcommand(1);
    const std::vector<std::string> modes{"path", "cycle"};
    const std::vector<std::string> formats{"edge-list", "dimacs"};

    analyze_args aa;
    auto* analyze_cmd = app.add_subcommand("analyze", "Build and verify a transversal for one graph");
    analyze_cmd->add_option("input", aa.input, "Graph file, or - for standard input")->required();
    analyze_cmd->add_option("--format", aa.format, "Input format (default: by extension)")
        ->check(CLI::IsMember(formats));
    analyze_cmd->add_option("--mode", aa.mode, "Longest paths or longest cycles")->check(CLI::IsMember(modes));
    analyze_cmd->add_flag("--oracle", aa.oracle, "Also compute a minimum transversal exactly");
    analyze_cmd->add_flag("--json", aa.json, "Structured output");
    analyze_cmd->add_option("--out", aa.out, "Report file (default: standard output)");

    generate_args ga;
    auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph");
    generate_cmd->add_option("--kind", ga.kind)->check(CLI::IsMember({"ktree", "subtree-chordal", "named"}));
    generate_cmd->add_option("--n", ga.n, "Vertex count");
    generate_cmd->add_option("--k", ga.k, "Clique parameter of a k-tree");
    generate_cmd->add_option("--density", ga.density, "Subtree-size parameter in (0, 1]");
    generate_cmd->add_option("--seed", ga.seed);
    generate_cmd->add_option("--name", ga.name, "Named graph: k_<n>, path_<n>, cycle_<n>, star_<n>, bowtie, "
                                                "petersen, petersen_split12, walther25");
    generate_cmd->add_option("--format", ga.format)->check(CLI::IsMember(formats));
    generate_cmd->add_option("--out", ga.out);

    batch_args ba;
    auto* batch_cmd = app.add_subcommand("batch", "Analyze a seeded corpus and summarize");
    batch_cmd->add_option("--kind", ba.kind)->check(CLI::IsMember({"ktree", "subtree-chordal"}));
    batch_cmd->add_option("--count", ba.count);
    batch_cmd->add_option("--n-min", ba.n_min);
    batch_cmd->add_option("--n-max", ba.n_max);
    batch_cmd->add_option("--k-min", ba.k_min);
    batch_cmd->add_option("--k-max", ba.k_max);
    batch_cmd->add_option("--density", ba.density);
    batch_cmd->add_option("--seed", ba.seed);
    batch_cmd->add_option("--mode", ba.mode)->check(CLI::IsMember(modes));
    batch_cmd->add_flag("--oracle", ba.oracle);
    batch_cmd->add_option("--summary", ba.summary, "Write a JSON summary to this file");

    int omega_max = 30;
    bool bounds_json = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "Compare the transversal bounds with earlier ones");
    bounds_cmd->add_option("--omega-max", omega_max);
    bounds_cmd->add_flag("--json", bounds_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) return run_analyze(aa);
        if (*generate_cmd) return run_generate(ga);
        if (*batch_cmd) return run_batch(ba);
        return run_bounds(omega_max, bounds_json);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    }
}
