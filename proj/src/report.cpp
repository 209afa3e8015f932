#include "detours/report.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "detours/chordal.hpp"
#include "detours/transversal.hpp"

namespace detours {

using nlohmann::json;

failure failure_from(const error& e, const std::string& source) {
    failure f;
    f.source = source;
    f.message = e.what();
    f.exit_code = e.exit_code();
    if (auto* p = dynamic_cast<const precondition_error*>(&e)) {
        f.category = "precondition";
        f.reason = p->reason();
    } else if (auto* r = dynamic_cast<const resource_error*>(&e)) {
        f.category = "resource";
        f.reason = "search budget exceeded";
        f.search = r->stats();
    } else if (dynamic_cast<const parse_error*>(&e)) {
        f.category = "input";
        f.reason = "parse error";
    } else if (dynamic_cast<const input_error*>(&e)) {
        f.category = "input";
        f.reason = "invalid input";
    } else {
        f.category = "invariant";
        f.reason = "invariant violated";
    }
    return f;
}

void to_json(json& j, const report& r) {
    j = json{{"schema_version", r.schema_version},
             {"status", "ok"},
             {"input",
              {{"source", r.input.source},
               {"n", r.input.n},
               {"m", r.input.m},
               {"omega", r.input.omega},
               {"chordal", r.input.chordal},
               {"connected", r.input.connected},
               {"biconnected", r.input.biconnected},
               {"warnings", r.input.warnings}}},
             {"mode", r.mode},
             {"items", {{"length", r.item_length}, {"count", r.item_count}}},
             {"central", {{"vertices", r.central}, {"type", r.central_type}}},
             {"family", json::array()},
             {"transversal", r.transversal},
             {"bound", r.bound},
             {"verified", r.verified},
             {"optimum", nullptr},
             {"timings_ms", r.timings_ms}};
    for (const auto& m : r.family) j["family"].push_back({{"vertices", m.vertices}, {"step", m.step}});
    if (r.optimum) j["optimum"] = {{"size", r.optimum->size}, {"vertices", r.optimum->vertices}};
}

void from_json(const json& j, report& r) {
    if (j.at("status") != "ok") throw input_error("not a success report");
    j.at("schema_version").get_to(r.schema_version);
    const auto& in = j.at("input");
    in.at("source").get_to(r.input.source);
    in.at("n").get_to(r.input.n);
    in.at("m").get_to(r.input.m);
    in.at("omega").get_to(r.input.omega);
    in.at("chordal").get_to(r.input.chordal);
    in.at("connected").get_to(r.input.connected);
    in.at("biconnected").get_to(r.input.biconnected);
    in.at("warnings").get_to(r.input.warnings);
    j.at("mode").get_to(r.mode);
    j.at("items").at("length").get_to(r.item_length);
    j.at("items").at("count").get_to(r.item_count);
    j.at("central").at("vertices").get_to(r.central);
    j.at("central").at("type").get_to(r.central_type);
    r.family.clear();
    for (const auto& m : j.at("family"))
        r.family.push_back({m.at("vertices").get<labels>(), m.at("step").get<std::string>()});
    j.at("transversal").get_to(r.transversal);
    j.at("bound").get_to(r.bound);
    j.at("verified").get_to(r.verified);
    r.optimum.reset();
    if (const auto& o = j.at("optimum"); !o.is_null())
        r.optimum = optimum_entry{o.at("size").get<std::size_t>(), o.at("vertices").get<labels>()};
    j.at("timings_ms").get_to(r.timings_ms);
}

void to_json(json& j, const failure& f) {
    j = json{{"schema_version", f.schema_version}, {"status", "error"},      {"source", f.source},
             {"category", f.category},             {"reason", f.reason},     {"message", f.message},
             {"exit_code", f.exit_code},           {"search", nullptr}};
    if (f.search)
        j["search"] = {{"expansions", f.search->expansions},
                       {"budget", f.search->budget},
                       {"found", f.search->found},
                       {"best_length", f.search->best_length}};
}

void from_json(const json& j, failure& f) {
    if (j.at("status") != "error") throw input_error("not a failure report");
    j.at("schema_version").get_to(f.schema_version);
    j.at("source").get_to(f.source);
    j.at("category").get_to(f.category);
    j.at("reason").get_to(f.reason);
    j.at("message").get_to(f.message);
    j.at("exit_code").get_to(f.exit_code);
    f.search.reset();
    if (const auto& s = j.at("search"); !s.is_null()) {
        search_stats st;
        s.at("expansions").get_to(st.expansions);
        s.at("budget").get_to(st.budget);
        s.at("found").get_to(st.found);
        s.at("best_length").get_to(st.best_length);
        f.search = st;
    }
}

namespace {

std::string join(const labels& ls) {
    std::string s = "{";
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? ", " : "") + ls[i];
    return s + "}";
}

std::string sequence(const labels& ls) {
    std::string s;
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? " - " : "") + ls[i];
    return s;
}

}  // namespace

std::string render_text(const report& r) {
    std::ostringstream out;
    out << "source:      " << r.input.source << '\n'
        << "graph:       n=" << r.input.n << " m=" << r.input.m << " omega=" << r.input.omega
        << " chordal=" << (r.input.chordal ? "yes" : "no") << " connected=" << (r.input.connected ? "yes" : "no")
        << " 2-connected=" << (r.input.biconnected ? "yes" : "no") << '\n';
    for (const auto& w : r.input.warnings) out << "warning:     " << w << '\n';
    out << "mode:        " << r.mode << '\n'
        << "longest:     " << r.item_count << (r.mode == "path" ? " detours" : " cycles") << " on " << r.item_length
        << " vertices\n"
        << "central:     " << join(r.central) << " (type " << r.central_type << ")\n";
    if (r.family.empty()) out << "family:      none\n";
    for (const auto& m : r.family) out << "family:      [" << m.step << "] " << sequence(m.vertices) << '\n';
    out << "transversal: " << join(r.transversal) << " (size " << r.transversal.size() << ", bound " << r.bound
        << ")\n"
        << "verified:    " << (r.verified ? "yes" : "no") << '\n';
    if (r.optimum) out << "optimum:     " << join(r.optimum->vertices) << " (size " << r.optimum->size << ")\n";
    for (const auto& [stage, ms] : r.timings_ms) out << "time " << stage << ": " << ms << " ms\n";
    return out.str();
}

std::string render_text(const failure& f) {
    std::ostringstream out;
    out << "error:   " << f.reason << " (" << f.category << ", exit " << f.exit_code << ")\n"
        << "source:  " << f.source << '\n'
        << "detail:  " << f.message << '\n';
    return out.str();
}

namespace {

labels to_labels(const std::vector<vertex>& vs, const labels& names) {
    labels out;
    out.reserve(vs.size());
    for (vertex v : vs) out.push_back(names.at(static_cast<std::size_t>(v)));
    return out;
}

labels to_labels(const vertex_set& vs, const labels& names) { return to_labels(vs.ids(), names); }

class stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

template <class Item>
void fill(report& r, const construction<Item>& c, const labels& names) {
    r.item_length = c.items.length;
    r.item_count = c.items.size();
    r.central = to_labels(c.central.x, names);
    r.central_type = c.central.type;
    for (const auto& m : c.result.fam.members)
        r.family.push_back({to_labels(c.items.items[m.item].vertices, names), std::string(to_string(m.step))});
    r.transversal = to_labels(c.result.f, names);
    r.bound = c.result.bound;
    r.verified = verify_transversal(c.items, c.result).ok;
}

}  // namespace

report analyze(const parsed_graph& in, const analyze_options& opt) {
    const graph& g = in.g;
    report r;
    stopwatch clock;
    r.input.source = opt.source;
    r.input.n = g.order();
    r.input.m = g.size();
    r.input.chordal = is_chordal(g);
    r.input.connected = is_connected(g);
    r.input.biconnected = is_biconnected(g);
    r.input.warnings = in.warnings;
    r.mode = std::string(to_string(opt.mode));
    if (!r.input.chordal) throw precondition_error("not chordal");
    if (!r.input.connected) throw precondition_error("not connected");
    if (opt.mode == item_mode::cycle && !r.input.biconnected) throw precondition_error("not 2-connected");
    r.input.omega = clique_number(g);
    r.timings_ms["recognition"] = clock.lap();

    auto finish = [&](const auto& c) {
        fill(r, c, in.labels);
        r.timings_ms["construction"] = clock.lap();
        if (opt.oracle) {
            const auto o = compare_with_optimum(c, opt.oracle_nodes);
            r.optimum = optimum_entry{o.opt_size, to_labels(o.optimum, in.labels)};
            r.timings_ms["oracle"] = clock.lap();
        }
    };
    if (opt.mode == item_mode::path)
        finish(construct_path_transversal(g, opt.budget));
    else
        finish(construct_cycle_transversal(g, opt.budget));
    return r;
}

search_budget budget_from_env() {
    search_budget b;
    const char* raw = std::getenv(budget_env_var);
    if (!raw || !*raw) return b;
    const std::string s(raw);
    if (s.find_first_not_of("0123456789") != std::string::npos)
        throw input_error(std::string(budget_env_var) + " must be a positive integer, got '" + s + "'");
    try {
        b.max_expansions = std::stoull(s);
    } catch (const std::exception&) {
        throw input_error(std::string(budget_env_var) + " is out of range");
    }
    if (b.max_expansions == 0) throw input_error(std::string(budget_env_var) + " must be positive");
    return b;
}

}  // namespace detours
