#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "detours/classify.hpp"
#include "detours/error.hpp"
#include "detours/io.hpp"
#include "detours/longest.hpp"

namespace detours {

inline constexpr int report_schema_version = 1;

using labels = std::vector<std::string>;

struct input_summary {
    std::string source;
    int n = 0;
    std::size_t m = 0;
    int omega = 0;
    bool chordal = false;
    bool connected = false;
    bool biconnected = false;
    std::vector<std::string> warnings;
    friend bool operator==(const input_summary&, const input_summary&) = default;
};

struct family_entry {
    labels vertices;
    std::string step;
    friend bool operator==(const family_entry&, const family_entry&) = default;
};

struct optimum_entry {
    std::size_t size = 0;
    labels vertices;
    friend bool operator==(const optimum_entry&, const optimum_entry&) = default;
};

// Result of one analysis. All vertices are given by their input labels.
struct report {
    int schema_version = report_schema_version;
    input_summary input;
    std::string mode;  // "path" | "cycle"
    std::size_t item_length = 0;
    std::size_t item_count = 0;
    labels central;
    int central_type = 0;
    std::vector<family_entry> family;
    labels transversal;
    std::size_t bound = 0;
    bool verified = false;
    std::optional<optimum_entry> optimum;
    std::map<std::string, double> timings_ms;
    friend bool operator==(const report&, const report&) = default;
};

// Why an analysis stopped; `reason` is a short machine-readable token such
// as "not chordal" or "search budget exceeded".
struct failure {
    int schema_version = report_schema_version;
    std::string source;
    std::string category;  // input | precondition | resource | invariant
    std::string reason;
    std::string message;
    int exit_code = 0;
    std::optional<search_stats> search;
    friend bool operator==(const failure&, const failure&) = default;
};

failure failure_from(const error& e, const std::string& source);

void to_json(nlohmann::json& j, const report& r);
void from_json(const nlohmann::json& j, report& r);
void to_json(nlohmann::json& j, const failure& f);
void from_json(const nlohmann::json& j, failure& f);

std::string render_text(const report& r);
std::string render_text(const failure& f);

struct analyze_options {
    item_mode mode = item_mode::path;
    bool oracle = false;
    search_budget budget;
    std::uint64_t oracle_nodes = 1'000'000;
    std::string source;
};

// Recognition, clique tree, enumeration, central clique, transversal,
// verification and, if requested, the exact optimum. Throws the error
// subclasses of error.hpp; precondition reasons are checked in the order
// "not chordal", "not connected", "not 2-connected".
report analyze(const parsed_graph& in, const analyze_options& opt);

// DETOURS_SEARCH_BUDGET, if set, overrides the default enumeration budget.
inline constexpr const char* budget_env_var = "DETOURS_SEARCH_BUDGET";
search_budget budget_from_env();

}  // namespace detours
