#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace detours {

// Each error category maps to one CLI exit code (see exit_code()).
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept = 0;
};

// Malformed arguments or input files.
class input_error : public error {
public:
    using error::error;
    int exit_code() const noexcept override { return 2; }
};

class parse_error : public input_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Structurally valid input the algorithm is not defined for
// (non-chordal, disconnected, not 2-connected, ...).
class precondition_error : public error {
public:
    precondition_error(std::string reason, const std::string& detail)
        : error(detail.empty() ? reason : reason + ": " + detail), reason_(std::move(reason)) {}
    explicit precondition_error(std::string reason) : precondition_error(std::move(reason), "") {}
    const std::string& reason() const noexcept { return reason_; }
    int exit_code() const noexcept override { return 3; }

private:
    std::string reason_;
};

struct search_stats {
    std::uint64_t expansions = 0;
    std::uint64_t budget = 0;
    std::uint64_t found = 0;
    std::size_t best_length = 0;
    friend bool operator==(const search_stats&, const search_stats&) = default;
};

// Exact search gave up after exhausting its node budget.
class resource_error : public error {
public:
    resource_error(const std::string& what, search_stats stats)
        : error(what + " (budget " + std::to_string(stats.budget) + " expansions, " +
                std::to_string(stats.expansions) + " used, best length so far " +
                std::to_string(stats.best_length) + ")"),
          stats_(stats) {}
    const search_stats& stats() const noexcept { return stats_; }
    int exit_code() const noexcept override { return 4; }

private:
    search_stats stats_;
};

// A guarantee that should hold by construction was observed to fail.
class invariant_error : public error {
public:
    using error::error;
    int exit_code() const noexcept override { return 5; }
};

}  // namespace detours
