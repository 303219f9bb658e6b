#pragma once

// Acceptance criteria, shared by the dioph_acceptance binary and
// `dioph verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dioph::acceptance {

struct Context {
    unsigned threads = 1;
    std::uint64_t seed = 20240611;
};

struct Result {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::vector<std::string> suites;
    double time_limit_s = 0;
    std::function<Result(const Context&)> run;
};

struct Outcome {
    std::string id;
    bool passed = false;
    double seconds = 0;
    double time_limit_s = 0;
    std::string detail;
};

/// Ordered by id.
const std::vector<Criterion>& criteria();

/// Suite names accepted by run_suite, "all" first.
std::vector<std::string> suite_names();

/// Runs every criterion tagged with `suite` ("all" selects everything), in id
/// order. Throws std::invalid_argument for an unknown suite.
std::vector<Outcome> run_suite(std::string_view suite, const Context& ctx,
                               const std::function<void(const Outcome&)>& on_done = {});

std::string format_line(const Outcome& outcome);

}  // namespace dioph::acceptance
