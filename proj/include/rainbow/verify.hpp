#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/theorems.hpp"

namespace rainbow {

enum class VerifyMode { exhaustive, random };

struct VerifyOptions {
    TheoremId theorem = TheoremId::T8;
    int n = 5;
    int k = 1;
    VerifyMode mode = VerifyMode::exhaustive;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    bool allow_n7 = false;              // exhaustive runs at n = 7
    std::size_t keep_counterexamples = 16;
    int max_attempts_per_sample = 64;  // random mode
};

struct VerificationReport {
    TheoremId theorem = TheoremId::T8;
    int n = 0;
    int k = 1;
    VerifyMode mode = VerifyMode::exhaustive;
    std::uint64_t examined = 0;         // colorings covered (exhaustive) or graphs drawn (random)
    std::uint64_t pruned = 0;           // exhaustive: covered without a visit
    std::uint64_t hypothesis_count = 0;
    std::uint64_t counterexample_total = 0;
    std::vector<ColoredGraph> counterexamples;  // first keep_counterexamples, in search order
    std::uint64_t seed = 0;
    int workers = 1;
    double wall_ms = 0;

    bool verified() const { return counterexample_total == 0; }
};

/// Exhaustive mode covers every coloring of K_n up to color renaming
/// (n <= 6, or 7 with allow_n7); random mode draws `samples` graphs that
/// pass the hypothesis from the biased sampler. Reports do not depend on
/// the worker count. Throws std::invalid_argument on bad options.
VerificationReport verify_theorem(const VerifyOptions& opts);

/// `include_run_info` adds workers and wall_ms, the only fields that vary
/// between otherwise identical runs.
nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_run_info = true);

std::string mode_name(VerifyMode mode);

}  // namespace rainbow
