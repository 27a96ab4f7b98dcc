#include "rainbow/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include <omp.h>

#include "rainbow/constructions.hpp"
#include "rainbow/ecg.hpp"
#include "rainbow/enumerate.hpp"

namespace rainbow {

namespace {

class ExhaustiveVisitor {
public:
    ExhaustiveVisitor(const TheoremSpec& spec, int k, std::size_t keep) : spec_(&spec), k_(k), keep_(keep) {}

    void operator()(const ColoringState& s) {
        HypothesisInputs h{s.order(), s.min_color_degree(), 0, s.rainbow_total() == 0};
        if (spec_->id == TheoremId::T5 || spec_->id == TheoremId::T6) h.max_mono_degree = s.max_mono_degree();
        if (!spec_->hypothesis(h, k_)) return;
        ++hypothesis_count;
        if (const std::optional<bool> quick = quick_conclusion(s); quick && *quick) return;

        const ColoredGraph g = s.to_graph();
        const bool fails = !check_conclusion(g, *spec_, k_).holds;
        if (!fails) return;
        if (!check_hypothesis(g, *spec_, k_))
            throw std::logic_error("incremental hypothesis disagrees with graph for " + std::string(spec_->name));
        ++counterexample_total;
        if (counterexamples.size() < keep_) counterexamples.push_back(g);
    }

    std::uint64_t hypothesis_count = 0;
    std::uint64_t counterexample_total = 0;
    std::vector<ColoredGraph> counterexamples;

private:
    std::optional<bool> quick_conclusion(const ColoringState& s) const {
        switch (spec_->id) {
            case TheoremId::T8:
            case TheoremId::T15:
                return s.rainbow_total() > 0;
            case TheoremId::T1:
            case TheoremId::T3: {
                const int need = spec_->id == TheoremId::T1 ? 1 : k_;
                for (Vertex v = 0; v < s.order(); ++v)
                    if (s.rainbow_at(v) < need) return false;
                return true;
            }
            default:
                return std::nullopt;
        }
    }

    const TheoremSpec* spec_;
    int k_;
    std::size_t keep_;
};

void run_exhaustive(const VerifyOptions& opts, const TheoremSpec& spec, VerificationReport& r) {
    if (opts.n > 6 && !(opts.n == 7 && opts.allow_n7))
        throw std::invalid_argument("exhaustive mode supports n <= 6 (n = 7 needs an explicit override)");
    check_enumeration_order(opts.n);

    EnumerationOptions eopts;
    eopts.min_color_degree = color_degree_floor(spec, opts.n, opts.k);
    eopts.rainbow_free = spec.needs_rainbow_free;

    auto result = enumerate_canonical_colorings(
        opts.n, [&] { return ExhaustiveVisitor(spec, opts.k, opts.keep_counterexamples); }, eopts, opts.workers);
    r.examined = result.stats.total();
    r.pruned = result.stats.pruned;
    for (ExhaustiveVisitor& v : result.shards) {
        r.hypothesis_count += v.hypothesis_count;
        r.counterexample_total += v.counterexample_total;
        for (ColoredGraph& g : v.counterexamples)
            if (r.counterexamples.size() < opts.keep_counterexamples) r.counterexamples.push_back(std::move(g));
    }
}

void run_random(const VerifyOptions& opts, const TheoremSpec& spec, VerificationReport& r) {
    const int floor = color_degree_floor(spec, opts.n, opts.k);
    if (opts.n < 2 || floor > opts.n - 1) return;  // hypothesis unsatisfiable: nothing to draw
    const int target = std::max(floor, 1);

    const auto samples = static_cast<long>(opts.samples);
    std::vector<std::uint32_t> attempts(opts.samples, 0);
    std::vector<char> accepted(opts.samples, 0);
    struct Found {
        long index;
        ColoredGraph graph;
    };
    std::vector<std::vector<Found>> per_thread;

#pragma omp parallel num_threads(opts.workers > 0 ? opts.workers : 1)
    {
#pragma omp single
        per_thread.resize(static_cast<std::size_t>(omp_get_num_threads()));
        std::vector<Found>& mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
        for (long i = 0; i < samples; ++i) {
            const std::uint64_t base = mix_seed(opts.seed, static_cast<std::uint64_t>(i));
            for (int j = 0; j < opts.max_attempts_per_sample; ++j) {
                ++attempts[static_cast<std::size_t>(i)];
                const std::uint64_t s = mix_seed(base, static_cast<std::uint64_t>(j));
                Completeness completeness = Completeness::complete();
                if (spec.scope == Scope::general) {
                    std::mt19937_64 prng(mix_seed(s, 0xed9e));
                    completeness = Completeness::probability(0.8 + 0.2 * uniform_unit(prng));
                }
                std::optional<ColoredGraph> g = gen_biased_high_color_degree(opts.n, target, s, completeness);
                if (!g || !check_hypothesis(*g, spec, opts.k)) continue;
                accepted[static_cast<std::size_t>(i)] = 1;
                if (!check_conclusion(*g, spec, opts.k).holds) mine.push_back({i, std::move(*g)});
                break;
            }
        }
    }

    for (std::uint32_t a : attempts) r.examined += a;
    r.hypothesis_count = static_cast<std::uint64_t>(std::count(accepted.begin(), accepted.end(), 1));
    std::vector<Found> found;
    for (auto& v : per_thread)
        for (Found& f : v) found.push_back(std::move(f));
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.index < b.index; });
    r.counterexample_total = found.size();
    for (Found& f : found)
        if (r.counterexamples.size() < opts.keep_counterexamples) r.counterexamples.push_back(std::move(f.graph));
}

}  // namespace

std::string mode_name(VerifyMode mode) { return mode == VerifyMode::exhaustive ? "exhaustive" : "random"; }

VerificationReport verify_theorem(const VerifyOptions& opts) {
    const TheoremSpec& spec = theorem(opts.theorem);
    if (spec.uses_k && opts.k < 1) throw std::invalid_argument("k must be >= 1");
    if (opts.n < 1 || opts.n > kMaxOrder) throw std::invalid_argument("n out of range");
    if (opts.workers < 1) throw std::invalid_argument("workers must be >= 1");

    VerificationReport r;
    r.theorem = opts.theorem;
    r.n = opts.n;
    r.k = opts.k;
    r.mode = opts.mode;
    r.seed = opts.seed;
    r.workers = opts.workers;

    const auto start = std::chrono::steady_clock::now();
    if (opts.mode == VerifyMode::exhaustive)
        run_exhaustive(opts, spec, r);
    else
        run_random(opts, spec, r);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_run_info) {
    const TheoremSpec& spec = theorem(r.theorem);
    nlohmann::ordered_json j;
    j["theorem"] = std::string(spec.name);
    j["n"] = r.n;
    j["k"] = spec.uses_k ? nlohmann::ordered_json(r.k) : nlohmann::ordered_json(nullptr);
    j["mode"] = mode_name(r.mode);
    j["examined"] = r.examined;
    j["pruned"] = r.pruned;
    j["hypothesis_count"] = r.hypothesis_count;
    j["counterexample_total"] = r.counterexample_total;
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const ColoredGraph& g : r.counterexamples) j["counterexamples"].push_back(write_ecg(g));
    j["status"] = r.verified() ? "verified" : "counterexample";
    j["seed"] = r.seed;
    if (include_run_info) {
        j["workers"] = r.workers;
        j["wall_ms"] = static_cast<std::int64_t>(r.wall_ms);
    }
    return j;
}

}  // namespace rainbow
