#include "rainbow/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rainbow/constructions.hpp"
#include "rainbow/triangles.hpp"

namespace rainbow {

std::string forbidden_name(Forbidden f) {
    return f == Forbidden::rainbow_triangle ? "rainbow-triangle" : "two-disjoint-rainbow";
}

void validate_search_config(const SearchConfig& cfg) {
    if (cfg.n < 3 || cfg.n > kMaxSearchOrder)
        throw std::invalid_argument("search supports 3 <= n <= " + std::to_string(kMaxSearchOrder));
    if (cfg.min_color_degree < 1 || cfg.min_color_degree > cfg.n - 1)
        throw std::invalid_argument("min color-degree bound must be in 1..n-1");
    if (cfg.budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (cfg.max_palette < 0 || cfg.max_palette > cfg.n * (cfg.n - 1) / 2)
        throw std::invalid_argument("palette must be in 1..n(n-1)/2");
}

bool search_target_met(const ColoredGraph& g, const SearchConfig& cfg) {
    if (g.order() != cfg.n) return false;
    if (cfg.scope == Scope::complete && !g.is_complete()) return false;
    if (g.min_color_degree() < cfg.min_color_degree) return false;
    if (cfg.forbid == Forbidden::rainbow_triangle) return !exists_rainbow_triangle(g).has_value();
    return max_disjoint_packing(g, PackingMode::exact).size() < 2;
}

namespace {

// Incremental annealing state on a fixed vertex set.
class Annealer {
public:
    Annealer(const SearchConfig& cfg, std::uint64_t seed)
        : cfg_(cfg), n_(cfg.n), palette_(cfg.max_palette > 0 ? cfg.max_palette : cfg.n * (cfg.n - 1) / 2),
          penalty_(cfg.penalty > 0 ? cfg.penalty : cfg.n * cfg.min_color_degree + 1), rng_(seed) {
        std::vector<std::vector<int>> index(static_cast<std::size_t>(n_), std::vector<int>(n_, -1));
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v) {
                index[u][v] = index[v][u] = static_cast<int>(eu_.size());
                eu_.push_back(u);
                ev_.push_back(v);
            }
        m_ = static_cast<int>(eu_.size());
        edge_tris_.resize(static_cast<std::size_t>(m_));
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = a + 1; b < n_; ++b)
                for (Vertex c = b + 1; c < n_; ++c) {
                    const int t = static_cast<int>(tris_.size());
                    tris_.push_back({{index[a][b], index[a][c], index[b][c]},
                                     (std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c)});
                    for (int e : tris_.back().edges) edge_tris_[e].push_back(t);
                }
        if (cfg.forbid == Forbidden::two_disjoint_rainbow) {
            disjoint_.resize(tris_.size());
            for (std::size_t s = 0; s < tris_.size(); ++s)
                for (std::size_t t = 0; t < tris_.size(); ++t)
                    if ((tris_[s].mask & tris_[t].mask) == 0) disjoint_[s].push_back(static_cast<int>(t));
        }
        color_.assign(static_cast<std::size_t>(m_), -1);
        count_.assign(static_cast<std::size_t>(n_) * palette_, 0);
        cd_.assign(static_cast<std::size_t>(n_), 0);
        rainbow_.assign(tris_.size(), 0);
    }

    // Random restart of the coloring.
    void randomize() {
        std::fill(color_.begin(), color_.end(), -1);
        std::fill(count_.begin(), count_.end(), 0);
        std::fill(cd_.begin(), cd_.end(), 0);
        std::fill(rainbow_.begin(), rainbow_.end(), 0);
        rainbow_count_ = pairs_ = 0;
        deficit_ = static_cast<long>(n_) * cfg_.min_color_degree;
        for (int e = 0; e < m_; ++e) {
            if (cfg_.scope == Scope::general && uniform_unit(rng_) < 0.1) continue;
            set_color(e, random_color());
        }
    }

    long objective() const { return deficit_ + penalty_ * violations(); }

    /// Runs up to `moves` moves; returns moves used. Stops at objective 0
    /// or when `stop()` returns true (checked every 4096 moves).
    template <typename Stop>
    std::uint64_t anneal(std::uint64_t moves, Stop&& stop) {
        constexpr double t_hot = 3.0, t_cold = 0.02;
        std::uint64_t used = 0;
        while (used < moves) {
            randomize();
            long best = objective();
            std::uint64_t since_best = 0;
            const std::uint64_t cycle = std::min<std::uint64_t>(cfg_.cycle_moves, moves - used);
            const double cooling = std::pow(t_cold / t_hot, 1.0 / static_cast<double>(std::max<std::uint64_t>(cycle, 1)));
            double temp = t_hot;
            for (std::uint64_t i = 0; i < cycle; ++i, ++used, temp *= cooling) {
                if (best == 0) return used;
                if ((used & 4095) == 0 && stop()) return used;
                step(temp);
                const long obj = objective();
                if (obj < best) {
                    best = obj;
                    since_best = 0;
                    best_seen_ = std::min(best_seen_, best);
                } else if (++since_best >= cfg_.plateau_moves) {
                    ++used;
                    break;
                }
            }
            best_seen_ = std::min(best_seen_, best);
            if (best == 0) return used;
        }
        return used;
    }

    long best_seen() const { return best_seen_; }

    ColoredGraph graph() const {
        GraphBuilder b(n_);
        for (int e = 0; e < m_; ++e)
            if (color_[e] >= 0) b.set_edge(eu_[e], ev_[e], static_cast<std::uint64_t>(color_[e]));
        return b.build();
    }

private:
    struct Tri {
        std::array<int, 3> edges;
        std::uint64_t mask;
    };

    long violations() const { return cfg_.forbid == Forbidden::rainbow_triangle ? rainbow_count_ : pairs_; }

    int random_color() { return static_cast<int>(uniform_below(rng_, static_cast<std::uint64_t>(palette_))); }

    int& count(Vertex v, int c) { return count_[static_cast<std::size_t>(v) * palette_ + c]; }

    void shift_color_degree(Vertex v, int delta) {
        const int before = std::max(0, cfg_.min_color_degree - cd_[v]);
        cd_[v] += delta;
        deficit_ += std::max(0, cfg_.min_color_degree - cd_[v]) - before;
    }

    void set_color(int e, int c) {
        const int old = color_[e];
        for (Vertex x : {eu_[e], ev_[e]}) {
            if (old >= 0 && --count(x, old) == 0) shift_color_degree(x, -1);
            if (c >= 0 && count(x, c)++ == 0) shift_color_degree(x, +1);
        }
        color_[e] = c;
        for (int t : edge_tris_[e]) {
            const auto& es = tris_[t].edges;
            const int a = color_[es[0]], b = color_[es[1]], d = color_[es[2]];
            const char now = a >= 0 && b >= 0 && d >= 0 && a != b && a != d && b != d;
            if (now == rainbow_[t]) continue;
            rainbow_[t] = now;
            const int sign = now ? 1 : -1;
            rainbow_count_ += sign;
            if (!disjoint_.empty()) {
                long partners = 0;
                for (int s : disjoint_[t]) partners += rainbow_[s];
                pairs_ += sign * partners;
            }
        }
    }

    void step(double temp) {
        const int e = static_cast<int>(uniform_below(rng_, static_cast<std::uint64_t>(m_)));
        const int old = color_[e];
        int next;
        if (cfg_.scope == Scope::general && uniform_below(rng_, 5) == 0) {
            next = old >= 0 ? -1 : random_color();
        } else if (old >= 0 && palette_ > 1) {
            next = static_cast<int>(uniform_below(rng_, static_cast<std::uint64_t>(palette_ - 1)));
            if (next >= old) ++next;
        } else {
            next = random_color();
        }
        if (next == old) return;
        const long before = objective();
        set_color(e, next);
        const long delta = objective() - before;
        if (delta <= 0) return;
        if (uniform_unit(rng_) < std::exp(-static_cast<double>(delta) / temp)) return;
        set_color(e, old);
    }

    const SearchConfig& cfg_;
    int n_;
    int m_ = 0;
    int palette_;
    long penalty_;
    std::mt19937_64 rng_;
    std::vector<Vertex> eu_, ev_;
    std::vector<Tri> tris_;
    std::vector<std::vector<int>> edge_tris_;
    std::vector<std::vector<int>> disjoint_;
    std::vector<int> color_;
    std::vector<int> count_;
    std::vector<int> cd_;
    std::vector<char> rainbow_;
    long rainbow_count_ = 0;
    long pairs_ = 0;
    long deficit_ = 0;
    long best_seen_ = LONG_MAX;
};

}  // namespace

SearchResult search_counterexample(const SearchConfig& cfg) {
    validate_search_config(cfg);
    const int restarts = cfg.restarts;
    const std::uint64_t per_restart = std::max<std::uint64_t>(cfg.budget / static_cast<std::uint64_t>(restarts), 1);

    struct Outcome {
        std::optional<ColoredGraph> graph;
        std::uint64_t moves = 0;
        long best = LONG_MAX;
        bool aborted = false;
    };
    std::vector<Outcome> outcomes(static_cast<std::size_t>(restarts));
    std::atomic<int> winner{INT_MAX};

#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.workers)
    for (int r = 0; r < restarts; ++r) {
        Outcome& out = outcomes[static_cast<std::size_t>(r)];
        if (winner.load() < r) {
            out.aborted = true;
            continue;
        }
        Annealer annealer(cfg, mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        out.moves = annealer.anneal(per_restart, [&] { return winner.load() < r; });
        out.best = annealer.best_seen();
        if (out.best == 0) {
            ColoredGraph g = annealer.graph();
            if (!search_target_met(g, cfg))
                throw std::logic_error("annealing objective reached 0 but the direct check failed");
            out.graph = std::move(g);
            int cur = winner.load();
            while (r < cur && !winner.compare_exchange_weak(cur, r)) {
            }
        } else if (winner.load() < r) {
            out.aborted = true;
        }
    }

    SearchResult result;
    long best = LONG_MAX;
    std::uint64_t total = 0;
    for (int r = 0; r < restarts; ++r) {
        const Outcome& o = outcomes[static_cast<std::size_t>(r)];
        if (result.graph) break;
        total += o.moves;
        best = std::min(best, o.best);
        if (o.graph) {
            result.graph = o.graph;
            result.restart = r;
            result.moves = o.moves;
            result.log.push_back("restart " + std::to_string(r) + ": found after " + std::to_string(o.moves) + " moves");
        } else {
            result.log.push_back("restart " + std::to_string(r) + ": best objective " + std::to_string(o.best) +
                                 " after " + std::to_string(o.moves) + " moves");
        }
    }
    result.best_objective = result.graph ? 0 : best;
    if (!result.graph) result.moves = total;
    return result;
}

}  // namespace rainbow
