#include "rainbow/theorems.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rainbow {

HypothesisInputs HypothesisInputs::of(const ColoredGraph& g) {
    return {g.order(), g.min_color_degree(), g.max_mono_degree(), !exists_rainbow_triangle(g).has_value()};
}

namespace {

// 2 * delta >= rhs, the only form thresholds take.
bool twice_delta_at_least(const HypothesisInputs& h, int rhs) { return 2 * h.min_color_degree >= rhs; }

constexpr std::array<TheoremSpec, 12> kRegistry{{
    {TheoremId::T1, "T1", Scope::complete, false, "2*delta >= n+1  =>  every vertex lies in a rainbow triangle",
     [](const HypothesisInputs& h, int) { return twice_delta_at_least(h, h.n + 1); }, false},
    {TheoremId::T3, "T3", Scope::complete, true, "2*delta >= n+k  =>  every vertex lies in >= k rainbow triangles",
     [](const HypothesisInputs& h, int k) { return twice_delta_at_least(h, h.n + k); }, false},
    {TheoremId::F4, "F4", Scope::complete, true,
     "2*delta >= n-1+2k  =>  every vertex lies in >= k edge-disjoint rainbow triangles",
     [](const HypothesisInputs& h, int k) { return twice_delta_at_least(h, h.n - 1 + 2 * k); }, false},
    {TheoremId::T8, "T8", Scope::complete, false, "2*delta >= n  =>  a rainbow triangle exists",
     [](const HypothesisInputs& h, int) { return twice_delta_at_least(h, h.n); }, false},
    {TheoremId::T10, "T10", Scope::complete, false,
     "2*delta >= n-1 and no rainbow triangle  =>  odd n with the hub-and-pairs partition",
     [](const HypothesisInputs& h, int) { return h.rainbow_free && twice_delta_at_least(h, h.n - 1); }, true},
    {TheoremId::T11, "T11", Scope::complete, false, "n >= 8 and 2*delta >= n+1  =>  two vertex-disjoint rainbow triangles",
     [](const HypothesisInputs& h, int) { return h.n >= 8 && twice_delta_at_least(h, h.n + 1); }, false},
    {TheoremId::F13, "F13", Scope::complete, true, "2*delta >= n-3+3k  =>  k vertex-disjoint rainbow triangles",
     [](const HypothesisInputs& h, int k) { return twice_delta_at_least(h, h.n - 3 + 3 * k); }, false},
    {TheoremId::T14, "T14", Scope::general, false, "n >= 7 and 2*delta >= n+2  =>  two vertex-disjoint rainbow triangles",
     [](const HypothesisInputs& h, int) { return h.n >= 7 && twice_delta_at_least(h, h.n + 2); }, false},
    {TheoremId::T15, "T15", Scope::general, false, "2*delta >= n+1  =>  a rainbow triangle exists",
     [](const HypothesisInputs& h, int) { return twice_delta_at_least(h, h.n + 1); }, false},
    {TheoremId::T16, "T16", Scope::general, false,
     "2*delta >= n and no rainbow triangle  =>  G = K_{n/2,n/2}, or n = 4 and G is K_4 or K_4 - e",
     [](const HypothesisInputs& h, int) { return h.rainbow_free && twice_delta_at_least(h, h.n); }, true},
    {TheoremId::T5, "T5", Scope::complete, false, "mono-degree <= n-2  =>  a properly colored cycle of length <= 4",
     [](const HypothesisInputs& h, int) { return h.max_mono_degree <= h.n - 2; }, false},
    {TheoremId::T6, "T6", Scope::complete, false,
     "mono-degree <= n-5  =>  two disjoint properly colored cycles of length <= 4",
     [](const HypothesisInputs& h, int) { return h.max_mono_degree <= h.n - 5; }, false},
}};

void check_scope(const ColoredGraph& g, const TheoremSpec& spec, int k) {
    if (spec.scope == Scope::complete && !g.is_complete())
        throw std::invalid_argument(std::string(spec.name) + " applies to complete graphs only");
    if (spec.uses_k && k < 1) throw std::invalid_argument(std::string(spec.name) + " requires k >= 1");
}

bool is_balanced_complete_bipartite(const ColoredGraph& g) {
    const int n = g.order();
    if (n % 2 != 0) return false;
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    side[0] = 0;
    std::vector<Vertex> stack{0};
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        bool clash = false;
        g.neighbors(v).for_each([&](Vertex u) {
            if (side[u] == -1) {
                side[u] = 1 - side[v];
                stack.push_back(u);
            } else if (side[u] == side[v]) {
                clash = true;
            }
        });
        if (clash) return false;
    }
    if (std::count(side.begin(), side.end(), -1) != 0) return false;
    const auto left = std::count(side.begin(), side.end(), 0);
    return left == n / 2 && g.edge_count() == (n / 2) * (n / 2);
}

std::string join_counts(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string describe(const Triangle& t) {
    return "(" + std::to_string(t.vertices[0]) + "," + std::to_string(t.vertices[1]) + "," +
           std::to_string(t.vertices[2]) + ")";
}

Conclusion every_vertex_at_least(std::vector<int> counts, int k, std::string_view what) {
    Conclusion c;
    c.per_vertex = std::move(counts);
    const auto low = std::find_if(c.per_vertex.begin(), c.per_vertex.end(), [k](int x) { return x < k; });
    c.holds = low == c.per_vertex.end();
    if (c.holds) {
        c.witness = std::string(what) + " per vertex: " + join_counts(c.per_vertex);
    } else {
        const auto v = low - c.per_vertex.begin();
        c.witness = "vertex " + std::to_string(v) + " has " + std::to_string(*low) + " " + std::string(what) +
                    " (need " + std::to_string(k) + ")";
    }
    return c;
}

Conclusion packing_at_least(const ColoredGraph& g, int k) {
    Conclusion c;
    const Packing p = max_disjoint_packing(g, PackingMode::exact);
    c.triangles = p.triangles;
    c.holds = p.size() >= k;
    c.witness = "maximum vertex-disjoint rainbow packing has size " + std::to_string(p.size());
    for (const Triangle& t : p.triangles) c.witness += " " + describe(t);
    return c;
}

}  // namespace

std::span<const TheoremSpec> all_theorems() { return kRegistry; }

const TheoremSpec& theorem(TheoremId id) {
    for (const TheoremSpec& s : kRegistry)
        if (s.id == id) return s;
    throw std::logic_error("unregistered theorem id");
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (const TheoremSpec& s : kRegistry)
        if (s.name == name) return s.id;
    return std::nullopt;
}

int color_degree_floor(const TheoremSpec& spec, int n, int k) {
    for (int d = 0; d < n; ++d)
        if (spec.hypothesis({n, d, 0, true}, k)) return d;
    return n;
}

bool check_hypothesis(const ColoredGraph& g, const TheoremSpec& spec, int k) {
    check_scope(g, spec, k);
    return spec.hypothesis(HypothesisInputs::of(g), k);
}

Conclusion check_conclusion(const ColoredGraph& g, const TheoremSpec& spec, int k) {
    check_scope(g, spec, k);
    switch (spec.id) {
        case TheoremId::T1:
            return every_vertex_at_least(rainbow_counts_per_vertex(g), 1, "rainbow triangles");
        case TheoremId::T3:
            return every_vertex_at_least(rainbow_counts_per_vertex(g), k, "rainbow triangles");
        case TheoremId::F4: {
            std::vector<int> sizes;
            for (Vertex v = 0; v < g.order(); ++v) sizes.push_back(edge_disjoint_at_vertex(g, v).size());
            return every_vertex_at_least(std::move(sizes), k, "edge-disjoint rainbow triangles");
        }
        case TheoremId::T8:
        case TheoremId::T15: {
            Conclusion c;
            if (auto t = exists_rainbow_triangle(g)) {
                c.holds = true;
                c.triangles.push_back(*t);
                c.witness = "rainbow triangle " + describe(*t);
            } else {
                c.witness = "no rainbow triangle";
            }
            return c;
        }
        case TheoremId::T10: {
            Conclusion c;
            c.certificate = recognize_thm10(g);
            c.holds = c.certificate.has_value();
            c.witness = c.holds ? "partition with hub " + std::to_string(c.certificate->hub) + " and " +
                                      std::to_string(c.certificate->pairs.size()) + " pairs"
                                : "no hub admits the partition";
            return c;
        }
        case TheoremId::T11:
        case TheoremId::T14:
            return packing_at_least(g, 2);
        case TheoremId::F13:
            return packing_at_least(g, k);
        case TheoremId::T16: {
            Conclusion c;
            const int n = g.order();
            const bool k4_family = n == 4 && g.edge_count() >= 5;
            c.holds = is_balanced_complete_bipartite(g) || k4_family;
            c.witness = c.holds ? (k4_family ? "K_4 or K_4 - e" : "balanced complete bipartite")
                                : "not K_{n/2,n/2}";
            return c;
        }
        case TheoremId::T5: {
            Conclusion c;
            if (auto cyc = find_pc_cycle_le4(g)) {
                c.holds = true;
                c.cycles.push_back(*cyc);
                c.witness = "properly colored " + std::to_string(cyc->size()) + "-cycle";
            } else {
                c.witness = "no properly colored cycle of length <= 4";
            }
            return c;
        }
        case TheoremId::T6: {
            Conclusion c;
            if (auto two = find_two_disjoint_pc_cycles(g)) {
                c.holds = true;
                c.cycles = {two->first, two->second};
                c.witness = "two disjoint properly colored short cycles";
            } else {
                c.witness = "no two disjoint properly colored cycles of length <= 4";
            }
            return c;
        }
    }
    throw std::logic_error("unhandled theorem id");
}

}  // namespace rainbow
