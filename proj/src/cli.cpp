#include "rainbow/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/ecg.hpp"
#include "rainbow/search.hpp"
#include "rainbow/theorems.hpp"
#include "rainbow/triangles.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

using json = nlohmann::ordered_json;

json triangle_json(const Triangle& t) {
    return {{"vertices", t.vertices}, {"colors", t.colors}, {"rainbow", t.rainbow}};
}

std::string triangle_line(const Triangle& t) {
    std::ostringstream s;
    s << t.vertices[0] << ' ' << t.vertices[1] << ' ' << t.vertices[2] << "  colors " << t.colors[0] << ' '
      << t.colors[1] << ' ' << t.colors[2] << (t.rainbow ? "  rainbow" : "");
    return s.str();
}

void emit_graph(const ColoredGraph& g, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << write_ecg(g);
    else
        write_ecg_file(path, g);
}

struct Options {
    // gen
    int p = 0;
    int n = 0;
    int colors = 1;
    std::uint64_t seed = 1;
    double edge_prob = 1.0;
    std::string output;
    // file commands
    std::string file;
    bool json = false;
    bool rainbow_only = false;
    std::optional<int> at;
    std::string pack_mode = "exact";
    // verify
    std::string theorem;
    int k = 1;
    std::string mode;
    std::uint64_t samples = 1000;
    int workers = 1;
    bool allow_n7 = false;
    std::string counterexample_out;
    // search
    bool general = false;
    int min_cd = 0;
    std::string forbid;
    std::uint64_t budget = 0;
    int restarts = 32;
    int palette = 0;
};

int run_analyze(const Options& o, std::ostream& out) {
    const ColoredGraph g = read_ecg_file(o.file);
    const std::vector<int> per = rainbow_counts_per_vertex(g);
    const auto total = enumerate_triangles(g, true).size();
    if (o.json) {
        json j;
        j["n"] = g.order();
        j["m"] = g.edge_count();
        j["complete"] = g.is_complete();
        j["colors"] = g.color_count();
        j["min_color_degree"] = g.min_color_degree();
        j["max_mono_degree"] = g.max_mono_degree();
        j["per_vertex"] = json::array();
        for (Vertex v = 0; v < g.order(); ++v)
            j["per_vertex"].push_back({{"v", v},
                                       {"degree", g.degree(v)},
                                       {"color_degree", g.color_degree(v)},
                                       {"mono_degree", g.mono_degree(v)},
                                       {"rainbow_triangles", per[v]}});
        j["rainbow_triangle_total"] = total;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "n " << g.order() << ", m " << g.edge_count() << (g.is_complete() ? " (complete)" : "") << ", colors "
        << g.color_count() << '\n'
        << "min color-degree " << g.min_color_degree() << ", max mono-degree " << g.max_mono_degree() << '\n'
        << "rainbow triangles " << total << '\n';
    for (Vertex v = 0; v < g.order(); ++v)
        out << "  v" << v << ": degree " << g.degree(v) << ", color-degree " << g.color_degree(v) << ", mono-degree "
            << g.mono_degree(v) << ", rainbow triangles " << per[v] << '\n';
    return kExitOk;
}

int run_triangles(const Options& o, std::ostream& out) {
    const ColoredGraph g = read_ecg_file(o.file);
    std::vector<Triangle> ts;
    if (o.at) {
        if (*o.at < 0 || *o.at >= g.order()) throw CLI::ValidationError("--at", "vertex out of range");
        ts = rainbow_triangles_at(g, *o.at);
    } else {
        ts = enumerate_triangles(g, o.rainbow_only);
    }
    if (o.json) {
        json j = json::array();
        for (const Triangle& t : ts) j.push_back(triangle_json(t));
        out << json{{"count", ts.size()}, {"triangles", j}}.dump(2) << '\n';
    } else {
        out << ts.size() << " triangles\n";
        for (const Triangle& t : ts) out << triangle_line(t) << '\n';
    }
    return kExitOk;
}

int run_pack(const Options& o, std::ostream& out) {
    const ColoredGraph g = read_ecg_file(o.file);
    Packing p;
    if (o.at) {
        if (*o.at < 0 || *o.at >= g.order()) throw CLI::ValidationError("--at", "vertex out of range");
        p = edge_disjoint_at_vertex(g, *o.at);
    } else {
        p = max_disjoint_packing(g, o.pack_mode == "greedy" ? PackingMode::greedy : PackingMode::exact);
    }
    const std::string kind = o.at ? "edge-disjoint-at-vertex" : "vertex-disjoint";
    if (o.json) {
        json j;
        j["kind"] = kind;
        if (o.at) j["at"] = *o.at;
        j["mode"] = o.at ? "exact" : o.pack_mode;
        j["size"] = p.size();
        j["triangles"] = json::array();
        for (const Triangle& t : p.triangles) j["triangles"].push_back(triangle_json(t));
        out << j.dump(2) << '\n';
    } else {
        out << kind << " packing of size " << p.size() << '\n';
        for (const Triangle& t : p.triangles) out << triangle_line(t) << '\n';
    }
    return kExitOk;
}

int run_recognize(const Options& o, std::ostream& out) {
    const ColoredGraph g = read_ecg_file(o.file);
    const std::optional<Thm10Certificate> cert = recognize_thm10(g);
    if (o.json) {
        json j;
        j["recognized"] = cert.has_value();
        if (cert) {
            j["hub"] = cert->hub;
            j["pairs"] = json::array();
            for (auto [a, b] : cert->pairs) j["pairs"].push_back({a, b});
            j["part_colors"] = cert->part_colors;
        }
        out << j.dump(2) << '\n';
    } else if (cert) {
        out << "recognized: hub " << cert->hub << '\n';
        for (std::size_t i = 0; i < cert->pairs.size(); ++i)
            out << "  A_" << i + 1 << " = {" << cert->pairs[i].first << ", " << cert->pairs[i].second << "}  color "
                << cert->part_colors[i] << '\n';
    } else {
        out << "not recognized\n";
    }
    return cert ? kExitOk : kExitNegative;
}

int run_verify(const Options& o, std::ostream& out) {
    const auto id = parse_theorem_id(o.theorem);
    if (!id) throw CLI::ValidationError("--theorem", "unknown theorem id '" + o.theorem + "'");
    VerifyOptions vo;
    vo.theorem = *id;
    vo.n = o.n;
    vo.k = o.k;
    vo.mode = o.mode == "random" ? VerifyMode::random : VerifyMode::exhaustive;
    vo.samples = o.samples;
    vo.seed = o.seed;
    vo.workers = o.workers;
    vo.allow_n7 = o.allow_n7;
    const VerificationReport r = verify_theorem(vo);

    std::string cex_path;
    if (!r.verified()) {
        cex_path = !o.counterexample_out.empty() ? o.counterexample_out
                                                 : "counterexample-" + o.theorem + "-n" + std::to_string(o.n) + ".ecg";
        write_ecg_file(cex_path, r.counterexamples.front());
    }
    if (o.json) {
        json j = report_to_json(r);
        if (!cex_path.empty()) j["counterexample_path"] = cex_path;
        out << j.dump(2) << '\n';
    } else {
        out << o.theorem << " n=" << r.n << " " << mode_name(r.mode) << ": examined " << r.examined
            << ", hypothesis satisfied " << r.hypothesis_count << ", counterexamples " << r.counterexample_total
            << '\n';
        if (r.mode == VerifyMode::exhaustive) out << "pruned without visit " << r.pruned << '\n';
        if (!cex_path.empty()) out << "counterexample written to " << cex_path << '\n';
    }
    return r.verified() ? kExitOk : kExitNegative;
}

int run_search(const Options& o, std::ostream& out) {
    SearchConfig cfg;
    cfg.n = o.n;
    cfg.scope = o.general ? Scope::general : Scope::complete;
    cfg.min_color_degree = o.min_cd;
    cfg.forbid = o.forbid == "rainbow-triangle" ? Forbidden::rainbow_triangle : Forbidden::two_disjoint_rainbow;
    cfg.budget = o.budget;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    cfg.max_palette = o.palette;
    cfg.workers = o.workers;
    const SearchResult r = search_counterexample(cfg);
    if (r.graph && !o.output.empty()) write_ecg_file(o.output, *r.graph);
    if (o.json) {
        json j;
        j["found"] = r.graph.has_value();
        j["restart"] = r.restart;
        j["moves"] = r.moves;
        j["best_objective"] = r.best_objective;
        j["graph"] = r.graph ? json(write_ecg(*r.graph)) : json(nullptr);
        j["log"] = r.log;
        out << j.dump(2) << '\n';
    } else {
        for (const std::string& line : r.log) out << line << '\n';
        if (r.graph) {
            out << "found instance (restart " << r.restart << ")\n";
            if (o.output.empty()) out << write_ecg(*r.graph);
            else out << "written to " << o.output << '\n';
        } else {
            out << "no instance within budget; best objective " << r.best_objective << '\n';
        }
    }
    return r.graph ? kExitOk : kExitNegative;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rainbow triangles in edge-colored graphs", "ecgtool"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "write a generated graph in .ecg format");
    gen->require_subcommand(1);
    gen->add_option("-o,--output", o.output, "output file (default stdout)");
    auto* g_c2 = gen->add_subcommand("construction2", "hub with no rainbow triangle, order 2p");
    g_c2->add_option("--p", o.p, "parameter p >= 2")->required();
    auto* g_x10 = gen->add_subcommand("extremal10", "odd-order hub-and-pairs coloring");
    g_x10->add_option("--n", o.n, "odd order >= 5")->required();
    auto* g_bip = gen->add_subcommand("bipartite", "properly colored K_{n/2,n/2}");
    g_bip->add_option("--n", o.n, "even order >= 4")->required();
    auto* g_rb = gen->add_subcommand("rainbow", "K_n with all colors distinct");
    g_rb->add_option("--n", o.n, "order")->required();
    auto* g_rand = gen->add_subcommand("random", "uniform random coloring");
    g_rand->add_option("--n", o.n, "order")->required();
    g_rand->add_option("--colors", o.colors, "palette size")->required();
    g_rand->add_option("--seed", o.seed, "seed");
    g_rand->add_option("--edge-prob", o.edge_prob, "edge probability (1 = complete)")->check(CLI::Range(0.0, 1.0));
    for (auto* sub : {g_c2, g_x10, g_bip, g_rb, g_rand})
        sub->add_option("-o,--output", o.output, "output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "degree profile and rainbow-triangle counts");
    analyze->add_option("file", o.file)->required();
    analyze->add_flag("--json", o.json);

    auto* tri = app.add_subcommand("triangles", "list triangles");
    tri->add_option("file", o.file)->required();
    tri->add_flag("--rainbow-only", o.rainbow_only);
    tri->add_option("--at", o.at, "rainbow triangles through this vertex");
    tri->add_flag("--json", o.json);

    auto* pack = app.add_subcommand("pack", "vertex-disjoint rainbow-triangle packing");
    pack->add_option("file", o.file)->required();
    pack->add_option("--mode", o.pack_mode)->check(CLI::IsMember({"exact", "greedy"}));
    pack->add_option("--at", o.at, "edge-disjoint packing through this vertex instead");
    pack->add_flag("--json", o.json);

    auto* recog = app.add_subcommand("recognize", "recognize extremal structure");
    auto* r10 = recog->add_subcommand("thm10", "odd-order hub-and-pairs partition");
    recog->require_subcommand(1);
    r10->add_option("file", o.file)->required();
    r10->add_flag("--json", o.json);

    auto* verify = app.add_subcommand("verify", "check a registered theorem");
    verify->add_option("--theorem", o.theorem, "T1 T3 F4 T8 T10 T11 F13 T14 T15 T16 T5 T6")->required();
    verify->add_option("--n", o.n)->required()->check(CLI::Range(1, kMaxOrder));
    verify->add_option("--k", o.k)->check(CLI::PositiveNumber);
    verify->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--samples", o.samples);
    verify->add_option("--seed", o.seed);
    verify->add_option("--workers", o.workers)->check(CLI::Range(1, 1024));
    verify->add_flag("--allow-n7", o.allow_n7, "permit exhaustive runs at n = 7");
    verify->add_option("--counterexample-out", o.counterexample_out, "where to write the first counterexample");
    verify->add_flag("--json", o.json);

    auto* search = app.add_subcommand("search", "annealing search for extremal instances");
    search->add_option("--n", o.n)->required();
    search->add_flag("--general", o.general, "allow missing edges");
    search->add_option("--min-color-degree", o.min_cd)->required();
    search->add_option("--forbid", o.forbid)->required()->check(
        CLI::IsMember({"rainbow-triangle", "two-disjoint-rainbow"}));
    search->add_option("--budget", o.budget)->required()->check(CLI::PositiveNumber);
    search->add_option("--seed", o.seed)->required();
    search->add_option("--restarts", o.restarts)->check(CLI::Range(1, 4096));
    search->add_option("--palette", o.palette);
    search->add_option("--workers", o.workers)->check(CLI::Range(1, 1024));
    search->add_option("-o,--output", o.output);
    search->add_flag("--json", o.json);

    std::vector<const char*> argv{"ecgtool"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (g_c2->parsed()) emit_graph(gen_construction2(o.p), o.output, out);
            else if (g_x10->parsed()) emit_graph(gen_extremal_thm10(o.n), o.output, out);
            else if (g_bip->parsed()) emit_graph(gen_pc_bipartite(o.n), o.output, out);
            else if (g_rb->parsed()) emit_graph(gen_rainbow_complete(o.n), o.output, out);
            else emit_graph(gen_random(o.n, o.colors, o.seed, Completeness::probability(o.edge_prob)), o.output, out);
            return kExitOk;
        }
        if (analyze->parsed()) return run_analyze(o, out);
        if (tri->parsed()) return run_triangles(o, out);
        if (pack->parsed()) return run_pack(o, out);
        if (r10->parsed()) return run_recognize(o, out);
        if (verify->parsed()) return run_verify(o, out);
        if (search->parsed()) return run_search(o, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rainbow
