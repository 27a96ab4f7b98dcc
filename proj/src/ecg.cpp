#include "rainbow/ecg.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace rainbow {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw EcgError("line " + std::to_string(line) + ": " + msg, line);
}

}  // namespace

EcgDocument parse_ecg(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    // Trailing blank lines are tolerated.
    while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();

    if (lines.empty()) fail(1, "empty document");
    const auto magic = split_ws(lines[0]);
    if (magic.size() != 2 || magic[0] != "ecg") fail(1, "expected header 'ecg 1'");
    if (magic[1] != "1") fail(1, "unsupported version '" + std::string(magic[1]) + "'");

    if (lines.size() < 2) fail(2, "missing '<n> <m>' line");
    const auto counts = split_ws(lines[1]);
    int n = 0;
    long m = 0;
    if (counts.size() != 2 || !parse_number(counts[0], n) || !parse_number(counts[1], m) || m < 0)
        fail(2, "expected '<n> <m>'");
    if (n < 1 || n > kMaxOrder) fail(2, "vertex count must be in 1.." + std::to_string(kMaxOrder));
    if (m > static_cast<long>(n) * (n - 1) / 2) fail(2, "edge count exceeds n(n-1)/2");
    if (static_cast<long>(lines.size()) - 2 != m)
        fail(static_cast<int>(lines.size()) + 1, "expected " + std::to_string(m) + " edge lines, found " +
                                                     std::to_string(lines.size() - 2));

    std::vector<RawEdge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        const auto f = split_ws(lines[i]);
        int u = 0, v = 0;
        std::uint64_t c = 0;
        if (f.size() != 3 || !parse_number(f[0], u) || !parse_number(f[1], v) || !parse_number(f[2], c))
            fail(lineno, "expected '<u> <v> <color>' with nonnegative integers");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex id out of range");
        if (u == v) fail(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v) fail(lineno, "endpoints must satisfy u < v");
        edges.push_back({u, v, c});
    }

    try {
        EcgDocument doc{ColoredGraph::from_edges(n, edges), {}};
        // Dense ids follow the lexicographic edge order.
        std::vector<RawEdge> sorted = edges;
        std::sort(sorted.begin(), sorted.end(),
                  [](const RawEdge& a, const RawEdge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
        for (const RawEdge& e : sorted) {
            const Color dense = doc.graph.color(e.u, e.v);
            if (dense == static_cast<Color>(doc.color_map.size())) doc.color_map.emplace_back(e.color, dense);
        }
        return doc;
    } catch (const GraphError& err) {
        fail(err.entry() + 2, err.what());  // entries are 1-based edge lines
    }
}

std::string write_ecg(const ColoredGraph& g) {
    std::string out = "ecg 1\n" + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.color) + "\n";
    return out;
}

ColoredGraph read_ecg_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ecg(buf.str()).graph;
}

void write_ecg_file(const std::filesystem::path& path, const ColoredGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << write_ecg(g);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace rainbow
