#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Text format:
///
///     ecg 1
///     <n> <m>
///     <u> <v> <color>      (m lines, 0 <= u < v < n)
///
/// Colors are arbitrary nonnegative integers and are densified on parse.
struct EcgDocument {
    ColoredGraph graph;
    std::vector<std::pair<std::uint64_t, Color>> color_map;  // original -> dense, by dense id
};

/// Parse failure; line() is the 1-based line number in the text.
class EcgError : public std::runtime_error {
public:
    EcgError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

EcgDocument parse_ecg(std::string_view text);
std::string write_ecg(const ColoredGraph& g);

ColoredGraph read_ecg_file(const std::filesystem::path& path);
void write_ecg_file(const std::filesystem::path& path, const ColoredGraph& g);

}  // namespace rainbow
