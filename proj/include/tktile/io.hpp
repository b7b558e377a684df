#pragma once

#include "tktile/kgraph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace tktile {

/// Text hypergraph format:
///
///     p kgraph <n> <k>
///     e <v1> ... <vk>      (0-based, strictly ascending)
///     c <anything>         (comment)
///
/// Every line, including the last, ends in '\n'. Repeated edges are an error.
auto parse_kgraph(std::string_view text) -> KGraph;
auto format_kgraph(const KGraph & h) -> std::string;

auto read_kgraph(const std::filesystem::path & path) -> KGraph;
void write_kgraph(const std::filesystem::path & path, const KGraph & h);

auto read_text_file(const std::filesystem::path & path) -> std::string;
void write_text_file(const std::filesystem::path & path, std::string_view content);

}
