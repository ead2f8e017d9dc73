#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hlag/hypergraph.hpp"

namespace hlag {

/// Parses the text format:
///
///     # optional comment lines
///     r=3 n=5
///     1 2 3
///     3 4 5
///
/// Blank lines are ignored. Throws ParseError with line and column.
Hypergraph parse_hg(std::string_view text);

/// Canonical text form; parse_hg(format_hg(g)) == g.
std::string format_hg(const Hypergraph& g);

nlohmann::json to_json(const Hypergraph& g);
/// Accepts {"r": int, "n": int, "edges": [[int, ...], ...]}; throws ParseError.
Hypergraph hypergraph_from_json(const nlohmann::json& j);

/// Reads `.json` files (or any file whose first non-blank byte is '{') as JSON,
/// everything else as `.hg`.
Hypergraph read_hypergraph(const std::filesystem::path& path);
/// Writes JSON when the extension is `.json`, `.hg` text otherwise.
void write_hypergraph(const std::filesystem::path& path, const Hypergraph& g);

}  // namespace hlag
