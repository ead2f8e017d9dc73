#include "hlag/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "hlag/error.hpp"

namespace hlag {

namespace {

struct Cursor {
  std::string_view line;
  std::size_t line_no;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= line.size();
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_no, pos + 1); }

  std::uint64_t integer() {
    skip_space();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + pos) fail("expected a nonnegative integer");
    pos = static_cast<std::size_t>(ptr - line.data());
    return value;
  }

  void expect(std::string_view token) {
    skip_space();
    if (line.substr(pos, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos += token.size();
  }
};

}  // namespace

Hypergraph parse_hg(std::string_view text) {
  bool have_header = false;
  std::uint64_t r = 0;
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    Cursor cur{text.substr(start, end - start), ++line_no};
    start = end + 1;
    if (cur.at_end()) continue;
    if (cur.line[cur.pos] == '#') continue;
    if (!have_header) {
      cur.expect("r=");
      r = cur.integer();
      cur.expect("n=");
      n = cur.integer();
      if (!cur.at_end()) cur.fail("unexpected text after header");
      if (r < 1 || r > kMaxUniformity) throw ParseError("uniformity out of range", line_no, 1);
      if (n > 1'000'000) throw ParseError("vertex count too large", line_no, 1);
      have_header = true;
      continue;
    }
    std::vector<Vertex> ids;
    while (!cur.at_end()) {
      std::size_t col = cur.pos + 1;
      std::uint64_t v = cur.integer();
      if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]", line_no, col);
      ids.push_back(static_cast<Vertex>(v));
    }
    if (ids.size() != r) {
      throw ParseError("edge has " + std::to_string(ids.size()) + " vertices, expected " + std::to_string(r), line_no, 1);
    }
    try {
      edges.emplace_back(std::span<const Vertex>(ids));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  if (!have_header) throw ParseError("missing header 'r=<int> n=<int>'", line_no, 1);
  return Hypergraph(static_cast<int>(r), static_cast<Vertex>(n), std::move(edges));
}

std::string format_hg(const Hypergraph& g) {
  std::ostringstream os;
  os << "r=" << g.uniformity() << " n=" << g.order() << '\n';
  for (const Edge& e : g.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? " " : "") << e[k];
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const Hypergraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
  return {{"r", g.uniformity()}, {"n", g.order()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("r") || !j.contains("n") || !j.contains("edges")) {
      throw ParseError("hypergraph JSON needs fields r, n, edges", 0, 0);
    }
    const int r = j.at("r").get<int>();
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0) throw ParseError("n must be nonnegative", 0, 0);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      auto ids = e.get<std::vector<std::int64_t>>();
      std::vector<Vertex> vs;
      for (auto v : ids) {
        if (v < 1) throw ParseError("vertex ids are 1-based", 0, 0);
        vs.push_back(static_cast<Vertex>(v));
      }
      edges.emplace_back(std::span<const Vertex>(vs));
    }
    return Hypergraph(r, static_cast<Vertex>(n), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad hypergraph JSON: ") + e.what(), 0, 0);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (path.extension() == ".json" || (first != std::string::npos && text[first] == '{')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), 0, e.byte);
    }
    return hypergraph_from_json(j);
  }
  return parse_hg(text);
}

void write_hypergraph(const std::filesystem::path& path, const Hypergraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  if (path.extension() == ".json") {
    out << to_json(g).dump(2) << '\n';
  } else {
    out << format_hg(g);
  }
}

}  // namespace hlag
