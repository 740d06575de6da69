#include "ackkit/graph.hpp"

#include <fstream>
#include <sstream>

namespace ackkit {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kMaxGraph6Order = 258047;

int graph6_value(char c, std::size_t offset) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126)
    throw ParseError("graph6: byte " + std::to_string(v) + " outside 63..126 at offset " + std::to_string(offset),
                     offset);
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  // N(n): one byte for n <= 62, else 126 followed by three 6-bit groups.
  int n = 0;
  if (text[pos] == 126) {
    if (pos + 1 < text.size() && text[pos + 1] == 126)
      throw ParseError("graph6: orders above 258047 are not supported", pos);
    if (pos + 4 > text.size()) throw ParseError("graph6: truncated long-form order", text.size());
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | graph6_value(text[pos + k], pos + k);
    if (n < 63) throw ParseError("graph6: long-form order " + std::to_string(n) + " should use short form", pos);
    pos += 4;
  } else {
    n = graph6_value(text[pos], pos);
    pos += 1;
  }
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex", pos - 1);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for n = " + std::to_string(n) +
                         ", found " + std::to_string(text.size() - pos),
                     std::min(text.size(), pos + expected));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t offset = pos + bit / 6;
      const int value = graph6_value(text[offset], offset);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i + 1, j + 1);
    }
  if (bits % 6 != 0) {
    const std::size_t offset = pos + expected - 1;
    const int value = graph6_value(text[offset], offset);
    if (value & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", offset);
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw GraphError("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<int> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;

    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("edge list line " + std::to_string(line_no) + ": " + msg, line_no);
    };
    auto parse_int = [&](const std::string& token) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw fail("expected an integer, got '" + token + "'");
      }
      if (used != token.size()) throw fail("expected an integer, got '" + token + "'");
      return value;
    };

    if (!n) {
      std::string count;
      if (first != "n" || !(fields >> count)) throw fail("expected header 'n <count>'");
      n = parse_int(count);
      if (*n < 1) throw fail("vertex count must be positive");
    } else {
      std::string second;
      if (!(fields >> second)) throw fail("expected two vertex labels");
      const int a = parse_int(first);
      const int b = parse_int(second);
      if (a < 1 || a > *n || b < 1 || b > *n)
        throw fail("vertex out of range in edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
      if (a == b) throw fail("self-loop on vertex " + std::to_string(a));
      edges.emplace_back(a, b);
    }
    std::string extra;
    if (fields >> extra) throw fail("unexpected trailing token '" + extra + "'");
  }
  if (!n) throw ParseError("edge list: missing 'n <count>' header", line_no);
  return Graph::from_edges(*n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [a, b] : g.edges()) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto ext = path.extension();
  try {
    if (ext == ".g6" || ext == ".graph6") return parse_graph6(buffer.str());
    return parse_edge_list(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.position());
  }
}

}  // namespace ackkit
