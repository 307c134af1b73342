#include "distinv/graph6.hpp"

#include <cctype>
#include <fstream>
#include <istream>

namespace distinv {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

ParseError::ParseError(const std::string& reason, std::size_t offset, std::size_t line)
    : Error("graph6: " + (line ? "line " + std::to_string(line) + ": " : std::string()) + reason + " at byte " +
            std::to_string(offset)),
      reason_(reason),
      offset_(offset),
      line_(line) {}

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.starts_with(kHeader)) pos = kHeader.size();
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);

  if (pos >= line.size()) throw ParseError("missing size header", pos);
  auto byte = [&](std::size_t i) -> int {
    if (i >= line.size()) throw ParseError("truncated record", i);
    if (!printable(line[i])) throw ParseError("byte outside printable range 63..126", i);
    return line[i] - kBias;
  };

  int n = byte(pos);
  if (n == 63) {
    // 126 followed by three 6-bit groups; the 8-byte form is beyond our range.
    if (pos + 1 < line.size() && line[pos + 1] == 126) throw ParseError("graph too large", pos + 1);
    n = (byte(pos + 1) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
    pos += 4;
  } else {
    pos += 1;
  }
  if (n < 1) throw ParseError("graph must have at least one vertex", pos - 1);
  if (n > kMaxVertices) throw ParseError("graph order " + std::to_string(n) + " exceeds 64", pos - 1);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t nbytes = (bits + 5) / 6;
  if (line.size() < pos + nbytes) throw ParseError("truncated bit data", line.size());
  if (line.size() > pos + nbytes) throw ParseError("trailing garbage", pos + nbytes);

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (k % 6 != 0) {
    const int last = byte(pos + k / 6);
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("nonzero padding bits", pos + k / 6);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::string_view view(line);
    if (view.starts_with(kHeader)) view.remove_prefix(kHeader.size());
    if (view.empty()) continue;
    try {
      out.push_back(parse_graph6(view));
    } catch (const ParseError& e) {
      throw ParseError(e.reason(), e.offset(), lineno);
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph6(in);
}

}  // namespace distinv
