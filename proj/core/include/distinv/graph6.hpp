#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "distinv/graph.hpp"

namespace distinv {

/// Malformed graph6 input. offset() is the byte position of the problem
/// within the record; line() is the 1-based input line, 0 for a lone record.
class ParseError : public Error {
 public:
  ParseError(const std::string& reason, std::size_t offset, std::size_t line = 0);
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
  std::size_t line_;
};

/// Decodes one graph6 record (no trailing newline). Accepts an optional
/// ">>graph6<<" prefix.
Graph parse_graph6(std::string_view line);

std::string write_graph6(const Graph& g);

/// Reads one record per line; blank or whitespace-only lines are skipped and a leading
/// ">>graph6<<" header is stripped.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace distinv
