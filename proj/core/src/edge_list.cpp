#include "graphframes/edge_list.hpp"

#include <charconv>
#include <utility>
#include <vector>

#include "graphframes/errors.hpp"
#include "graphframes/version.hpp"

namespace graphframes {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;
};

// Next line that is neither blank nor a comment; empty optional style via
// the bool. Trims nothing: tokens are split on whitespace later.
bool next_data_line(Cursor& cursor, std::string_view& out) {
  while (cursor.pos < cursor.text.size()) {
    std::size_t end = cursor.text.find('\n', cursor.pos);
    if (end == std::string_view::npos) end = cursor.text.size();
    std::string_view line = cursor.text.substr(cursor.pos, end - cursor.pos);
    cursor.pos = end + 1;
    ++cursor.line;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;
    out = line;
    return true;
  }
  return false;
}

std::vector<int> parse_ints(std::string_view line, std::size_t line_number) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = line.size();
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data() + start, line.data() + end, value);
    if (ec != std::errc{} || ptr != line.data() + end) {
      throw InputError("line " + std::to_string(line_number) + ": expected an integer, got '" +
                       std::string(line.substr(start, end - start)) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  return values;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Cursor cursor{text};
  std::string_view line;
  if (!next_data_line(cursor, line)) {
    throw InputError("edge list is empty: expected a vertex count line");
  }
  const std::vector<int> header = parse_ints(line, cursor.line);
  if (header.size() != 1) {
    throw InputError("line " + std::to_string(cursor.line) +
                     ": expected exactly one vertex count, got " +
                     std::to_string(header.size()) + " tokens");
  }
  const int n = header[0];
  if (n < 1) {
    throw InputError("line " + std::to_string(cursor.line) + ": vertex count must be >= 1, got " +
                     std::to_string(n));
  }

  std::vector<std::pair<int, int>> edges;
  while (next_data_line(cursor, line)) {
    const std::vector<int> pair = parse_ints(line, cursor.line);
    if (pair.size() != 2) {
      throw InputError("line " + std::to_string(cursor.line) + ": expected 'u v', got " +
                       std::to_string(pair.size()) + " tokens");
    }
    if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n) {
      throw InputError("line " + std::to_string(cursor.line) + ": edge (" +
                       std::to_string(pair[0]) + "," + std::to_string(pair[1]) +
                       ") out of range for " + std::to_string(n) + " vertices");
    }
    if (pair[0] == pair[1]) {
      throw InputError("line " + std::to_string(cursor.line) + ": loop at vertex " +
                       std::to_string(pair[0]) + " is not allowed");
    }
    edges.emplace_back(pair[0], pair[1]);
  }
  return Graph::from_edge_list(n, edges);
}

std::string write_edge_list(const Graph& g, std::span<const std::string> extra_comments) {
  std::string out = kFormatComment;
  out += '\n';
  for (const std::string& comment : extra_comments) {
    out += "# " + comment + '\n';
  }
  out += std::to_string(g.vertex_count());
  out += '\n';
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  }
  return out;
}

}  // namespace graphframes
