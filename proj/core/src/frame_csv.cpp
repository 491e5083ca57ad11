#include "graphframes/frame_csv.hpp"

#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

#include "graphframes/errors.hpp"
#include "graphframes/version.hpp"

namespace graphframes {

namespace {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string rows_to_csv(const std::vector<std::vector<double>>& rows) {
  std::string out = kFormatComment;
  out += '\n';
  for (const std::vector<double>& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += format_double(row[j]);
    }
    out += '\n';
  }
  return out;
}

double parse_double(std::string_view token, std::size_t line_number) {
  // Trim surrounding whitespace; from_chars wants the bare number.
  const std::size_t first = token.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    throw InputError("line " + std::to_string(line_number) + ": empty cell");
  }
  const std::size_t last = token.find_last_not_of(" \t\r");
  token = token.substr(first, last - first + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_number) + ": expected a number, got '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<std::vector<double>> csv_to_rows(std::string_view text, const char* what) {
  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  std::size_t line_number = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;

    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;

    std::vector<double> row;
    std::size_t cell = 0;
    while (true) {
      std::size_t comma = line.find(',', cell);
      if (comma == std::string_view::npos) comma = line.size();
      row.push_back(parse_double(line.substr(cell, comma - cell), line_number));
      if (comma == line.size()) break;
      cell = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("line " + std::to_string(line_number) + ": row has " +
                       std::to_string(row.size()) + " cells, earlier rows have " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw InputError(std::string(what) + " file has no data rows");
  }
  return rows;
}

}  // namespace

std::string frame_to_csv(const Frame& f) { return rows_to_csv(f.vectors()); }

Frame frame_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows = csv_to_rows(text, "frame");
  const std::size_t dim = rows.front().size();
  return Frame(dim, std::move(rows));
}

std::string shifts_to_csv(const DualSpec& spec) { return rows_to_csv(spec.shifts); }

DualSpec shifts_from_csv(std::string_view text) {
  return DualSpec{csv_to_rows(text, "shifts")};
}

std::string matrix_to_csv(const Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows_to_csv(rows);
}

}  // namespace graphframes
