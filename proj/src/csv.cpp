#include "plurikit/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "plurikit/errors.hpp"

namespace plurikit {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw input_error("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  ++rows_;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw input_error("csv: trailing characters in number '" + s + "'");
    return v;
  } catch (const std::exception&) {
    throw input_error("csv: cannot parse number '" + s + "'");
  }
}

struct PointTable {
  int dim;
  std::vector<PointC> points;
  std::vector<double> values;
};

PointTable read_point_table(std::istream& in, const char* value_name) {
  std::string line;
  if (!std::getline(in, line)) throw input_error("csv: missing header row");
  const auto header = split_line(line);
  if (header.size() < 3 || (header.size() - 1) % 2 != 0)
    throw input_error("csv: header must be re(x1),im(x1),...,value");
  if (header.back() != value_name)
    throw input_error(std::string("csv: last column must be '") + value_name + "'");
  const int dim = static_cast<int>((header.size() - 1) / 2);

  PointTable t;
  t.dim = dim;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size()) throw input_error("csv: ragged row");
    PointC p(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j)
      p[static_cast<std::size_t>(j)] = Complex(parse_double(cells[static_cast<std::size_t>(2 * j)]),
                                               parse_double(cells[static_cast<std::size_t>(2 * j + 1)]));
    t.points.push_back(std::move(p));
    t.values.push_back(parse_double(cells.back()));
  }
  return t;
}

std::vector<std::string> point_header(int dim, const char* value_name) {
  std::vector<std::string> h;
  for (int j = 1; j <= dim; ++j) {
    h.push_back("re(x" + std::to_string(j) + ")");
    h.push_back("im(x" + std::to_string(j) + ")");
  }
  h.push_back(value_name);
  return h;
}

void write_point_table(std::ostream& out, const std::vector<PointC>& points,
                       const std::vector<double>& values, int dim, const char* value_name) {
  CsvWriter w(out, point_header(dim, value_name));
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<std::string> cells;
    for (int j = 0; j < dim; ++j) {
      cells.push_back(format_double(points[i][static_cast<std::size_t>(j)].real()));
      cells.push_back(format_double(points[i][static_cast<std::size_t>(j)].imag()));
    }
    cells.push_back(format_double(values[i]));
    w.row(cells);
  }
}

}  // namespace

void write_sample_set_csv(std::ostream& out, const WeightedSampleSet& set) {
  write_point_table(out, set.points, set.weights, set.dim, "weight");
}

WeightedSampleSet read_sample_set_csv(std::istream& in) {
  PointTable t = read_point_table(in, "weight");
  return WeightedSampleSet::create(t.dim, std::move(t.points), std::move(t.values));
}

void write_measure_csv(std::ostream& out, const DiscreteMeasure& mu) {
  write_point_table(out, mu.points, mu.masses, mu.dim, "mass");
}

DiscreteMeasure read_measure_csv(std::istream& in) {
  PointTable t = read_point_table(in, "mass");
  return DiscreteMeasure::create(t.dim, std::move(t.points), std::move(t.values));
}

}  // namespace plurikit
