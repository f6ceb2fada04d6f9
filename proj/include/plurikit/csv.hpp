#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plurikit/measure.hpp"
#include "plurikit/sample_set.hpp"

namespace plurikit {

/// 17-significant-digit decimal rendering ('%.17g', '.' decimal point).
std::string format_double(double v);

/// CSV writer with mandatory header, LF line endings, '%.17g' floats.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);
  std::size_t rows() const { return rows_; }

 private:
  std::ostream& out_;
  std::size_t columns_;
  std::size_t rows_ = 0;
};

/// One row per point: re(x1), im(x1), ..., weight.
void write_sample_set_csv(std::ostream& out, const WeightedSampleSet& set);
WeightedSampleSet read_sample_set_csv(std::istream& in);

/// One row per point: re(x1), im(x1), ..., mass.
void write_measure_csv(std::ostream& out, const DiscreteMeasure& mu);
DiscreteMeasure read_measure_csv(std::istream& in);

}  // namespace plurikit
