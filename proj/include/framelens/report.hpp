#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace framelens::report {

// Fixed-point formatting independent of the global locale.
std::string fixed(double v, int decimals = 6);

// RFC 4180 quoting: fields containing a comma, quote or newline are quoted.
std::string csv_field(std::string_view s);
std::string csv_row(const std::vector<std::string>& fields);

// Writes `contents` to `path`, creating parent directories. Throws
// framelens::Error if the file cannot be written completely.
void write_file(const std::filesystem::path& path, std::string_view contents);

struct Series {
  std::string name;
  std::vector<double> values;
};

// Static SVG charts for the plot-data files. Output is a pure function of
// the inputs.
std::string bar_chart_svg(std::string_view title, const std::vector<std::string>& labels,
                          const std::vector<double>& values, std::string_view y_label);
std::string line_chart_svg(std::string_view title, const std::vector<std::string>& x_labels,
                           const std::vector<Series>& series, std::string_view y_label);

}  // namespace framelens::report
