#include "framelens/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "framelens/error.hpp"

namespace framelens::report {
namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 400;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 90;

constexpr const char* kPalette[] = {"#b2182b", "#2166ac", "#4d9221", "#e08214", "#762a83", "#636363"};

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

double nice_max(double v) {
  if (v <= 0) return 1.0;
  const double mag = std::pow(10.0, std::floor(std::log10(v)));
  for (double step : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (v <= step * mag) return step * mag;
  }
  return 10 * mag;
}

void frame(std::ostringstream& svg, std::string_view title, std::string_view y_label, double y_max) {
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape_xml(title) << "</text>\n";
  const double plot_h = kHeight - kTop - kBottom;
  for (int i = 0; i <= 4; ++i) {
    const double y = kTop + plot_h * (1.0 - i / 4.0);
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << fixed(y, 2) << "\" x2=\"" << kWidth - kRight
        << "\" y2=\"" << fixed(y, 2) << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << fixed(y + 4, 2) << "\" text-anchor=\"end\">"
        << fixed(y_max * i / 4.0, 2) << "</text>\n";
  }
  svg << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" transform=\"rotate(-90 16 " << kTop + plot_h / 2
      << ")\" text-anchor=\"middle\">" << escape_xml(y_label) << "</text>\n";
}

void x_label(std::ostringstream& svg, double x, std::string_view label) {
  const double y = kHeight - kBottom + 14;
  svg << "<text x=\"" << fixed(x, 2) << "\" y=\"" << y << "\" text-anchor=\"end\" transform=\"rotate(-40 "
      << fixed(x, 2) << ' ' << y << ")\">" << escape_xml(label) << "</text>\n";
}

}  // namespace

std::string fixed(double v, int decimals) {
  if (v == 0.0) v = 0.0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += csv_field(fields[i]);
  }
  out.push_back('\n');
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw Error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw Error("failed writing " + path.string());
  if (std::filesystem::file_size(path) != contents.size()) throw Error("short write to " + path.string());
}

std::string bar_chart_svg(std::string_view title, const std::vector<std::string>& labels,
                          const std::vector<double>& values, std::string_view y_label) {
  std::ostringstream svg;
  const double y_max = nice_max(values.empty() ? 0.0 : *std::max_element(values.begin(), values.end()));
  frame(svg, title, y_label, y_max);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double slot = values.empty() ? plot_w : plot_w / static_cast<double>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double h = plot_h * std::max(0.0, values[i]) / y_max;
    const double x = kLeft + slot * static_cast<double>(i) + slot * 0.15;
    svg << "<rect x=\"" << fixed(x, 2) << "\" y=\"" << fixed(kTop + plot_h - h, 2) << "\" width=\""
        << fixed(slot * 0.7, 2) << "\" height=\"" << fixed(h, 2) << "\" fill=\""
        << kPalette[i % std::size(kPalette)] << "\"/>\n";
    x_label(svg, x + slot * 0.35, i < labels.size() ? labels[i] : "");
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string line_chart_svg(std::string_view title, const std::vector<std::string>& x_labels,
                           const std::vector<Series>& series, std::string_view y_label) {
  std::ostringstream svg;
  double vmax = 0.0;
  for (const auto& s : series) {
    for (double v : s.values) vmax = std::max(vmax, v);
  }
  const double y_max = nice_max(vmax);
  frame(svg, title, y_label, y_max);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t n = x_labels.size();
  auto x_at = [&](std::size_t i) {
    return n <= 1 ? kLeft + plot_w / 2 : kLeft + plot_w * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  const std::size_t label_every = std::max<std::size_t>(1, (n + 23) / 24);
  for (std::size_t i = 0; i < n; i += label_every) x_label(svg, x_at(i), x_labels[i]);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < series[k].values.size() && i < n; ++i) {
      const double y = kTop + plot_h * (1.0 - std::max(0.0, series[k].values[i]) / y_max);
      svg << (i ? " " : "") << fixed(x_at(i), 2) << ',' << fixed(y, 2);
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << kWidth - kRight - 4 << "\" y=\"" << kTop + 14 * (k + 1)
        << "\" text-anchor=\"end\" fill=\"" << color << "\">" << escape_xml(series[k].name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace framelens::report
