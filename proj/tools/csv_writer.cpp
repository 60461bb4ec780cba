// SPDX-License-Identifier: Apache-2.0
#include "csv_writer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "risfso/errors.hpp"

namespace risfso::cli {

namespace {

// Scientific with 9 fraction digits: re-parsing loses at most 5e-10 relative.
std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.9e", value);
  return buffer;
}

void check_series(const sweep::CurveSeries& series) {
  for (const sweep::Column& column : series.columns) {
    if (column.values.size() != series.grid.size()) {
      throw std::logic_error("curve series column '" + column.label +
                             "' does not match the grid length");
    }
    for (double v : column.values) {
      if (!std::isfinite(v)) {
        throw std::logic_error("curve series column '" + column.label +
                               "' contains a non-finite value");
      }
    }
  }
}

} // namespace

std::string format_csv(const sweep::CurveSeries& series) {
  check_series(series);
  std::string text = series.variable_label;
  for (const sweep::Column& column : series.columns) {
    text += ',';
    text += column.label;
  }
  text += '\n';
  for (std::size_t i = 0; i < series.grid.size(); ++i) {
    text += format_value(series.grid[i]);
    for (const sweep::Column& column : series.columns) {
      text += ',';
      text += format_value(column.values[i]);
    }
    text += '\n';
  }
  return text;
}

void write_csv(const sweep::CurveSeries& series,
               const std::filesystem::path& path) {
  const std::string text = format_csv(series); // validate before any I/O

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open output file: " + tmp.string());
    }
    out << text;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("cannot write output file: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into place: " + path.string() + ": " +
                  ec.message());
  }
}

} // namespace risfso::cli
