// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "csv_writer.hpp"
#include "doctest.h"
#include "risfso/errors.hpp"

using namespace risfso;

namespace {

sweep::CurveSeries small_series() {
  sweep::CurveSeries series;
  series.variable_label = "distance_ratio";
  series.grid = {1.0, 2.0, 3.0};
  series.columns.push_back({"T=0.8", {11.0, 12.5, 13.75}});
  series.scenario_digest = "0123456789abcdef";
  return series;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream stream(text);
  while (std::getline(stream, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::filesystem::path fresh_dir(const char* name) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

bool matches_value_format(const std::string& field) {
  // -?d.dddddddddE[sign]dd...
  std::size_t pos = 0;
  if (pos < field.size() && field[pos] == '-') {
    ++pos;
  }
  if (pos >= field.size() || !std::isdigit(static_cast<unsigned char>(field[pos]))) {
    return false;
  }
  ++pos;
  if (pos >= field.size() || field[pos] != '.') {
    return false;
  }
  ++pos;
  int fraction_digits = 0;
  while (pos < field.size() &&
         std::isdigit(static_cast<unsigned char>(field[pos]))) {
    ++pos;
    ++fraction_digits;
  }
  if (fraction_digits != 9) {
    return false;
  }
  if (pos >= field.size() || field[pos] != 'e') {
    return false;
  }
  ++pos;
  if (pos >= field.size() || (field[pos] != '+' && field[pos] != '-')) {
    return false;
  }
  ++pos;
  return pos < field.size();
}

} // namespace

TEST_CASE("format_csv emits header plus one row per grid point") {
  const std::string text = cli::format_csv(small_series());
  const std::vector<std::string> lines = split_lines(text);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "distance_ratio,T=0.8");
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find(' ') == std::string::npos);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string field;
    while (std::getline(row, field, ',')) {
      CHECK(matches_value_format(field));
    }
  }
}

TEST_CASE("printed values re-parse within 1e-9 relative") {
  const sweep::CurveSeries series = small_series();
  const std::vector<std::string> lines = split_lines(cli::format_csv(series));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string field;
    std::getline(row, field, ',');
    CHECK(std::fabs(std::strtod(field.c_str(), nullptr) - series.grid[i - 1]) <=
          1e-9 * std::fabs(series.grid[i - 1]));
    std::getline(row, field, ',');
    const double expected = series.columns[0].values[i - 1];
    CHECK(std::fabs(std::strtod(field.c_str(), nullptr) - expected) <=
          1e-9 * std::fabs(expected));
  }
}

TEST_CASE("write_csv produces byte-identical files across runs") {
  const std::filesystem::path dir = fresh_dir("csv_writer_determinism");
  const sweep::CurveSeries series = small_series();
  cli::write_csv(series, dir / "a.csv");
  cli::write_csv(series, dir / "b.csv");
  CHECK(read_file(dir / "a.csv") == read_file(dir / "b.csv"));
  CHECK(!std::filesystem::exists(dir / "a.csv.tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("invalid series never reach the filesystem") {
  const std::filesystem::path dir = fresh_dir("csv_writer_invalid");

  sweep::CurveSeries mismatched = small_series();
  mismatched.columns[0].values.pop_back();
  CHECK_THROWS_AS(cli::write_csv(mismatched, dir / "bad.csv"),
                  std::logic_error);
  CHECK(!std::filesystem::exists(dir / "bad.csv"));

  sweep::CurveSeries nonfinite = small_series();
  nonfinite.columns[0].values[1] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(cli::write_csv(nonfinite, dir / "bad.csv"), std::logic_error);
  CHECK(!std::filesystem::exists(dir / "bad.csv"));
  CHECK(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable destinations raise an I/O error naming the path") {
  const std::filesystem::path target = "/nonexistent_dir/curves.csv";
  CHECK_THROWS_WITH_AS(cli::write_csv(small_series(), target),
                       doctest::Contains("curves.csv"), IoError);
  CHECK(!std::filesystem::exists(target));
}
