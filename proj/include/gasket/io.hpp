#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gasket/enumerate.hpp"
#include "gasket/statistics.hpp"

namespace gasket {

// %.12g: enough digits that a parsed-back value reprints identically,
// short enough to keep files readable
std::string format_g12(double x);

// strict full-string parse; throws io_error on garbage
double parse_double(const std::string& text);

// write via sibling temp file + atomic rename; creates parent directories;
// all failures surface as io_error carrying the path
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_text(const std::filesystem::path& path);

// minimal CSV splitter for our own numeric files (no quoting)
std::vector<std::vector<std::string>> parse_csv_text(const std::string& text);

// header k,re,im,r; one row per circle in canonical set order
std::string circles_to_csv(const CircleSet& set);

// header s,value
std::string series_to_csv(const StatSeries& series);

}  // namespace gasket
