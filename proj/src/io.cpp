#include "gasket/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <system_error>

namespace gasket {

namespace fs = std::filesystem;

std::string format_g12(double x) {
  if (x == 0.0) x = 0.0;  // print negative zero as "0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double parse_double(const std::string& text) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
    throw io_error("cannot parse number '" + text + "'");
  return v;
}

void write_text_atomic(const fs::path& path, std::string_view content) {
  std::error_code ec;
  const fs::path dir = path.parent_path();
  if (!dir.empty()) {
    fs::create_directories(dir, ec);
    if (ec)
      throw io_error("cannot create output directory " + dir.string() + ": " +
                     ec.message());
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw io_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out)
      throw io_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw io_error("cannot move " + tmp.string() + " into place at " +
                   path.string());
  }
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw io_error("cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw io_error("failed reading " + path.string());
  return buf.str();
}

std::vector<std::vector<std::string>> parse_csv_text(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (;;) {
      const std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string circles_to_csv(const CircleSet& set) {
  std::string out = "k,re,im,r\n";
  for (const Circle& c : set.circles) {
    const Complex z = c.center();
    out += format_g12(c.k);
    out += ',';
    out += format_g12(z.real());
    out += ',';
    out += format_g12(z.imag());
    out += ',';
    out += format_g12(c.radius());
    out += '\n';
  }
  return out;
}

std::string series_to_csv(const StatSeries& series) {
  std::string out = "s,value\n";
  for (std::size_t i = 0; i < series.s_grid.size(); ++i) {
    out += format_g12(series.s_grid[i]);
    out += ',';
    out += format_g12(series.values[i]);
    out += '\n';
  }
  return out;
}

}  // namespace gasket
