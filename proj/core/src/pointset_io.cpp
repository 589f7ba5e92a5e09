#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "configeo/error.hpp"
#include "configeo/pointset.hpp"

namespace configeo {

namespace {

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto result =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), result.ptr);
}

double parse_real(std::string_view text, std::size_t line) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    fail(ErrorCode::parse, "pointset line " + std::to_string(line) + ": bad number '" +
                               std::string(text) + "'");
  }
  return value;
}

std::size_t parse_size(std::string_view text, std::size_t line) {
  std::size_t value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    fail(ErrorCode::parse, "pointset line " + std::to_string(line) + ": bad integer '" +
                               std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) break;
    const std::size_t end = line.find(' ', pos);
    const std::size_t stop = end == std::string_view::npos ? line.size() : end;
    out.push_back(line.substr(pos, stop - pos));
    pos = stop;
  }
  return out;
}

void apply_meta(PointSetMeta& meta, std::string_view body, std::size_t line) {
  const std::size_t eq = body.find('=');
  if (eq == std::string_view::npos) return;  // free-form comment
  std::string_view key = body.substr(0, eq);
  std::string_view value = body.substr(eq + 1);
  while (!key.empty() && key.front() == ' ') key.remove_prefix(1);
  while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
  while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
  while (!value.empty() && value.back() == ' ') value.remove_suffix(1);
  if (key == "generator") {
    meta.generator = std::string(value);
  } else if (key == "seed") {
    std::uint64_t seed = 0;
    const auto r = std::from_chars(value.data(), value.data() + value.size(), seed);
    if (r.ec != std::errc{} || r.ptr != value.data() + value.size()) {
      fail(ErrorCode::parse, "pointset line " + std::to_string(line) + ": bad seed");
    }
    meta.seed = seed;
  } else if (key == "nominal_dimension") {
    meta.nominal_dimension = parse_real(value, line);
  } else if (key == "separation") {
    meta.separation = parse_real(value, line);
  }
}

}  // namespace

void write_pointset(std::ostream& os, const PointSet& points) {
  os << "pointset v1 d=" << points.dim() << " n=" << points.size() << '\n';
  const PointSetMeta& meta = points.meta();
  os << "# generator=" << meta.generator << '\n';
  os << "# seed=" << meta.seed << '\n';
  if (meta.nominal_dimension) {
    os << "# nominal_dimension=" << format_real(*meta.nominal_dimension) << '\n';
  }
  if (meta.separation) os << "# separation=" << format_real(*meta.separation) << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c) os << ' ';
      os << format_real(p[c]);
    }
    os << '\n';
  }
}

std::string format_pointset(const PointSet& points) {
  std::ostringstream os;
  write_pointset(os, points);
  return os.str();
}

PointSet read_pointset(std::istream& is) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line)) fail(ErrorCode::parse, "pointset: empty input");
  const auto header = split_spaces(line);
  if (header.size() != 4 || header[0] != "pointset" || header[1] != "v1" ||
      !header[2].starts_with("d=") || !header[3].starts_with("n=")) {
    fail(ErrorCode::parse, "pointset line 1: expected 'pointset v1 d=<d> n=<n>'");
  }
  const std::size_t dim = parse_size(header[2].substr(2), line_no);
  const std::size_t n = parse_size(header[3].substr(2), line_no);
  if (dim == 0 || n == 0) fail(ErrorCode::parse, "pointset line 1: d and n must be positive");

  PointSetMeta meta;
  std::vector<double> coords;
  coords.reserve(n * dim);
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      apply_meta(meta, std::string_view(line).substr(1), line_no);
      continue;
    }
    const auto fields = split_spaces(line);
    if (fields.size() != dim) {
      fail(ErrorCode::parse, "pointset line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(dim) + " coordinates, found " +
                                 std::to_string(fields.size()));
    }
    if (rows == n) {
      fail(ErrorCode::parse, "pointset line " + std::to_string(line_no) +
                                 ": more points than the declared n=" + std::to_string(n));
    }
    for (auto field : fields) coords.push_back(parse_real(field, line_no));
    ++rows;
  }
  if (rows != n) {
    fail(ErrorCode::parse, "pointset: declared n=" + std::to_string(n) + " but read " +
                               std::to_string(rows) + " points");
  }
  try {
    return PointSet(dim, std::move(coords), std::move(meta));
  } catch (const Error& e) {
    fail(ErrorCode::parse, std::string("pointset: ") + e.what());
  }
}

PointSet parse_pointset(const std::string& text) {
  std::istringstream is(text);
  return read_pointset(is);
}

PointSet load_pointset(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open point set file '" + path + "'");
  return read_pointset(in);
}

void save_pointset(const std::string& path, const PointSet& points) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot write point set file '" + path + "'");
  write_pointset(out, points);
  if (!out) fail(ErrorCode::io, "write failed for '" + path + "'");
}

}  // namespace configeo
