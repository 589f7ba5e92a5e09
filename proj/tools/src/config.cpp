#include "configeo/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "configeo/error.hpp"

namespace configeo::cli {

const std::set<std::string>& config_keys() {
  static const std::set<std::string> keys = {
      "command", "seed", "out", "threads", "algorithm", "timing",
      "generator.kind", "generator.dim", "generator.side", "generator.ratio",
      "generator.level", "generator.count", "generator.offset", "generator.path",
      "generator.budget",
      "query.family", "query.k", "query.t", "query.delta", "query.convention",
      "energy.s", "energy.constant",
      "scan.sizes", "scan.s", "scan.fixed_target", "scan.predicted",
      "scan.check_adaptability", "scan.adaptability_constant",
      "ft.measure", "ft.dim", "ft.radius_x", "ft.radius_y", "ft.mutual", "ft.target",
      "ft.cutoff", "ft.direction", "ft.radii", "ft.r_min", "ft.r_max", "ft.step",
      "ft.method", "ft.epsilon", "ft.samples", "ft.streams", "ft.bins_per_decade",
      "ft.min_bin_width", "ft.floor",
      "curvature.check", "curvature.field", "curvature.dim", "curvature.h",
      "curvature.tolerance", "curvature.xi", "curvature.eta", "curvature.on_plane",
      "dim.source", "dim.scales", "dim.t", "dim.delta",
  };
  return keys;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

// Typed access with diagnostics naming the field and where it was set.
class Reader {
 public:
  explicit Reader(const KeyValues& kv) : kv_(kv) {}

  [[noreturn]] void bad(const std::string& key, const std::string& what) const {
    const auto* e = kv_.find(key);
    std::string where = e ? " (" + e->origin + ")" : "";
    fail(ErrorCode::parse, "field '" + key + "'" + where + ": " + what);
  }

  bool has(const std::string& key) const { return kv_.contains(key); }

  std::string text(const std::string& key) const {
    const auto v = kv_.get(key);
    if (!v || v->empty()) bad(key, "missing required value");
    return *v;
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    return has(key) ? text(key) : fallback;
  }

  double number(const std::string& key) const { return to_double(key, text(key)); }
  double number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }
  std::optional<double> maybe_number(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  std::uint64_t integer(const std::string& key) const { return to_u64(key, text(key)); }
  std::uint64_t integer(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  bool flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = text(key);
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    bad(key, "expected true or false, got '" + v + "'");
  }

  std::vector<double> numbers(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : split_list(text(key))) out.push_back(to_double(key, item));
    if (out.empty()) bad(key, "expected a non-empty list");
    return out;
  }

  std::vector<std::size_t> integers(const std::string& key) const {
    std::vector<std::size_t> out;
    for (const auto& item : split_list(text(key))) {
      out.push_back(static_cast<std::size_t>(to_u64(key, item)));
    }
    if (out.empty()) bad(key, "expected a non-empty list");
    return out;
  }

  template <class F>
  auto choice(const std::string& key, const std::string& fallback, F&& convert) const {
    if (fallback.empty() && !has(key)) bad(key, "missing required value");
    const std::string v = text(key, fallback);
    try {
      return convert(v);
    } catch (const Error& e) {
      bad(key, e.what());
    }
  }

  double to_double(const std::string& key, const std::string& item) const {
    // Angles may be written as pi, pi/N or N*pi.
    if (item == "pi") return std::numbers::pi;
    if (item.rfind("pi/", 0) == 0) return std::numbers::pi / to_double(key, item.substr(3));
    if (item.size() > 3 && item.ends_with("*pi")) {
      return to_double(key, item.substr(0, item.size() - 3)) * std::numbers::pi;
    }
    double v = 0.0;
    const char* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
      bad(key, "expected a number, got '" + item + "'");
    }
    return v;
  }

  std::uint64_t to_u64(const std::string& key, const std::string& item) const {
    std::uint64_t v = 0;
    const char* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      bad(key, "expected a nonnegative integer, got '" + item + "'");
    }
    return v;
  }

 private:
  const KeyValues& kv_;
};

void parse_generator(const Reader& r, ExperimentConfig& c, bool sized) {
  auto& g = c.generator;
  const std::string fallback = r.has("generator.path") ? "from_file" : "";
  g.kind = r.choice("generator.kind", fallback, pointgen::kind_from_string);
  g.seed = c.seed;
  g.budget = r.integer("generator.budget", kDefaultPointBudget);
  if (g.kind == pointgen::Kind::from_file) {
    g.path = r.text("generator.path");
    return;
  }
  g.dim = r.integer("generator.dim");
  switch (g.kind) {
    case pointgen::Kind::lattice:
      if (sized) g.side = r.integer("generator.side");
      break;
    case pointgen::Kind::cantor_product:
      g.ratio = r.number("generator.ratio", g.ratio);
      if (sized) g.level = r.integer("generator.level");
      break;
    case pointgen::Kind::coplanar:
      g.offset = r.number("generator.offset", g.offset);
      [[fallthrough]];
    case pointgen::Kind::uniform_random:
    case pointgen::Kind::homogeneous:
      if (sized) g.count = r.integer("generator.count");
      break;
    case pointgen::Kind::from_file:
      break;
  }
  try {
    if (sized) g.validate();
  } catch (const Error& e) {
    r.bad("generator.kind", e.what());
  }
}

void parse_query(const Reader& r, ExperimentConfig& c, bool need_t, bool need_delta) {
  auto& q = c.query;
  q.family = r.choice("query.family", "", count::family_from_string);
  if (q.family == count::Family::custom) {
    r.bad("query.family", "custom families are available through the library only");
  }
  std::size_t k_default = 0;
  switch (q.family) {
    case count::Family::simplex: break;
    case count::Family::volume:
      k_default = c.generator.kind == pointgen::Kind::from_file ? 0 : c.generator.dim;
      break;
    default: k_default = 2;
  }
  q.k = k_default == 0 ? r.integer("query.k") : r.integer("query.k", k_default);
  if (q.k == 0) r.bad("query.k", "k must be at least 1");
  const auto conv_default = q.family == count::Family::area2 ? "simplex" : "bare_determinant";
  q.convention = r.choice("query.convention", conv_default, count::convention_from_string);
  if (need_t || r.has("query.t")) {
    q.t = r.numbers("query.t");
    const std::size_t want = q.family == count::Family::simplex ? q.k * (q.k + 1) / 2 : 1;
    if (q.family == count::Family::simplex && q.t.size() == 1 && want > 1) {
      q.t.assign(want, q.t[0]);
    }
    if (q.t.size() != want) {
      r.bad("query.t", "expected " + std::to_string(want) + " value(s), got " +
                           std::to_string(q.t.size()));
    }
  }
  if (need_delta) {
    q.delta = r.number("query.delta");
    const bool zero_ok = q.family == count::Family::volume || q.family == count::Family::area2;
    if (q.delta < 0.0 || (q.delta == 0.0 && !zero_ok)) r.bad("query.delta", "must be positive");
  }
}

std::vector<double> default_direction(const fourier::MeasureSpec& m) {
  const std::size_t width = m.block_count() * m.dim;
  std::vector<double> dir(width, 0.0);
  if (m.kind == fourier::MeasureKind::triangle2d ||
      m.kind == fourier::MeasureKind::chain_spheres) {
    // (e_1, -e_1) / sqrt 2: the difference direction.
    dir[0] = std::sqrt(0.5);
    dir[m.dim] = -std::sqrt(0.5);
  } else {
    dir[0] = 1.0;
  }
  return dir;
}

void parse_ft(const Reader& r, ExperimentConfig& c) {
  auto& f = c.ft;
  auto& m = f.measure;
  m.kind = r.choice("ft.measure", "", fourier::measure_kind_from_string);
  switch (m.kind) {
    case fourier::MeasureKind::sphere:
    case fourier::MeasureKind::chain_spheres:
      m.dim = r.integer("ft.dim", 3);
      break;
    case fourier::MeasureKind::triangle2d:
      m.dim = 2;
      break;
    case fourier::MeasureKind::determinant_variety:
      m.dim = 3;
      break;
  }
  m.radius_x = r.number("ft.radius_x", m.radius_x);
  m.radius_y = r.number("ft.radius_y", m.radius_y);
  m.mutual = r.number("ft.mutual", m.mutual);
  m.target = r.number("ft.target", m.target);
  m.cutoff_radius = r.number("ft.cutoff", m.cutoff_radius);
  try {
    m.validate();
  } catch (const Error& e) {
    r.bad("ft.measure", e.what());
  }

  f.method = r.choice("ft.method",
                      m.kind == fourier::MeasureKind::sphere ||
                              m.kind == fourier::MeasureKind::triangle2d
                          ? "closed"
                          : "montecarlo",
                      [](const std::string& v) {
                        if (v == "closed") return FtMethod::closed;
                        if (v == "montecarlo" || v == "mc") return FtMethod::montecarlo;
                        fail(ErrorCode::invalid_argument, "unknown method '" + v + "'");
                      });
  if (f.method == FtMethod::closed && m.kind != fourier::MeasureKind::sphere &&
      m.kind != fourier::MeasureKind::triangle2d) {
    r.bad("ft.method", "no closed form for this measure; use montecarlo");
  }

  f.direction = r.has("ft.direction") ? r.numbers("ft.direction") : default_direction(m);
  if (f.direction.size() != m.block_count() * m.dim) {
    r.bad("ft.direction", "expected " + std::to_string(m.block_count() * m.dim) + " values");
  }
  double norm = 0.0;
  for (double v : f.direction) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) r.bad("ft.direction", "direction must be nonzero");
  for (double& v : f.direction) v /= norm;

  if (r.has("ft.radii")) {
    f.radii = r.numbers("ft.radii");
  } else {
    const double lo = r.number("ft.r_min");
    const double hi = r.number("ft.r_max");
    const double step = r.number("ft.step", f.method == FtMethod::closed ? 0.01 : 0.05);
    if (!(lo > 0.0 && hi > lo)) r.bad("ft.r_max", "need 0 < r_min < r_max");
    if (!(step > 0.0)) r.bad("ft.step", "must be positive");
    const double count = std::floor((hi - lo) / step + 1e-9) + 1.0;
    if (count > 1e7) r.bad("ft.step", "more than 10^7 radii");
    f.r_min = lo;
    f.r_max = hi;
    f.step = step;
    f.radii = fourier::linear_radii(lo, lo + step * (count - 1.0),
                                    static_cast<std::size_t>(count));
  }

  f.mc.epsilon = r.number("ft.epsilon", f.mc.epsilon);
  f.mc.samples = r.integer("ft.samples", f.mc.samples);
  f.mc.streams = r.integer("ft.streams", f.mc.streams);
  f.mc.seed = c.seed;
  if (f.method == FtMethod::montecarlo) {
    if (!(f.mc.epsilon > 0.0 && f.mc.epsilon <= 0.2)) r.bad("ft.epsilon", "must lie in (0, 0.2]");
    if (f.mc.samples < 10'000) r.bad("ft.samples", "need at least 10^4 samples");
    if (f.mc.streams < 1) r.bad("ft.streams", "need at least one stream");
  }
  f.fit.bins_per_decade = r.integer("ft.bins_per_decade", f.fit.bins_per_decade);
  f.fit.min_bin_width = r.number("ft.min_bin_width", f.fit.min_bin_width);
  f.fit.floor = r.number("ft.floor", f.fit.floor);
  if (f.fit.bins_per_decade < 1) r.bad("ft.bins_per_decade", "must be positive");
}

void parse_curvature(const Reader& r, ExperimentConfig& c) {
  auto& k = c.curvature;
  k.check = r.choice("curvature.check", "level_set", [](const std::string& v) {
    if (v == "level_set") return CurvatureCheck::level_set;
    if (v == "circulant") return CurvatureCheck::circulant;
    if (v == "phase_hessian") return CurvatureCheck::phase_hessian;
    fail(ErrorCode::invalid_argument, "unknown check '" + v + "'");
  });
  k.dim = r.integer("curvature.dim", k.dim);
  k.tolerance = r.number("curvature.tolerance", k.tolerance);
  switch (k.check) {
    case CurvatureCheck::level_set:
      k.field = r.text("curvature.field", k.field);
      k.h = r.number("curvature.h", k.h);
      if (!(k.h > 0.0)) r.bad("curvature.h", "must be positive");
      try {
        (void)fourier::level_set_example(k.field, k.dim);
      } catch (const Error& e) {
        r.bad("curvature.field", e.what());
      }
      break;
    case CurvatureCheck::circulant:
      if (k.dim < 2) r.bad("curvature.dim", "circulant check needs d >= 2");
      break;
    case CurvatureCheck::phase_hessian:
      if (k.dim < 3) r.bad("curvature.dim", "phase_hessian needs d >= 3");
      k.eta = r.numbers("curvature.eta");
      if (k.eta.size() != k.dim) r.bad("curvature.eta", "expected d values");
      k.on_plane = r.flag("curvature.on_plane", false);
      if (r.has("curvature.xi")) {
        k.xi = r.numbers("curvature.xi");
        if (k.xi.size() != k.dim) r.bad("curvature.xi", "expected d values");
      } else if (k.on_plane) {
        k.xi.assign(k.dim, 0.0);
      } else {
        r.bad("curvature.xi", "missing required value");
      }
      if (k.on_plane) k.xi.back() = fourier::plane_xi_d(k.eta.front(), k.eta.back());
      break;
  }
}

void parse_dim(const Reader& r, ExperimentConfig& c) {
  auto& d = c.dim;
  d.source = r.choice("dim.source", "points", [](const std::string& v) {
    if (v == "points") return DimSource::points;
    if (v == "solution_set") return DimSource::solution_set;
    fail(ErrorCode::invalid_argument, "unknown source '" + v + "'");
  });
  d.scales = r.has("dim.scales") ? r.numbers("dim.scales")
                                 : std::vector<double>{0.25, 0.125, 0.0625, 0.03125};
  for (double s : d.scales) {
    if (!(s > 0.0 && s < 1.0)) r.bad("dim.scales", "scales must lie in (0, 1)");
  }
  if (d.scales.size() < 3) r.bad("dim.scales", "need at least three scales");
  if (d.source == DimSource::solution_set) {
    if (c.generator.kind == pointgen::Kind::from_file) {
      r.bad("generator.kind", "solution sets need a parametric generator");
    }
    d.t = r.has("dim.t") ? r.numbers("dim.t") : std::vector<double>(c.generator.dim, 0.0);
    if (d.t.size() != c.generator.dim) r.bad("dim.t", "expected generator.dim values");
    d.delta = r.number("dim.delta", d.delta);
    if (!(d.delta > 0.0)) r.bad("dim.delta", "must be positive");
  }
}

}  // namespace

const char* to_string(Command command) noexcept {
  switch (command) {
    case Command::gen: return "gen";
    case Command::energy: return "energy";
    case Command::count: return "count";
    case Command::scan: return "scan";
    case Command::ft: return "ft";
    case Command::curvature: return "curvature";
    case Command::dim: return "dim";
  }
  return "unknown";
}

Command command_from_string(const std::string& name) {
  for (auto c : {Command::gen, Command::energy, Command::count, Command::scan, Command::ft,
                 Command::curvature, Command::dim}) {
    if (name == to_string(c)) return c;
  }
  fail(ErrorCode::invalid_argument, "unknown command '" + name + "'");
}

KeyValues KeyValues::parse(std::string_view text, const std::string& source) {
  KeyValues kv;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto hash = raw.find('#');
    const std::string line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(ErrorCode::parse, where + ": unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!valid_name(section)) fail(ErrorCode::parse, where + ": bad section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::parse, where + ": expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (!valid_name(key)) fail(ErrorCode::parse, where + ": bad key '" + key + "'");
    const std::string full = section.empty() ? key : section + "." + key;
    if (!config_keys().contains(full)) {
      fail(ErrorCode::parse, where + ": unknown field '" + full + "'");
    }
    kv.set(full, trim(std::string_view(line).substr(eq + 1)), where);
  }
  return kv;
}

KeyValues KeyValues::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void KeyValues::set(const std::string& key, std::string value, std::string origin) {
  if (!config_keys().contains(key)) {
    fail(ErrorCode::parse, origin + ": unknown field '" + key + "'");
  }
  entries_[key] = Entry{std::move(value), std::move(origin)};
}

void KeyValues::set_assignment(const std::string& assignment, std::string origin) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    fail(ErrorCode::parse, origin + ": expected section.key=value, got '" + assignment + "'");
  }
  set(trim(std::string_view(assignment).substr(0, eq)),
      trim(std::string_view(assignment).substr(eq + 1)), std::move(origin));
}

std::optional<std::string> KeyValues::get(const std::string& key) const {
  const auto* e = find(key);
  if (!e) return std::nullopt;
  return e->value;
}

const KeyValues::Entry* KeyValues::find(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

ExperimentConfig parse_config(const KeyValues& kv, std::optional<std::string> seed_env) {
  const Reader r(kv);
  ExperimentConfig c;
  c.command = r.choice("command", "", command_from_string);
  if (r.has("seed")) {
    c.seed = r.integer("seed");
  } else if (seed_env && !seed_env->empty()) {
    std::uint64_t v = 0;
    const char* end = seed_env->data() + seed_env->size();
    const auto [ptr, ec] = std::from_chars(seed_env->data(), end, v);
    if (ec != std::errc() || ptr != end) {
      fail(ErrorCode::parse, std::string(kSeedEnv) + ": expected an integer, got '" +
                                 *seed_env + "'");
    }
    c.seed = v;
  }
  c.output_dir = r.text("out", c.output_dir);
  c.threads = r.integer("threads", 0);
  c.timing = r.flag("timing", false);
  c.algorithm = r.choice("algorithm", "pruned", count::algorithm_from_string);

  switch (c.command) {
    case Command::gen:
    case Command::energy:
      parse_generator(r, c, true);
      if (c.command == Command::energy) {
        c.energy.s = r.numbers("energy.s");
        for (double s : c.energy.s) {
          if (!(s > 0.0)) r.bad("energy.s", "exponents must be positive");
        }
        c.energy.constant = r.number("energy.constant", c.energy.constant);
      }
      break;
    case Command::count:
      parse_generator(r, c, true);
      parse_query(r, c, true, true);
      break;
    case Command::scan: {
      parse_generator(r, c, false);
      if (c.generator.kind == pointgen::Kind::from_file) {
        r.bad("generator.kind", "scans need a parametric generator");
      }
      c.scan.fixed_target = r.flag("scan.fixed_target", false);
      parse_query(r, c, c.scan.fixed_target, false);
      c.scan.sizes = r.integers("scan.sizes");
      if (c.scan.sizes.size() < 3) r.bad("scan.sizes", "need at least three sizes");
      if (!std::is_sorted(c.scan.sizes.begin(), c.scan.sizes.end(), std::less_equal<>())) {
        r.bad("scan.sizes", "sizes must increase strictly");
      }
      c.scan.s = r.maybe_number("scan.s");
      if (c.scan.s && !(*c.scan.s > 0.0)) r.bad("scan.s", "must be positive");
      c.scan.predicted = r.maybe_number("scan.predicted");
      c.scan.check_adaptability = r.flag("scan.check_adaptability", true);
      c.scan.adaptability_constant =
          r.number("scan.adaptability_constant", c.scan.adaptability_constant);
      break;
    }
    case Command::ft:
      parse_ft(r, c);
      break;
    case Command::curvature:
      parse_curvature(r, c);
      break;
    case Command::dim:
      parse_generator(r, c, true);
      parse_dim(r, c);
      break;
  }
  return c;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_list(const std::vector<double>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += format_double(values[i]);
  }
  return out;
}

namespace {

class Renderer {
 public:
  void section(const std::string& name) { os_ << "\n[" << name << "]\n"; }
  void put(const std::string& key, const std::string& value) {
    os_ << key << " = " << value << "\n";
  }
  void put(const std::string& key, double value) { put(key, format_double(value)); }
  void put_int(const std::string& key, std::uint64_t value) { put(key, std::to_string(value)); }
  void put_bool(const std::string& key, bool value) { put(key, value ? "true" : "false"); }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

void render_generator(Renderer& w, const ExperimentConfig& c, bool sized) {
  const auto& g = c.generator;
  w.section("generator");
  w.put("kind", pointgen::to_string(g.kind));
  if (g.kind == pointgen::Kind::from_file) {
    w.put("path", g.path);
    w.put_int("budget", g.budget);
    return;
  }
  w.put_int("dim", g.dim);
  switch (g.kind) {
    case pointgen::Kind::lattice:
      if (sized) w.put_int("side", g.side);
      break;
    case pointgen::Kind::cantor_product:
      w.put("ratio", g.ratio);
      if (sized) w.put_int("level", g.level);
      break;
    case pointgen::Kind::coplanar:
      w.put("offset", g.offset);
      [[fallthrough]];
    case pointgen::Kind::uniform_random:
    case pointgen::Kind::homogeneous:
      if (sized) w.put_int("count", g.count);
      break;
    case pointgen::Kind::from_file:
      break;
  }
  w.put_int("budget", g.budget);
}

void render_query(Renderer& w, const ExperimentConfig& c, bool with_delta) {
  const auto& q = c.query;
  w.section("query");
  w.put("family", count::to_string(q.family));
  w.put_int("k", q.k);
  if (!q.t.empty()) w.put("t", format_list(q.t));
  if (with_delta) w.put("delta", q.delta);
  w.put("convention", count::to_string(q.convention));
}

}  // namespace

std::string render_config(const ExperimentConfig& c) {
  Renderer w;
  w.put("command", to_string(c.command));
  w.put_int("seed", c.seed);
  w.put_int("threads", c.threads);
  w.put_bool("timing", c.timing);
  w.put("algorithm", count::to_string(c.algorithm));
  switch (c.command) {
    case Command::gen:
      render_generator(w, c, true);
      break;
    case Command::energy:
      render_generator(w, c, true);
      w.section("energy");
      w.put("s", format_list(c.energy.s));
      w.put("constant", c.energy.constant);
      break;
    case Command::count:
      render_generator(w, c, true);
      render_query(w, c, true);
      break;
    case Command::scan: {
      render_generator(w, c, false);
      render_query(w, c, false);
      w.section("scan");
      std::string sizes;
      for (std::size_t i = 0; i < c.scan.sizes.size(); ++i) {
        sizes += (i ? "," : "") + std::to_string(c.scan.sizes[i]);
      }
      w.put("sizes", sizes);
      if (c.scan.s) w.put("s", *c.scan.s);
      w.put_bool("fixed_target", c.scan.fixed_target);
      if (c.scan.predicted) w.put("predicted", *c.scan.predicted);
      w.put_bool("check_adaptability", c.scan.check_adaptability);
      w.put("adaptability_constant", c.scan.adaptability_constant);
      break;
    }
    case Command::ft: {
      const auto& f = c.ft;
      const auto& m = f.measure;
      w.section("ft");
      w.put("measure", fourier::to_string(m.kind));
      w.put_int("dim", m.dim);
      if (m.kind == fourier::MeasureKind::chain_spheres) {
        w.put("radius_x", m.radius_x);
        w.put("radius_y", m.radius_y);
        w.put("mutual", m.mutual);
      }
      if (m.kind == fourier::MeasureKind::determinant_variety) {
        w.put("target", m.target);
        w.put("cutoff", m.cutoff_radius);
      }
      w.put("method", f.method == FtMethod::closed ? "closed" : "montecarlo");
      w.put("direction", format_list(f.direction));
      if (f.step > 0.0) {
        w.put("r_min", f.r_min);
        w.put("r_max", f.r_max);
        w.put("step", f.step);
      } else {
        w.put("radii", format_list(f.radii));
      }
      if (f.method == FtMethod::montecarlo) {
        w.put("epsilon", f.mc.epsilon);
        w.put_int("samples", f.mc.samples);
        w.put_int("streams", f.mc.streams);
      }
      w.put_int("bins_per_decade", f.fit.bins_per_decade);
      w.put("min_bin_width", f.fit.min_bin_width);
      w.put("floor", f.fit.floor);
      break;
    }
    case Command::curvature: {
      const auto& k = c.curvature;
      w.section("curvature");
      switch (k.check) {
        case CurvatureCheck::level_set:
          w.put("check", "level_set");
          w.put("field", k.field);
          w.put_int("dim", k.dim);
          w.put("h", k.h);
          break;
        case CurvatureCheck::circulant:
          w.put("check", "circulant");
          w.put_int("dim", k.dim);
          break;
        case CurvatureCheck::phase_hessian:
          w.put("check", "phase_hessian");
          w.put_int("dim", k.dim);
          w.put("xi", format_list(k.xi));
          w.put("eta", format_list(k.eta));
          w.put_bool("on_plane", k.on_plane);
          break;
      }
      w.put("tolerance", k.tolerance);
      break;
    }
    case Command::dim:
      render_generator(w, c, true);
      w.section("dim");
      w.put("source", c.dim.source == DimSource::points ? "points" : "solution_set");
      w.put("scales", format_list(c.dim.scales));
      if (c.dim.source == DimSource::solution_set) {
        w.put("t", format_list(c.dim.t));
        w.put("delta", c.dim.delta);
      }
      break;
  }
  return w.str();
}

}  // namespace configeo::cli
