#include "configeo/cli/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "configeo/energy.hpp"
#include "configeo/parallel.hpp"

#ifndef CONFIGEO_VERSION
#define CONFIGEO_VERSION "0.0.0"
#endif

namespace configeo::cli {

namespace fs = std::filesystem;

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::infeasible:
    case ErrorCode::coincident_points: return kExitInconclusive;
    case ErrorCode::invalid_argument:
    case ErrorCode::capacity:
    case ErrorCode::parse:
    case ErrorCode::io: return kExitUsage;
  }
  return kExitUsage;
}

const char* tool_version() noexcept { return CONFIGEO_VERSION; }

std::string manifest_text(const ExperimentConfig& config) {
  std::ostringstream os;
  os << "# configeo manifest\n"
     << "# version " << tool_version() << "\n"
     << render_config(config);
  return os.str();
}

std::string count_csv(const count::CountReport& r, std::uint64_t seed, bool timing) {
  std::ostringstream os;
  os << "family,k,d,n,t,delta,count,algorithm,elapsed_seconds,seed\n"
     << count::to_string(r.query.family) << ',' << r.query.k << ',' << r.dim << ',' << r.n
     << ',' << format_list(r.query.t, ";") << ',' << format_double(r.query.delta) << ','
     << r.count << ',' << count::to_string(r.algorithm) << ','
     << format_double(timing ? r.elapsed_seconds : 0.0) << ',' << seed << '\n';
  return os.str();
}

std::string scan_csv(const expfit::ScanReport& r) {
  std::ostringstream os;
  os << "n,delta,count,energy,adaptable\n";
  for (const auto& row : r.rows) {
    os << row.n << ',' << format_double(row.delta) << ',' << row.count << ',';
    if (row.adaptability) {
      os << format_double(row.adaptability->value) << ','
         << (row.adaptability->verdict ? "yes" : "no");
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

std::string scan_text(const expfit::ScanReport& r) {
  std::ostringstream os;
  os << "generator: " << r.generator << "\n"
     << "dim: " << r.dim << "\n"
     << "seed: " << r.seed << "\n"
     << "s: " << format_double(r.s) << "\n"
     << "family: " << count::to_string(r.query.family) << "\n"
     << "k: " << r.query.k << "\n"
     << "t: " << format_list(r.query.t, ";") << "\n"
     << "predicted_exponent: " << format_double(r.predicted) << "\n";
  if (r.fit) {
    os << "fitted_exponent: " << format_double(r.fit->slope) << "\n"
       << "stderr: " << format_double(r.fit->stderr_slope) << "\n"
       << "points_used: " << r.fit->used << "\n";
  }
  os << "verdict: " << expfit::to_string(r.verdict) << "\n";
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  return os.str();
}

std::string scan_file_stem(const expfit::ScanReport& r) {
  return "scan_" + std::string(count::to_string(r.query.family)) + "_k" +
         std::to_string(r.query.k) + "_d" + std::to_string(r.dim) + "_s" +
         format_double(r.s) + "_seed" + std::to_string(r.seed);
}

std::string decay_csv(const fourier::DecayReport& r) {
  std::ostringstream os;
  os << "radius,magnitude,stderr\n";
  for (std::size_t i = 0; i < r.radii.size(); ++i) {
    os << format_double(r.radii[i]) << ',' << format_double(r.magnitudes[i]) << ','
       << format_double(r.error_bars.empty() ? 0.0 : r.error_bars[i]) << '\n';
  }
  return os.str();
}

std::string decay_text(const fourier::DecayReport& r) {
  std::ostringstream os;
  os << "direction: ";
  bool first = true;
  for (const auto& block : r.direction.blocks) {
    for (double v : block) {
      os << (first ? "" : ",") << format_double(v);
      first = false;
    }
  }
  os << "\n"
     << "radii: " << r.radii.size() << " in [" << format_double(r.radii.front()) << ", "
     << format_double(r.radii.back()) << "]\n"
     << "envelope_points: " << r.envelope_radii.size() << "\n"
     << "reference_exponent: " << format_double(r.reference_exponent) << "\n";
  if (r.inconclusive) {
    os << "verdict: inconclusive\n";
  } else {
    os << "fitted_exponent: " << format_double(r.fitted_exponent) << "\n"
       << "stderr: " << format_double(r.stderr_exponent) << "\n"
       << "verdict: fitted\n";
  }
  return os.str();
}

std::string boxdim_csv(const count::BoxDimReport& r) {
  std::ostringstream os;
  os << "scale,boxes\n";
  for (std::size_t i = 0; i < r.scales.size(); ++i) {
    os << format_double(r.scales[i]) << ',' << r.box_counts[i] << '\n';
  }
  return os.str();
}

namespace {

class Writer {
 public:
  explicit Writer(const std::string& dir, RunResult& result) : dir_(dir), result_(result) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) fail(ErrorCode::io, "cannot create output directory '" + dir + "': " + ec.message());
  }

  void write(const std::string& name, const std::string& body) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) fail(ErrorCode::io, "cannot write '" + path.string() + "'");
    result_.files.push_back(name);
  }

 private:
  fs::path dir_;
  RunResult& result_;
};

PointSet load_points(const ExperimentConfig& c) { return pointgen::generate(c.generator); }

fourier::FrequencyPoint to_frequency(const fourier::MeasureSpec& m,
                                     const std::vector<double>& flat) {
  fourier::FrequencyPoint f;
  for (std::size_t b = 0; b < m.block_count(); ++b) {
    f.blocks.emplace_back(flat.begin() + b * m.dim, flat.begin() + (b + 1) * m.dim);
  }
  return f;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

void run_gen(const ExperimentConfig& c, Writer& w, RunResult& res) {
  const PointSet points = load_points(c);
  w.write("points.txt", format_pointset(points));
  res.summary = "gen " + std::string(pointgen::to_string(c.generator.kind)) +
                ": n=" + std::to_string(points.size()) + " d=" + std::to_string(points.dim());
}

void run_energy(const ExperimentConfig& c, Writer& w, RunResult& res) {
  const PointSet points = load_points(c);
  std::ostringstream os;
  os << "s,value,n,constant,adaptable\n";
  std::string last;
  for (double s : c.energy.s) {
    const auto rep = energy::is_adaptable(points, s, c.energy.constant);
    os << format_double(s) << ',' << format_double(rep.value) << ',' << rep.n << ','
       << format_double(rep.adaptable_at) << ',' << (rep.verdict ? "yes" : "no") << '\n';
    last = "s=" + format_double(s) + " I=" + format_double(rep.value) +
           (rep.verdict ? " adaptable" : " not adaptable");
  }
  w.write("energy.csv", os.str());
  res.summary = "energy n=" + std::to_string(points.size()) + ": " + last;
}

void run_count(const ExperimentConfig& c, Writer& w, RunResult& res) {
  const PointSet points = load_points(c);
  c.query.validate(points.dim());
  const auto rep = count::run_query(points, c.query, c.algorithm);
  w.write("count.csv", count_csv(rep, c.seed, c.timing));
  res.summary = "count " + std::string(count::to_string(c.query.family)) +
                " k=" + std::to_string(c.query.k) + " n=" + std::to_string(rep.n) +
                ": " + std::to_string(rep.count) + " tuples (" +
                count::to_string(rep.algorithm) + ", " + fixed(rep.elapsed_seconds, 3) + " s)";
}

void run_scan(const ExperimentConfig& c, Writer& w, RunResult& res) {
  expfit::ScanSpec spec;
  spec.generator = c.generator;
  spec.query = c.query;
  spec.schedule = c.scan.sizes;
  spec.s = c.scan.s;
  spec.fixed_target = c.scan.fixed_target;
  spec.predicted = c.scan.predicted;
  spec.check_adaptability = c.scan.check_adaptability;
  spec.adaptability_constant = c.scan.adaptability_constant;
  spec.algorithm = c.algorithm;
  const auto rep = expfit::run_scan(spec);
  const std::string stem = scan_file_stem(rep);
  w.write(stem + ".csv", scan_csv(rep));
  w.write(stem + ".txt", scan_text(rep));
  res.summary = "scan " + std::string(count::to_string(rep.query.family)) + " on " +
                rep.generator + ": verdict " + expfit::to_string(rep.verdict);
  if (rep.fit) {
    res.summary += ", slope " + fixed(rep.fit->slope, 4) + " +- " +
                   fixed(rep.fit->stderr_slope, 4) + " vs predicted " +
                   fixed(rep.predicted, 4);
  } else if (!rep.note.empty()) {
    res.summary += " (" + rep.note + ")";
  }
  if (rep.verdict == expfit::Verdict::inconclusive) res.exit_code = kExitInconclusive;
}

void run_ft(const ExperimentConfig& c, Writer& w, RunResult& res) {
  const auto& f = c.ft;
  const auto direction = to_frequency(f.measure, f.direction);
  std::vector<double> magnitudes, errors;
  if (f.method == FtMethod::closed) {
    magnitudes.reserve(f.radii.size());
    for (double r : f.radii) {
      magnitudes.push_back(std::abs(*fourier::ft_closed_form(f.measure, direction.scaled(r))));
    }
  } else {
    const auto est = fourier::ft_montecarlo_ray(f.measure, direction, f.radii, f.mc);
    for (const auto& e : est) {
      magnitudes.push_back(std::abs(e.value));
      errors.push_back(e.stderr_value);
    }
  }
  auto rep = fourier::decay_fit(f.radii, magnitudes, f.fit);
  rep.direction = direction;
  rep.error_bars = errors;
  rep.reference_exponent = fourier::reference_decay(f.measure);
  w.write("decay.csv", decay_csv(rep));
  w.write("decay.txt", decay_text(rep));
  res.summary = "ft " + std::string(fourier::to_string(f.measure.kind)) +
                " d=" + std::to_string(f.measure.dim) + ": ";
  if (rep.inconclusive) {
    res.summary += "inconclusive (too few envelope points)";
    res.exit_code = kExitInconclusive;
  } else {
    res.summary += "decay exponent " + fixed(rep.fitted_exponent, 4) + " +- " +
                   fixed(rep.stderr_exponent, 4) + " (reference " +
                   format_double(rep.reference_exponent) + ")";
  }
}

void run_curvature(const ExperimentConfig& c, Writer& w, RunResult& res) {
  const auto& k = c.curvature;
  std::ostringstream os;
  switch (k.check) {
    case CurvatureCheck::level_set: {
      const auto ex = fourier::level_set_example(k.field, k.dim);
      const auto eig = fourier::level_set_curvatures(ex.field, ex.t, ex.x0, k.h);
      const auto nonzero = fourier::count_nonzero(eig, k.tolerance);
      os << "check: level_set\nfield: " << ex.name << "\nd: " << k.dim
         << "\nambient: " << ex.x0.size() << "\nt: " << format_double(ex.t)
         << "\nx0: " << format_list(ex.x0) << "\nh: " << format_double(k.h)
         << "\ncurvatures: " << format_list(eig) << "\nnonzero: " << nonzero << "\n";
      res.summary = "curvature " + ex.name + " d=" + std::to_string(k.dim) + ": " +
                    std::to_string(nonzero) + " of " + std::to_string(eig.size()) +
                    " principal curvatures nonzero";
      break;
    }
    case CurvatureCheck::circulant: {
      os << "check: circulant\nd,determinant\n";
      std::size_t zero = 0;
      for (std::size_t d = 2; d <= k.dim; ++d) {
        const double det = fourier::circulant_check(d);
        if (det == 0.0) ++zero;
        os << d << ',' << format_double(det) << '\n';
      }
      res.summary = "circulant 2.." + std::to_string(k.dim) + ": " +
                    (zero == 0 ? "all determinants nonzero"
                               : std::to_string(zero) + " singular sizes");
      break;
    }
    case CurvatureCheck::phase_hessian: {
      const auto h = fourier::phase_hessian(k.dim, k.xi, k.eta);
      const auto q = fourier::plane_block_form();
      os << "check: phase_hessian\nd: " << k.dim << "\nxi: " << format_list(k.xi)
         << "\neta: " << format_list(k.eta) << "\non_plane: " << (k.on_plane ? "true" : "false")
         << "\nsize: " << h.matrix.rows() << "\nrank: " << h.rank
         << "\np: " << format_double(h.p) << "\nq_det: " << format_double(h.q_det)
         << "\nplane_form: " << format_double(q.a) << "," << format_double(q.b) << ","
         << format_double(q.c) << "\nplane_discriminant: " << format_double(q.discriminant())
         << "\nplane_definite: " << (q.discriminant() < 0.0 ? "yes" : "no") << "\nmatrix:\n";
      for (Eigen::Index i = 0; i < h.matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < h.matrix.cols(); ++j) {
          os << (j ? "," : "") << format_double(h.matrix(i, j));
        }
        os << '\n';
      }
      res.summary = "phase_hessian d=" + std::to_string(k.dim) + ": rank " +
                    std::to_string(h.rank) + " of " + std::to_string(h.matrix.rows());
      break;
    }
  }
  w.write("curvature.txt", os.str());
}

void run_dim(const ExperimentConfig& c, Writer& w, RunResult& res) {
  const PointSet base = load_points(c);
  count::BoxDimReport rep;
  std::size_t n = base.size();
  if (c.dim.source == DimSource::points) {
    rep = count::box_dim(base, c.dim.scales);
  } else {
    const std::vector<PointSet> sets{base, base};
    const auto solutions = count::sample_solution_set(
        sets, count::phi::difference(base.dim()), c.dim.t, c.dim.delta);
    n = solutions.size();
    rep = count::box_dim(solutions, c.dim.scales);
  }
  std::ostringstream os;
  os << "source: " << (c.dim.source == DimSource::points ? "points" : "solution_set")
     << "\npoints: " << n << "\nslope: " << format_double(rep.slope)
     << "\nstderr: " << format_double(rep.stderr_slope)
     << "\ndegenerate: " << (rep.degenerate ? "yes" : "no") << "\n";
  w.write("boxdim.csv", boxdim_csv(rep));
  w.write("boxdim.txt", os.str());
  res.summary = "dim " + std::to_string(n) + " points: box-counting slope " +
                fixed(rep.slope, 4) + " +- " + fixed(rep.stderr_slope, 4);
  if (rep.degenerate) {
    res.summary += " (degenerate: all box counts equal)";
    res.exit_code = kExitInconclusive;
  }
}

}  // namespace

RunResult run(const ExperimentConfig& config) {
  set_thread_count(static_cast<unsigned>(config.threads));
  RunResult result;
  Writer writer(config.output_dir, result);
  writer.write("manifest.txt", manifest_text(config));
  switch (config.command) {
    case Command::gen: run_gen(config, writer, result); break;
    case Command::energy: run_energy(config, writer, result); break;
    case Command::count: run_count(config, writer, result); break;
    case Command::scan: run_scan(config, writer, result); break;
    case Command::ft: run_ft(config, writer, result); break;
    case Command::curvature: run_curvature(config, writer, result); break;
    case Command::dim: run_dim(config, writer, result); break;
  }
  return result;
}

}  // namespace configeo::cli
