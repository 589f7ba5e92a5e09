// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "configeo/cli/config.hpp"
#include "configeo/cli/runner.hpp"
#include "configeo/configcount.hpp"
#include "configeo/energy.hpp"
#include "configeo/expfit.hpp"
#include "configeo/fourier.hpp"
#include "testing.hpp"

namespace {

using namespace configeo;
using count::Family;
using expfit::Rational;
using fourier::FrequencyPoint;
using fourier::Vector;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

// 1. pruned == brute on randomized realized-target queries.
Outcome oracle_equivalence() {
  Outcome out;
  testing::Gen g(20260101);
  int mismatches = 0, nonempty = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = g.index(2, 3);
    const std::size_t k = g.index(1, d);
    const std::size_t n = g.index(k + 1, k == 3 ? 40 : 60);
    const auto p = g.coin() ? g.points(n, d) : g.grid_points(n, d, 8);
    const auto perm = g.permutation(n);
    std::vector<double> t;
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = a + 1; b <= k; ++b) t.push_back(testing::dist(p, perm[a], perm[b]));
    }
    if (std::any_of(t.begin(), t.end(), [](double v) { return v <= 0.0; })) {
      t.assign(t.size(), 0.5);  // coincident grid draw: fall back to a fixed target
    }
    const double delta = g.coin() ? 0.01 : 0.05;
    const auto pruned = count::count_simplex(p, k, t, delta, count::Algorithm::pruned).count;
    const auto brute = count::count_simplex(p, k, t, delta, count::Algorithm::brute).count;
    if (pruned != brute) ++mismatches;
    if (brute > 0) ++nonempty;
  }
  out.check(mismatches == 0, std::to_string(mismatches) + " mismatches");
  out.note("200 cases, " + std::to_string(nonempty) + " nonempty, " +
           std::to_string(mismatches) + " mismatches");
  return out;
}

// 2. Closed-form counts.
Outcome closed_form_counts() {
  Outcome out;
  const std::vector<double> one{1.0}, ones{1.0, 1.0, 1.0};
  const auto sq = testing::square_corners();
  const auto c1 = count::count_simplex(sq, 1, one, 0.01).count;
  const auto c2 = count::count_simplex(testing::equilateral(), 2, ones, 1e-9).count;
  const auto simplex = testing::make_points(2, {0, 0, 1, 0, 0, 1});
  const auto c3 = count::count_volume(simplex, 1.0, 1e-9, count::VolumeConvention::bare_determinant).count;
  const auto c4 = count::count_angle(sq, kPi / 2, 0.01).count;
  out.check(c1 == 8, "square corners " + std::to_string(c1));
  out.check(c2 == 6, "equilateral " + std::to_string(c2));
  out.check(c3 == 6, "standard simplex volume " + std::to_string(c3));
  out.check(c4 == 8, "right angles " + std::to_string(c4));
  out.note("counts " + std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(c3) +
           "," + std::to_string(c4));
  return out;
}

std::string str(Rational r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// 3. Threshold registry as exact rationals.
Outcome threshold_registry() {
  Outcome out;
  const auto s22 = expfit::threshold_exact(Family::simplex, 2, 2);
  const auto v2 = expfit::threshold_exact(Family::volume, 2, 2);
  const auto v3 = expfit::threshold_exact(Family::volume, 3, 3);
  const auto e = expfit::count_exponent_exact(Family::simplex, 2, 3, Rational(5, 2));
  out.check(s22 == Rational(7, 4), "s0(2,2) = " + str(s22));
  out.check(v2 == Rational(5, 4), "volume d=2 " + str(v2));
  out.check(v3 == Rational(9, 4), "volume d=3 " + str(v3));
  out.check(e == Rational(9, 5), "exponent " + str(e));
  for (long long d = 2; d <= 8; ++d) {
    const auto a = expfit::threshold_exact(Family::area2, 2, std::size_t(d));
    const auto g = expfit::threshold_exact(Family::angle, 2, std::size_t(d));
    out.check(a == Rational(d, 2) + Rational(1, 4), "area2 d=" + std::to_string(d));
    out.check(g == Rational(d + 1, 2), "angle d=" + std::to_string(d));
  }
  out.note("7/4, 5/4, 9/4, d/2+1/4, (d+1)/2 for d<=8, 9/5 -> " + str(s22) + ", " + str(v2) +
           ", " + str(v3) + ", " + str(e));
  return out;
}

// 4. Scan consistency.
Outcome scans() {
  Outcome out;
  expfit::ScanSpec lat;
  lat.generator.kind = pointgen::Kind::lattice;
  lat.generator.dim = 2;
  lat.query.family = Family::simplex;
  lat.query.k = 1;
  lat.query.t = {0.5};
  lat.schedule = {100, 400, 1600, 3600};
  lat.s = 2.0;
  lat.fixed_target = true;
  const auto rep = expfit::run_scan(lat);
  const std::vector<double> t{0.5};
  for (const auto& row : rep.rows) {
    const auto m = static_cast<std::size_t>(std::lround(std::sqrt(double(row.n))));
    const auto brute = count::count_simplex_brute(pointgen::lattice(2, m), 1, t, row.delta).count;
    out.check(brute == row.count, "brute recount at n=" + std::to_string(row.n));
  }
  out.check(rep.fit.has_value(), "lattice fit missing");
  if (rep.fit) {
    out.check(rep.fit->slope <= rep.predicted + 0.3, fmt("slope %.3f", rep.fit->slope));
    out.note(fmt("lattice slope %.3f (predicted %.2f)", rep.fit->slope, rep.predicted));
  }

  expfit::ScanSpec cop;
  cop.generator.kind = pointgen::Kind::coplanar;
  cop.generator.dim = 3;
  cop.query.family = Family::volume;
  cop.query.k = 3;
  cop.query.t = {0.2};
  cop.schedule = {30, 60, 120};
  cop.fixed_target = true;
  const auto crep = expfit::run_scan(cop);
  std::uint64_t total = 0;
  for (const auto& row : crep.rows) total += row.count;
  out.check(total == 0, "coplanar counts sum " + std::to_string(total));
  out.note("coplanar counts all zero: " + std::string(total == 0 ? "yes" : "no") + ", verdict " +
           expfit::to_string(crep.verdict));
  return out;
}

// 5. Fourier decay of closed forms, quadrature oracle.
Outcome fourier_decay() {
  Outcome out;
  const auto wide = fourier::linear_radii(10.0, 1000.0, 99001);
  const double a3 =
      fourier::decay_fit([](double r) { return std::abs(fourier::ft_sphere_radial(3, r)); }, wide)
          .fitted_exponent;
  const double a2 =
      fourier::decay_fit([](double r) { return std::abs(fourier::ft_sphere_radial(2, r)); }, wide)
          .fitted_exponent;
  const auto tri_r = fourier::linear_radii(10.0, 300.0, 29001);
  const double c = std::sqrt(0.5);
  const double at = fourier::decay_fit(
                        [&](double r) {
                          const Vector xi{r * c, 0.0}, eta{-r * c, 0.0};
                          return std::abs(fourier::ft_triangle(xi, eta));
                        },
                        tri_r)
                        .fitted_exponent;
  out.check(std::abs(a3 - 1.0) <= 0.05, fmt("sphere d=3 %.4f", a3));
  out.check(std::abs(a2 - 0.5) <= 0.1, fmt("sphere d=2 %.4f", a2));
  out.check(std::abs(at - 0.5) <= 0.15, fmt("triangle %.4f", at));

  // Radii chosen between consecutive zeros of both closed forms.
  double worst = 0.0;
  const std::vector<double> radii{0.35, 1.1, 2.35, 3.6, 4.85, 6.1, 7.35, 8.6, 9.85, 12.1};
  for (std::size_t d : {2, 3}) {
    const auto spec = fourier::MeasureSpec::sphere(d);
    for (double r : radii) {
      Vector xi(d, 0.0);
      xi[d - 1] = r;
      const auto exact = fourier::ft_sphere(d, xi);
      const auto quad = fourier::ft_quadrature(spec, xi, 512);
      worst = std::max(worst, std::abs(quad - exact) / std::abs(exact));
    }
  }
  out.check(worst <= 1e-8, fmt("quadrature rel err %.2e", worst));
  out.note(fmt("exponents d=3 %.4f, d=2 %.4f", a3, a2) + fmt(", triangle %.4f", at) +
           fmt(", quadrature max rel err %.1e over 20 radii", worst));
  return out;
}

// 6. Monte Carlo against closed form, chain decay.
Outcome montecarlo() {
  Outcome out;
  fourier::MonteCarloOptions opt;
  opt.samples = 1'000'000;
  opt.epsilon = 0.002;
  opt.seed = 11;
  const std::vector<FrequencyPoint> pts{
      {{{0.2, 0.1}, {-0.1, 0.3}}}, {{{0.5, 0.0}, {0.0, 0.5}}}, {{{0.4, -0.4}, {-0.4, 0.4}}},
      {{{1.0, 0.2}, {0.3, -0.6}}}, {{{0.0, 1.2}, {0.9, 0.0}}}};
  const auto est = fourier::ft_montecarlo(fourier::MeasureSpec::triangle2d(), pts, opt);
  double worst_z = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto exact = fourier::ft_triangle(pts[i].blocks[0], pts[i].blocks[1]);
    worst_z = std::max(worst_z, std::abs(est[i].value - exact) / est[i].stderr_value);
  }
  out.check(worst_z <= 3.0, fmt("triangle worst |z| %.2f", worst_z));

  fourier::MonteCarloOptions chain;
  chain.samples = 200'000'000;
  chain.epsilon = 0.003;
  chain.seed = 5;
  const double c = std::sqrt(0.5);
  const FrequencyPoint dir{{{c, 0, 0}, {-c, 0, 0}}};
  const auto radii = fourier::linear_radii(2.0, 40.0, 761);
  const auto ray =
      fourier::ft_montecarlo_ray(fourier::MeasureSpec::chain_spheres(3), dir, radii, chain);
  std::vector<double> mags;
  for (const auto& e : ray) mags.push_back(std::abs(e.value));
  const auto fit = fourier::decay_fit(radii, mags);
  const double a = fit.fitted_exponent;
  out.check(!fit.inconclusive && a >= 0.6 && a <= 1.4, fmt("chain exponent %.3f", a));
  out.note(fmt("triangle worst |z| %.2f over 5 points", worst_z) +
           fmt(", chain exponent %.3f +- %.3f", a, fit.stderr_exponent));
  return out;
}

// 7. Curvature certificates.
Outcome curvature() {
  Outcome out;
  const auto paired = fourier::level_set_example("paired", 2);
  const auto np = fourier::count_nonzero(
      fourier::level_set_curvatures(paired.field, paired.t, paired.x0));
  out.check(np == 3, "paired nonzero " + std::to_string(np));
  std::string rotated;
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto ex = fourier::level_set_example("rotated", d);
    const auto nz = fourier::count_nonzero(fourier::level_set_curvatures(ex.field, ex.t, ex.x0));
    out.check(nz == 2 * d - 1, "rotated d=" + std::to_string(d));
    rotated += (rotated.empty() ? "" : ",") + std::to_string(nz);
  }
  for (std::size_t d = 2; d <= 12; ++d) {
    out.check(fourier::circulant_check(d) != 0.0, "circulant d=" + std::to_string(d));
  }
  std::string ranks;
  for (std::size_t d = 3; d <= 5; ++d) {
    Vector xi(d, 0.0), eta(d, 0.0);
    eta[0] = 1.0;
    eta[d - 1] = 0.3;
    xi[d - 1] = fourier::plane_xi_d(eta[0], eta[d - 1]);
    const auto on = fourier::phase_hessian(d, xi, eta);
    Vector gxi(d), geta(d);
    for (std::size_t i = 0; i < d; ++i) {
      gxi[i] = 0.3 + 0.1 * double(i);
      geta[i] = 0.7 - 0.2 * double(i);
    }
    const auto off = fourier::phase_hessian(d, gxi, geta);
    out.check(on.rank >= d - 1, "on-plane rank d=" + std::to_string(d));
    out.check(off.rank >= 2 * (d - 2), "generic rank d=" + std::to_string(d));
    ranks += (ranks.empty() ? "" : " ") + std::to_string(on.rank) + "/" + std::to_string(off.rank);
  }
  out.note("paired " + std::to_string(np) + ", rotated " + rotated +
           ", circulant nonzero d<=12, phase ranks on/off " + ranks);
  return out;
}

// 8. Box-counting dimension.
Outcome box_dimension() {
  Outcome out;
  const auto line = pointgen::lattice(1, 2000);
  const std::vector<PointSet> sets{line, line};
  const std::vector<double> zero{0.0};
  const auto sol = count::sample_solution_set(sets, count::phi::difference(1), zero, 1e-9);
  const std::vector<double> scales{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  const double diag = count::box_dim(sol, scales).slope;
  const std::vector<double> grid_scales{0.25, 0.125, 0.0625, 0.03125};
  const double full = count::box_dim(pointgen::lattice(2, 100), grid_scales).slope;
  out.check(std::abs(diag - 1.0) <= 0.1, fmt("diagonal %.3f", diag));
  out.check(std::abs(full - 2.0) <= 0.15, fmt("grid %.3f", full));
  out.note(fmt("diagonal slope %.3f, grid slope %.3f", diag, full));
  return out;
}

double oracle_energy(const PointSet& p, double s) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i != j) acc += std::pow(static_cast<long double>(testing::dist(p, i, j)), -s);
    }
  }
  const long double n = static_cast<long double>(p.size());
  return static_cast<double>(acc / (n * n));
}

// 9. Energy.
Outcome energy_checks() {
  Outcome out;
  testing::Gen g(99);
  double worst = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = g.points(g.index(2, 200), g.index(1, 3));
    const double s = g.real(0.2, 2.5);
    worst = std::max(worst, testing::rel_diff(energy::discrete_energy(p, s), oracle_energy(p, s)));
  }
  out.check(worst <= 1e-12, fmt("oracle rel err %.2e", worst));
  const double two = energy::discrete_energy(testing::make_points(2, {0, 0, 1, 0}), 1.0);
  out.check(two == 0.5, fmt("two-point %.17g", two));
  double lo = 1e300, hi = 0.0;
  for (std::size_t m : {10, 20, 40}) {
    const double e = energy::discrete_energy(pointgen::lattice(2, m), 1.5);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  out.check(hi / lo <= 1.5, fmt("plateau ratio %.3f", hi / lo));
  out.note(fmt("oracle max rel err %.1e", worst) + fmt(", two-point %.17g", two) +
           fmt(", plateau ratio %.3f", hi / lo));
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 10. Byte-identical reruns.
Outcome reproducibility() {
  Outcome out;
  namespace fs = std::filesystem;
  const std::vector<std::string> configs{
      "command = gen\n[generator]\nkind = uniform_random\ndim = 3\ncount = 200\n",
      "command = energy\n[generator]\nkind = homogeneous\ndim = 2\ncount = 400\n"
      "[energy]\ns = 1,1.5\n",
      "command = count\n[generator]\nkind = cantor_product\ndim = 2\nlevel = 3\n"
      "[query]\nfamily = angle\nt = pi/3\ndelta = 0.05\n",
      "command = scan\n[generator]\nkind = uniform_random\ndim = 2\n[query]\nfamily = simplex\n"
      "k = 2\n[scan]\nsizes = 40,80,160\ns = 2\n",
      "command = ft\n[ft]\nmeasure = chain_spheres\ndim = 3\nmethod = montecarlo\n"
      "r_min = 2\nr_max = 20\nsamples = 100000\n",
      "command = curvature\n[curvature]\ncheck = level_set\nfield = rotated\ndim = 3\n",
      "command = dim\n[generator]\nkind = lattice\ndim = 1\nside = 300\n"
      "[dim]\nsource = solution_set\nt = 0\n",
  };
  const auto root = fs::temp_directory_path() / "configeo-acceptance";
  fs::remove_all(root);
  std::size_t files = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    auto cfg = cli::parse_config(cli::KeyValues::parse(configs[i], "case" + std::to_string(i)));
    cfg.seed = 1234 + i;
    cfg.generator.seed = cfg.seed;
    cfg.ft.mc.seed = cfg.seed;
    const auto a = root / ("a" + std::to_string(i)), b = root / ("b" + std::to_string(i));
    cfg.output_dir = a.string();
    const auto ra = cli::run(cfg);
    cfg.output_dir = b.string();
    const auto rb = cli::run(cfg);
    out.check(ra.files == rb.files, "file lists differ for case " + std::to_string(i));
    for (const auto& f : ra.files) {
      ++files;
      out.check(slurp(a / f) == slurp(b / f), "case " + std::to_string(i) + " " + f);
    }
  }
  fs::remove_all(root);
  out.note(std::to_string(configs.size()) + " commands, " + std::to_string(files) +
           " report files identical");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      oracle_equivalence, closed_form_counts, threshold_registry, scans,
      fourier_decay,      montecarlo,         curvature,          box_dimension,
      energy_checks,      reproducibility};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %zu: %s  %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
