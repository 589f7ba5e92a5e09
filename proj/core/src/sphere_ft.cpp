#include <cmath>
#include <numbers>

#include "configeo/error.hpp"
#include "configeo/fourier.hpp"

namespace configeo::fourier {

namespace {

constexpr double kPi = std::numbers::pi;

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace

FrequencyPoint FrequencyPoint::scaled(double r) const {
  FrequencyPoint out = *this;
  for (auto& block : out.blocks) {
    for (double& v : block) v *= r;
  }
  return out;
}

double FrequencyPoint::norm() const {
  double acc = 0.0;
  for (const auto& block : blocks) {
    for (double v : block) acc += v * v;
  }
  return std::sqrt(acc);
}

const char* to_string(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::sphere: return "sphere";
    case MeasureKind::triangle2d: return "triangle2d";
    case MeasureKind::chain_spheres: return "chain_spheres";
    case MeasureKind::determinant_variety: return "determinant_variety";
  }
  return "unknown";
}

MeasureKind measure_kind_from_string(const std::string& name) {
  if (name == "sphere") return MeasureKind::sphere;
  if (name == "triangle2d" || name == "triangle") return MeasureKind::triangle2d;
  if (name == "chain_spheres" || name == "chain") return MeasureKind::chain_spheres;
  if (name == "determinant_variety" || name == "determinant") {
    return MeasureKind::determinant_variety;
  }
  fail(ErrorCode::invalid_argument, "unknown measure kind '" + name + "'");
}

MeasureSpec MeasureSpec::sphere(std::size_t dim) {
  MeasureSpec s;
  s.kind = MeasureKind::sphere;
  s.dim = dim;
  return s;
}

MeasureSpec MeasureSpec::triangle2d() {
  MeasureSpec s;
  s.kind = MeasureKind::triangle2d;
  s.dim = 2;
  return s;
}

MeasureSpec MeasureSpec::chain_spheres(std::size_t dim, double rx, double ry, double mutual) {
  MeasureSpec s;
  s.kind = MeasureKind::chain_spheres;
  s.dim = dim;
  s.radius_x = rx;
  s.radius_y = ry;
  s.mutual = mutual;
  return s;
}

MeasureSpec MeasureSpec::determinant_variety(double target, double cutoff) {
  MeasureSpec s;
  s.kind = MeasureKind::determinant_variety;
  s.dim = 3;
  s.target = target;
  s.cutoff_radius = cutoff;
  return s;
}

std::size_t MeasureSpec::block_count() const {
  switch (kind) {
    case MeasureKind::sphere: return 1;
    case MeasureKind::triangle2d:
    case MeasureKind::chain_spheres: return 2;
    case MeasureKind::determinant_variety: return dim;
  }
  return 1;
}

void MeasureSpec::validate() const {
  switch (kind) {
    case MeasureKind::sphere:
      require(dim >= 2, "sphere measure needs d >= 2");
      break;
    case MeasureKind::triangle2d:
      require(dim == 2, "triangle2d lives in R^2 x R^2");
      break;
    case MeasureKind::chain_spheres:
      require(dim >= 2, "chain_spheres needs d >= 2");
      require(radius_x > 0.0 && radius_y > 0.0 && mutual > 0.0,
              "chain_spheres radii must be positive");
      require(mutual <= radius_x + radius_y && mutual >= std::abs(radius_x - radius_y),
              "chain_spheres radii violate the triangle inequality");
      break;
    case MeasureKind::determinant_variety: {
      require(dim == 3, "determinant_variety Monte Carlo is limited to d = 3");
      require(cutoff_radius > 0.0, "cutoff radius must be positive");
      // max |det| over the ball sum |u_i|^2 <= R^2 is (R^2/3)^{3/2}.
      const double reach = std::pow(cutoff_radius * cutoff_radius / 3.0, 1.5);
      require(target != 0.0 && std::abs(target) < reach,
              "determinant target must be nonzero and attainable inside the cutoff ball");
      break;
    }
  }
}

double sphere_area(std::size_t dim) {
  const double half = static_cast<double>(dim) / 2.0;
  return 2.0 * std::pow(kPi, half) / std::tgamma(half);
}

double ft_sphere_radial(std::size_t dim, double r) {
  require(dim >= 2, "ft_sphere needs d >= 2");
  if (r == 0.0) return sphere_area(dim);
  const double nu = static_cast<double>(dim) / 2.0 - 1.0;
  return 2.0 * kPi * std::pow(r, -nu) * std::cyl_bessel_j(nu, 2.0 * kPi * r);
}

Complex ft_sphere(std::size_t dim, std::span<const double> xi) {
  require(xi.size() == dim, "frequency dimension must match the sphere dimension");
  return {ft_sphere_radial(dim, norm2(xi)), 0.0};
}

Complex ft_quadrature(const MeasureSpec& spec, std::span<const double> xi, std::size_t nodes) {
  require(spec.kind == MeasureKind::sphere, "quadrature oracle is limited to spheres");
  require(spec.dim == 2 || spec.dim == 3, "quadrature oracle supports d = 2 and d = 3");
  require(xi.size() == spec.dim, "frequency dimension must match the sphere dimension");
  require(nodes >= 16, "quadrature needs at least 16 nodes");

  if (spec.dim == 2) {
    const double step = 2.0 * kPi / static_cast<double>(nodes);
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
      const double theta = step * static_cast<double>(j);
      const double phase = -2.0 * kPi * (xi[0] * std::cos(theta) + xi[1] * std::sin(theta));
      re += std::cos(phase);
      im += std::sin(phase);
    }
    return {re * step, im * step};
  }

  std::vector<double> z, w;
  gauss_legendre(nodes, z, w);
  const std::size_t azimuths = 2 * nodes;
  const double step = 2.0 * kPi / static_cast<double>(azimuths);
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < nodes; ++i) {
    const double rho = std::sqrt(std::max(0.0, 1.0 - z[i] * z[i]));
    double ring_re = 0.0, ring_im = 0.0;
    for (std::size_t j = 0; j < azimuths; ++j) {
      const double phi = step * static_cast<double>(j);
      const double dot = rho * (xi[0] * std::cos(phi) + xi[1] * std::sin(phi)) + z[i] * xi[2];
      const double phase = -2.0 * kPi * dot;
      ring_re += std::cos(phase);
      ring_im += std::sin(phase);
    }
    re += w[i] * ring_re * step;
    im += w[i] * ring_im * step;
  }
  return {re, im};
}

Complex ft_triangle(std::span<const double> xi, std::span<const double> eta) {
  require(xi.size() == 2 && eta.size() == 2, "ft_triangle takes two 2-vectors");
  const double h = std::sqrt(3.0) / 2.0;
  const double plus[2] = {xi[0] + eta[0] / 2.0 + eta[1] * h, xi[1] - eta[0] * h + eta[1] / 2.0};
  const double minus[2] = {xi[0] + eta[0] / 2.0 - eta[1] * h, xi[1] + eta[0] * h + eta[1] / 2.0};
  return ft_sphere(2, plus) + ft_sphere(2, minus);
}

std::optional<Complex> ft_closed_form(const MeasureSpec& spec, const FrequencyPoint& xi) {
  require(xi.blocks.size() == spec.block_count(), "frequency block count does not match");
  switch (spec.kind) {
    case MeasureKind::sphere: return ft_sphere(spec.dim, xi.blocks[0]);
    case MeasureKind::triangle2d: return ft_triangle(xi.blocks[0], xi.blocks[1]);
    default: return std::nullopt;
  }
}

double reference_decay(const MeasureSpec& spec) {
  const double d = static_cast<double>(spec.dim);
  switch (spec.kind) {
    case MeasureKind::sphere:
    case MeasureKind::chain_spheres: return (d - 1.0) / 2.0;
    case MeasureKind::triangle2d: return 0.5;
    case MeasureKind::determinant_variety: return (d * d - 1.0) / 2.0;
  }
  return 0.0;
}

}  // namespace configeo::fourier
