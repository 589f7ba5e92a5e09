#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace configeo::fourier {

using Complex = std::complex<double>;
using Vector = std::vector<double>;

/// A frequency on a product space (R^d)^k, one d-vector per factor.
struct FrequencyPoint {
  std::vector<Vector> blocks;

  FrequencyPoint scaled(double r) const;
  double norm() const;
};

enum class MeasureKind { sphere, triangle2d, chain_spheres, determinant_variety };
const char* to_string(MeasureKind kind) noexcept;
MeasureKind measure_kind_from_string(const std::string& name);

struct MeasureSpec {
  MeasureKind kind = MeasureKind::sphere;
  std::size_t dim = 2;
  double radius_x = 1.0;       // chain_spheres: |x| = radius_x
  double radius_y = 1.0;       // chain_spheres: |y| = radius_y
  double mutual = 1.0;         // chain_spheres: |x - y| = mutual
  double target = 1.0;         // determinant_variety: det = target
  double cutoff_radius = 2.0;  // determinant_variety: ambient ball radius

  static MeasureSpec sphere(std::size_t dim);
  static MeasureSpec triangle2d();
  static MeasureSpec chain_spheres(std::size_t dim, double rx = 1.0, double ry = 1.0,
                                   double mutual = 1.0);
  static MeasureSpec determinant_variety(double target, double cutoff = 2.0);

  /// Number of R^d blocks a frequency for this measure carries.
  std::size_t block_count() const;
  /// Throws Error(invalid_argument) if the variety is empty or unsupported.
  void validate() const;
};

// Fourier transforms use the convention F(xi) = integral of
// exp(-2 pi i x . xi) d mu(x).

/// Surface area of S^{d-1}.
double sphere_area(std::size_t dim);

/// Transform of surface measure on S^{d-1}: 2 pi |xi|^{1-d/2} J_{d/2-1}(2 pi |xi|).
Complex ft_sphere(std::size_t dim, std::span<const double> xi);
double ft_sphere_radial(std::size_t dim, double r);

/// Quadrature oracle for the sphere transform, d in {2, 3}. d = 2 uses the
/// trapezoidal rule with `nodes` angles; d = 3 uses Gauss-Legendre in the
/// polar cosine (`nodes` points) times a 2*nodes-point azimuthal rule.
Complex ft_quadrature(const MeasureSpec& spec, std::span<const double> xi,
                      std::size_t nodes);

/// Transform of the equilateral-pair measure
/// sum over +- of the theta-parametrized circle pairs (u, u rotated by +-60 deg).
/// Equals sum over +- of ft_sphere(2, U_pm(xi, eta)); total mass 4 pi.
Complex ft_triangle(std::span<const double> xi, std::span<const double> eta);

struct MonteCarloOptions {
  double epsilon = 0.01;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t streams = 8;  // fixed, so results do not depend on threads
};

struct MonteCarloEstimate {
  Complex value;
  double stderr_value = 0.0;  // sqrt(var re + var im) / sqrt(samples)
  std::size_t accepted = 0;
};

/// Estimates the transform of the eps-thickened measure
/// (2 eps)^{-1} 1{|constraint| < eps} on the ambient product of spheres
/// (or the cutoff ball for determinant_variety) by uniform sampling. One
/// sample set is shared by all frequencies. Throws Error(infeasible) when no
/// sample is accepted.
std::vector<MonteCarloEstimate> ft_montecarlo(const MeasureSpec& spec,
                                              std::span<const FrequencyPoint> frequencies,
                                              const MonteCarloOptions& options);
MonteCarloEstimate ft_montecarlo(const MeasureSpec& spec, const FrequencyPoint& xi,
                                 const MonteCarloOptions& options);

/// Monte Carlo estimates along the ray {r direction : r in radii}, sharing
/// one sample set; equally spaced radii use a phase recurrence.
std::vector<MonteCarloEstimate> ft_montecarlo_ray(const MeasureSpec& spec,
                                                  const FrequencyPoint& direction,
                                                  std::span<const double> radii,
                                                  const MonteCarloOptions& options);

/// Closed-form transform where one exists (sphere, triangle2d).
std::optional<Complex> ft_closed_form(const MeasureSpec& spec, const FrequencyPoint& xi);

/// Decay order predicted for the measure along a generic direction.
double reference_decay(const MeasureSpec& spec);

struct DecayReport {
  FrequencyPoint direction;
  std::vector<double> radii;
  std::vector<double> magnitudes;
  std::vector<double> error_bars;  // empty unless Monte Carlo
  std::vector<double> envelope_radii;
  std::vector<double> envelope_magnitudes;
  double fitted_exponent = 0.0;
  double stderr_exponent = 0.0;
  double reference_exponent = 0.0;
  bool inconclusive = false;
};

struct DecayFitOptions {
  std::size_t bins_per_decade = 10;
  double floor = 1e-14;  // magnitudes below are dropped
  double min_bin_width = 0.0;  // absolute radius width; set to the oscillation period
};

/// Fits the decay order -slope of log|F(r direction)| against log r on the
/// upper envelope: the maximum of |F| in each logarithmic radius bin. A bin
/// must be wider than one oscillation period for the envelope to track peaks,
/// so narrow low-radius bins are widened to `min_bin_width`.
DecayReport decay_fit(std::span<const double> radii, std::span<const double> magnitudes,
                      const DecayFitOptions& options = {});
DecayReport decay_fit(const std::function<double(double)>& magnitude,
                      std::span<const double> radii, const DecayFitOptions& options = {});

/// Evenly spaced radii r_min, ..., r_max.
std::vector<double> linear_radii(double r_min, double r_max, std::size_t count);

// Curvature certificates.

using ScalarField = std::function<double(std::span<const double>)>;

/// Principal curvatures of the level set {F = t} at x0: eigenvalues of the
/// central-difference Hessian restricted to the tangent space, divided by
/// |grad F|. Sorted by decreasing magnitude. Requires |F(x0) - t| <= 1e-9
/// and |grad F(x0)| >= 1e-6.
std::vector<double> level_set_curvatures(const ScalarField& field, double t,
                                         std::span<const double> x0, double h = 1e-4);

/// A named level set {field = t} with a point x0 on it.
struct LevelSetExample {
  std::string name;
  ScalarField field;
  double t = 0.0;
  std::vector<double> x0;
};

/// Built-in level sets, parametrized by d:
///   sphere       |x|^2 = 1 in R^d at e_1
///   determinant  det[u^1 ... u^d] = 1 in R^{d^2} at the identity
///   paired       sum_i x_{2i-1} y_{2i} - x_{2i} y_{2i-1} = 1 in R^{2d} (d even)
///   rotated      sum_i (-1)^{i+1} (u_i^2 + v_i^2) = 1 in R^{2d} at u_1 = 1
///   affine       x_1 + ... + x_d = 0 in R^d at the origin
LevelSetExample level_set_example(const std::string& name, std::size_t d);

/// Eigenvalues with |lambda| > relative_tol * max |lambda|.
std::size_t count_nonzero(std::span<const double> eigenvalues, double relative_tol = 1e-6);

/// Determinant of the (d-1)x(d-1) matrix with unit diagonal and 1/2 elsewhere.
double circulant_check(std::size_t d);

struct PhaseHessian {
  Eigen::MatrixXd matrix;  // (2d-3) x (2d-3)
  std::size_t rank = 0;    // singular values above 1e-10 * largest
  double p = 0.0;
  double q_det = 0.0;      // determinant of the repeated 2x2 block
};

/// Block Hessian p I_1 (+) (d-2) copies of [[q11, q12], [q12, q22]] of the
/// three-sphere chain phase at the base point, for xi, eta in R^d, d >= 3.
PhaseHessian phase_hessian(std::size_t d, std::span<const double> xi,
                           std::span<const double> eta);

/// xi_d putting (xi, eta) on the plane {p = 0}.
double plane_xi_d(double eta_1, double eta_d);

/// The 2x2 block determinant on {p = 0} as an explicit quadratic in
/// (eta_1, eta_d): a eta_1^2 + b eta_1 eta_d + c eta_d^2.
struct QuadraticForm {
  double a = 0.0, b = 0.0, c = 0.0;
  double operator()(double u, double v) const { return a * u * u + b * u * v + c * v * v; }
  double discriminant() const { return b * b - 4.0 * a * c; }
};
QuadraticForm plane_block_form();

}  // namespace configeo::fourier
