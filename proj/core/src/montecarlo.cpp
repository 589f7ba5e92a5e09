#include <cmath>
#include <numbers>

#include "configeo/error.hpp"
#include "configeo/fourier.hpp"
#include "configeo/parallel.hpp"
#include "configeo/rng.hpp"

namespace configeo::fourier {

namespace {

constexpr double kPi = std::numbers::pi;

void unit_vector(Rng& rng, std::size_t dim, double* out) {
  if (dim == 2) {
    const double angle = 2.0 * kPi * rng.uniform();
    out[0] = std::cos(angle);
    out[1] = std::sin(angle);
    return;
  }
  if (dim == 3) {
    // Archimedes: the height is uniform on [-1, 1].
    const double z = 2.0 * rng.uniform() - 1.0;
    const double angle = 2.0 * kPi * rng.uniform();
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    out[0] = rho * std::cos(angle);
    out[1] = rho * std::sin(angle);
    out[2] = z;
    return;
  }
  double norm = 0.0;
  do {
    norm = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      out[c] = rng.normal();
      norm += out[c] * out[c];
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  for (std::size_t c = 0; c < dim; ++c) out[c] /= norm;
}

double ball_volume(std::size_t dim, double radius) {
  const double half = static_cast<double>(dim) / 2.0;
  return std::pow(kPi, half) / std::tgamma(half + 1.0) * std::pow(radius, double(dim));
}

double det3(const double* u) {
  return u[0] * (u[4] * u[8] - u[5] * u[7]) - u[1] * (u[3] * u[8] - u[5] * u[6]) +
         u[2] * (u[3] * u[7] - u[4] * u[6]);
}

// Draws one ambient sample; returns its weight, 0 when the constraint band
// rejects it. `x` receives the concatenated blocks.
class AmbientSampler {
 public:
  AmbientSampler(const MeasureSpec& spec, double epsilon) : spec_(spec), eps_(epsilon) {
    const std::size_t d = spec.dim;
    switch (spec.kind) {
      case MeasureKind::sphere:
        weight_ = sphere_area(d);
        break;
      case MeasureKind::triangle2d:
        weight_ = 4.0 * kPi * kPi / (2.0 * eps_);
        break;
      case MeasureKind::chain_spheres:
        weight_ = sphere_area(d) * std::pow(spec.radius_x, double(d - 1)) * sphere_area(d) *
                  std::pow(spec.radius_y, double(d - 1)) / (2.0 * eps_);
        break;
      case MeasureKind::determinant_variety:
        weight_ = ball_volume(d * d, spec.cutoff_radius) / (2.0 * eps_);
        break;
    }
  }

  std::size_t width() const { return spec_.block_count() * spec_.dim; }

  double draw(Rng& rng, double* x) const {
    const std::size_t d = spec_.dim;
    switch (spec_.kind) {
      case MeasureKind::sphere:
        unit_vector(rng, d, x);
        return weight_;
      case MeasureKind::triangle2d: {
        const double a = 2.0 * kPi * rng.uniform();
        const double b = 2.0 * kPi * rng.uniform();
        x[0] = std::cos(a);
        x[1] = std::sin(a);
        x[2] = std::cos(b);
        x[3] = std::sin(b);
        const double gap = std::hypot(x[0] - x[2], x[1] - x[3]) - 1.0;
        if (!(std::abs(gap) < eps_)) return 0.0;
        // |d|u - v| / d theta_2|: turns the band limit into the theta-parametrized measure.
        return weight_ * std::abs(std::cos(0.5 * (b - a)));
      }
      case MeasureKind::chain_spheres: {
        unit_vector(rng, d, x);
        unit_vector(rng, d, x + d);
        double sq = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
          x[c] *= spec_.radius_x;
          x[d + c] *= spec_.radius_y;
          const double diff = x[c] - x[d + c];
          sq += diff * diff;
        }
        return std::abs(std::sqrt(sq) - spec_.mutual) < eps_ ? weight_ : 0.0;
      }
      case MeasureKind::determinant_variety: {
        const std::size_t n = d * d;
        unit_vector(rng, n, x);
        const double r = spec_.cutoff_radius * std::pow(rng.uniform(), 1.0 / double(n));
        for (std::size_t c = 0; c < n; ++c) x[c] *= r;
        // Blocks are the columns u^1, u^2, u^3; det is invariant under transposition.
        return std::abs(det3(x) - spec_.target) < eps_ ? weight_ : 0.0;
      }
    }
    return 0.0;
  }

 private:
  const MeasureSpec& spec_;
  double eps_;
  double weight_ = 1.0;
};

struct Moments {
  std::vector<double> re, im, re2, im2;
  std::size_t samples = 0;
  std::size_t accepted = 0;

  explicit Moments(std::size_t m) : re(m, 0.0), im(m, 0.0), re2(m, 0.0), im2(m, 0.0) {}

  void add(std::size_t j, double c, double s) {
    re[j] += c;
    im[j] += s;
    re2[j] += c * c;
    im2[j] += s * s;
  }
};

void check_options(const MeasureSpec& spec, const MonteCarloOptions& options) {
  spec.validate();
  require(options.epsilon > 0.0 && options.epsilon <= 0.2, "epsilon must lie in (0, 0.2]");
  require(options.samples >= 10'000, "Monte Carlo needs at least 10^4 samples");
  require(options.streams >= 1, "Monte Carlo needs at least one stream");
}

// Runs the seeded streams and hands every accepted sample to `accumulate`,
// which adds weight * exp(-2 pi i phase) terms into per-stream moments.
template <class Accumulate>
std::vector<MonteCarloEstimate> run_streams(const MeasureSpec& spec,
                                            const MonteCarloOptions& options,
                                            std::size_t outputs, Accumulate&& accumulate) {
  check_options(spec, options);
  const AmbientSampler sampler(spec, options.epsilon);
  std::vector<Moments> per_stream(options.streams, Moments(outputs));

  parallel_chunks(options.streams, 1, [&](std::size_t begin, std::size_t end) {
    std::vector<double> x(sampler.width());
    for (std::size_t s = begin; s < end; ++s) {
      Rng rng = Rng::stream(options.seed, s);
      Moments& m = per_stream[s];
      m.samples = options.samples / options.streams +
                  (s < options.samples % options.streams ? 1 : 0);
      for (std::size_t i = 0; i < m.samples; ++i) {
        const double w = sampler.draw(rng, x.data());
        if (w == 0.0) continue;
        ++m.accepted;
        accumulate(m, w, x);
      }
    }
  });

  Moments total(outputs);
  for (const auto& m : per_stream) {
    total.samples += m.samples;
    total.accepted += m.accepted;
    for (std::size_t j = 0; j < outputs; ++j) {
      total.re[j] += m.re[j];
      total.im[j] += m.im[j];
      total.re2[j] += m.re2[j];
      total.im2[j] += m.im2[j];
    }
  }
  if (total.accepted == 0) {
    fail(ErrorCode::infeasible, std::string("no Monte Carlo sample hit the ") +
                                    to_string(spec.kind) + " constraint band");
  }

  const double n = static_cast<double>(total.samples);
  std::vector<MonteCarloEstimate> out(outputs);
  for (std::size_t j = 0; j < outputs; ++j) {
    const double mr = total.re[j] / n, mi = total.im[j] / n;
    const double vr = std::max(0.0, total.re2[j] / n - mr * mr);
    const double vi = std::max(0.0, total.im2[j] / n - mi * mi);
    out[j].value = {mr, mi};
    out[j].stderr_value = std::sqrt((vr + vi) / n);
    out[j].accepted = total.accepted;
  }
  return out;
}

std::vector<double> flatten(const MeasureSpec& spec, const FrequencyPoint& xi) {
  require(xi.blocks.size() == spec.block_count(),
          "frequency has " + std::to_string(xi.blocks.size()) + " blocks, measure needs " +
              std::to_string(spec.block_count()));
  std::vector<double> flat;
  for (const auto& block : xi.blocks) {
    require(block.size() == spec.dim, "frequency block dimension must equal d");
    flat.insert(flat.end(), block.begin(), block.end());
  }
  return flat;
}

bool equally_spaced(std::span<const double> radii) {
  if (radii.size() < 3) return false;
  const double step = (radii.back() - radii.front()) / static_cast<double>(radii.size() - 1);
  if (!(step > 0.0)) return false;
  for (std::size_t j = 0; j < radii.size(); ++j) {
    const double expect = radii.front() + step * static_cast<double>(j);
    if (std::abs(radii[j] - expect) > 1e-9 * std::max(1.0, std::abs(expect))) return false;
  }
  return true;
}

}  // namespace

std::vector<MonteCarloEstimate> ft_montecarlo(const MeasureSpec& spec,
                                              std::span<const FrequencyPoint> frequencies,
                                              const MonteCarloOptions& options) {
  std::vector<std::vector<double>> flat;
  flat.reserve(frequencies.size());
  for (const auto& f : frequencies) flat.push_back(flatten(spec, f));
  return run_streams(spec, options, flat.size(),
                     [&](Moments& m, double w, const std::vector<double>& x) {
                       for (std::size_t j = 0; j < flat.size(); ++j) {
                         double dot = 0.0;
                         for (std::size_t c = 0; c < x.size(); ++c) dot += x[c] * flat[j][c];
                         const double phase = -2.0 * kPi * dot;
                         m.add(j, w * std::cos(phase), w * std::sin(phase));
                       }
                     });
}

MonteCarloEstimate ft_montecarlo(const MeasureSpec& spec, const FrequencyPoint& xi,
                                 const MonteCarloOptions& options) {
  return ft_montecarlo(spec, std::span<const FrequencyPoint>(&xi, 1), options).front();
}

std::vector<MonteCarloEstimate> ft_montecarlo_ray(const MeasureSpec& spec,
                                                  const FrequencyPoint& direction,
                                                  std::span<const double> radii,
                                                  const MonteCarloOptions& options) {
  const std::vector<double> dir = flatten(spec, direction);
  const bool recurrence = equally_spaced(radii);
  const double step = recurrence ? (radii.back() - radii.front()) /
                                       static_cast<double>(radii.size() - 1)
                                 : 0.0;
  return run_streams(
      spec, options, radii.size(), [&](Moments& m, double w, const std::vector<double>& x) {
        double dot = 0.0;
        for (std::size_t c = 0; c < x.size(); ++c) dot += x[c] * dir[c];
        const double base = -2.0 * kPi * dot;
        if (!recurrence) {
          for (std::size_t j = 0; j < radii.size(); ++j) {
            m.add(j, w * std::cos(base * radii[j]), w * std::sin(base * radii[j]));
          }
          return;
        }
        const double rc = std::cos(base * step), rs = std::sin(base * step);
        double c = 0.0, s = 0.0;
        for (std::size_t j = 0; j < radii.size(); ++j) {
          if (j % 64 == 0) {
            // Re-anchor so rounding in the rotation does not accumulate.
            c = std::cos(base * radii[j]);
            s = std::sin(base * radii[j]);
          }
          m.add(j, w * c, w * s);
          const double nc = c * rc - s * rs;
          s = s * rc + c * rs;
          c = nc;
        }
      });
}

}  // namespace configeo::fourier
