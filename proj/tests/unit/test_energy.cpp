#include <gtest/gtest.h>

#include <cmath>

#include "configeo/energy.hpp"
#include "configeo/error.hpp"
#include "configeo/parallel.hpp"
#include "configeo/pointset.hpp"
#include "testing.hpp"

namespace configeo {
namespace {

using energy::discrete_energy;
using testing::Gen;
using testing::make_points;
using testing::rel_diff;

// Naive double loop in long double.
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

TEST(DiscreteEnergy, TwoPointsUnitDistance) {
  const auto p = make_points(2, {0, 0, 1, 0});
  EXPECT_EQ(discrete_energy(p, 1.0), 0.5);
  EXPECT_EQ(discrete_energy(p, 2.0), 0.5);
}

TEST(DiscreteEnergy, SinglePointIsZero) {
  const auto p = make_points(3, {0.2, 0.3, 0.4});
  EXPECT_EQ(discrete_energy(p, 0.7), 0.0);
  EXPECT_EQ(discrete_energy(p, 5.0), 0.0);
}

TEST(DiscreteEnergy, HalvingDoublesAtSOne) {
  const auto p = make_points(2, {0, 0, 1, 0});
  const auto q = make_points(2, {0, 0, 0.5, 0});
  EXPECT_DOUBLE_EQ(discrete_energy(q, 1.0), 2.0 * discrete_energy(p, 1.0));
}

TEST(DiscreteEnergy, ThreePointLatticeHandValue) {
  // Ordered pairs: four at distance 1/2, two at distance 1.
  EXPECT_NEAR(discrete_energy(pointgen::lattice(1, 3), 1.0), 10.0 / 9.0, 1e-15);
}

TEST(DiscreteEnergy, CoincidentPointsRaise) {
  const auto p = make_points(2, {0.3, 0.3, 0.3, 0.3});
  try {
    (void)discrete_energy(p, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::coincident_points);
  }
}

TEST(DiscreteEnergy, RejectsNonpositiveExponent) {
  EXPECT_THROW((void)discrete_energy(pointgen::lattice(1, 3), 0.0), Error);
}

TEST(DiscreteEnergy, MatchesNaiveOracle) {
  Gen g(101);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = g.points(g.index(2, 200), g.index(1, 3));
    const double s = g.real(0.2, 2.5);
    EXPECT_LE(rel_diff(discrete_energy(p, s), oracle_energy(p, s)), 1e-12);
  }
}

TEST(DiscreteEnergy, RigidMotionInvariance) {
  Gen g(102);
  for (int trial = 0; trial < 20; ++trial) {
    // Points in a small disc near the centre so the rotated copy stays in bounds.
    std::vector<double> c;
    const std::size_t n = g.index(2, 80);
    for (std::size_t i = 0; i < n; ++i) {
      c.push_back(0.3 + 0.4 * g.real(0, 1));
      c.push_back(0.3 + 0.4 * g.real(0, 1));
    }
    const auto p = make_points(2, c);
    const double a = g.real(0, 6.28), sx = g.real(-0.1, 0.1), sy = g.real(-0.1, 0.1);
    const auto q = p.transformed([&](std::span<const double> in, std::span<double> out) {
      const double x = in[0] - 0.5, y = in[1] - 0.5;
      out[0] = 0.5 + std::cos(a) * x - std::sin(a) * y + sx;
      out[1] = 0.5 + std::sin(a) * x + std::cos(a) * y + sy;
    });
    const double s = g.real(0.3, 2.0);
    EXPECT_LE(rel_diff(discrete_energy(p, s), discrete_energy(q, s)), 1e-12);
  }
}

TEST(DiscreteEnergy, ScalingLaw) {
  Gen g(103);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = g.points(g.index(2, 60), g.index(1, 3));
    const double lambda = g.real(0.1, 1.0), s = g.real(0.2, 3.0);
    const auto q = p.transformed([&](std::span<const double> in, std::span<double> out) {
      for (std::size_t c = 0; c < in.size(); ++c) out[c] = lambda * in[c];
    });
    EXPECT_LE(rel_diff(discrete_energy(q, s), std::pow(lambda, -s) * discrete_energy(p, s)),
              1e-12);
  }
}

TEST(DiscreteEnergy, PermutationInvariance) {
  Gen g(104);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = g.index(2, 100), d = g.index(1, 3);
    const auto p = g.points(n, d);
    const auto perm = g.permutation(n);
    std::vector<double> c;
    for (auto i : perm) c.insert(c.end(), p.point(i).begin(), p.point(i).end());
    const auto q = make_points(d, c);
    EXPECT_LE(rel_diff(discrete_energy(p, 1.3), discrete_energy(q, 1.3)), 1e-12);
  }
}

TEST(DiscreteEnergy, ThreadCountDoesNotChangeValue) {
  const auto p = pointgen::uniform_random(2, 500, 4);
  set_thread_count(1);
  const double serial = discrete_energy(p, 1.5);
  set_thread_count(4);
  const double parallel = discrete_energy(p, 1.5);
  set_thread_count(0);
  EXPECT_EQ(serial, parallel);
}

TEST(IsAdaptable, LatticeTwentyAtOnePointFive) {
  const auto rep = energy::is_adaptable(pointgen::lattice(2, 20), 1.5, 10.0);
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.n, 400u);
  EXPECT_EQ(rep.adaptable_at, 10.0);
}

TEST(IsAdaptable, NearCoincidentPairFails) {
  const auto p = make_points(1, {0.5, 0.5 + 1e-9});
  const auto rep = energy::is_adaptable(p, 1.9, 10.0);
  EXPECT_FALSE(rep.verdict);
  EXPECT_NEAR(std::log10(rep.value), 1.9 * 9.0 + std::log10(0.5), 1e-3);
}

TEST(IsAdaptable, SinglePointAlwaysAdaptable) {
  const auto rep = energy::is_adaptable(make_points(2, {0.1, 0.1}), 3.0, 0.5);
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.value, 0.0);
}

TEST(IsAdaptable, LatticePlateau) {
  std::vector<double> values;
  for (std::size_t m : {10, 20, 40}) values.push_back(discrete_energy(pointgen::lattice(2, m), 1.5));
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  EXPECT_LE(*hi / *lo, 1.5);
}

TEST(EnergyProfile, TwoPointGrid) {
  const auto p = make_points(2, {0, 0, 1, 0});
  const std::vector<double> grid{1.0, 2.0};
  const auto prof = energy::energy_profile(p, grid);
  ASSERT_EQ(prof.size(), 2u);
  EXPECT_EQ(prof[0].first, 1.0);
  EXPECT_EQ(prof[0].second, 0.5);
  EXPECT_EQ(prof[1].second, 0.5);
}

TEST(EnergyProfile, EmptyGrid) {
  EXPECT_TRUE(energy::energy_profile(pointgen::lattice(1, 3), {}).empty());
}

TEST(EnergyProfile, LatticeThreeAtOne) {
  const std::vector<double> grid{1.0};
  EXPECT_NEAR(energy::energy_profile(pointgen::lattice(1, 3), grid)[0].second, 10.0 / 9.0,
              1e-15);
}

}  // namespace
}  // namespace configeo
