#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "configeo/configcount.hpp"
#include "configeo/error.hpp"
#include "configeo/pointset.hpp"
#include "testing.hpp"

namespace configeo {
namespace {

using testing::Gen;

std::vector<double> sorted_distances(const PointSet& p) {
  std::vector<double> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) out.push_back(testing::dist(p, i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Lattice, SquareCorners) {
  const auto p = pointgen::lattice(2, 2);
  ASSERT_EQ(p.size(), 4u);
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < 4; ++i) pts.emplace_back(p.point(i)[0], p.point(i)[1]);
  std::sort(pts.begin(), pts.end());
  const std::vector<std::pair<double, double>> want{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(pts, want);
}

TEST(Lattice, OneDimensionalThreePoints) {
  const auto p = pointgen::lattice(1, 3);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.point(0)[0], 0.0);
  EXPECT_EQ(p.point(1)[0], 0.5);
  EXPECT_EQ(p.point(2)[0], 1.0);
}

TEST(Lattice, HundredPointsSeparationOneNinth) {
  const auto p = pointgen::lattice(2, 10);
  EXPECT_EQ(p.size(), 100u);
  ASSERT_TRUE(p.meta().separation.has_value());
  EXPECT_DOUBLE_EQ(*p.meta().separation, 1.0 / 9.0);
  EXPECT_NEAR(min_separation(p), 1.0 / 9.0, 1e-15);
  EXPECT_EQ(*p.meta().nominal_dimension, 2.0);
}

TEST(Lattice, SidelengthOneIsOrigin) {
  const auto p = pointgen::lattice(3, 1);
  ASSERT_EQ(p.size(), 1u);
  for (double c : p.point(0)) EXPECT_EQ(c, 0.0);
  EXPECT_FALSE(p.meta().separation.has_value());
}

TEST(Lattice, BudgetExceededIsCapacityError) {
  try {
    (void)pointgen::lattice(3, 200, 1000);
    FAIL() << "expected a capacity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::capacity);
  }
}

TEST(Lattice, DistanceMultisetInvariantUnderCubeSymmetries) {
  Gen g(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = g.index(1, 3), m = g.index(2, 5);
    const auto p = pointgen::lattice(d, m);
    const auto perm = g.permutation(d);
    std::vector<bool> flip(d);
    for (std::size_t c = 0; c < d; ++c) flip[c] = g.coin();
    const auto q = p.transformed([&](std::span<const double> in, std::span<double> out) {
      for (std::size_t c = 0; c < d; ++c) {
        const double v = in[perm[c]];
        out[c] = flip[c] ? 1.0 - v : v;
      }
    });
    const auto a = sorted_distances(p), b = sorted_distances(q);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
  }
}

TEST(Cantor, FirstLevelOneThird) {
  const auto p = pointgen::cantor(1, 1.0 / 3.0, 1);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.point(0)[0], 0.0);
  EXPECT_NEAR(p.point(1)[0], 2.0 / 3.0, 1e-15);
}

TEST(Cantor, LevelEightNominalDimension) {
  const auto p = pointgen::cantor(1, 1.0 / 3.0, 8);
  EXPECT_EQ(p.size(), 256u);
  EXPECT_NEAR(*p.meta().nominal_dimension, std::log(2.0) / std::log(3.0), 1e-15);
  EXPECT_NEAR(*p.meta().nominal_dimension, 0.6309, 1e-4);
}

TEST(Cantor, PlanarQuarterRatioDimensionOne) {
  const auto p = pointgen::cantor(2, 0.25, 3);
  EXPECT_EQ(p.size(), 64u);
  EXPECT_NEAR(*p.meta().nominal_dimension, 1.0, 1e-15);
}

TEST(Cantor, RejectsRatioAtOneHalf) {
  EXPECT_THROW((void)pointgen::cantor(1, 0.5, 2), Error);
  EXPECT_THROW((void)pointgen::cantor(1, 0.0, 2), Error);
}

TEST(Cantor, NextLevelPointsStayNearPreviousLevel) {
  Gen g(17);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t d = g.index(1, 2), level = g.index(0, 4);
    const double r = g.real(0.05, 0.49);
    const auto coarse = pointgen::cantor(d, r, level);
    const auto fine = pointgen::cantor(d, r, level + 1);
    const double reach = std::pow(r, double(level)) * std::sqrt(double(d)) + 1e-12;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      double best = 1e9;
      for (std::size_t j = 0; j < coarse.size(); ++j) {
        best = std::min(best, distance(fine.point(i), coarse.point(j)));
      }
      ASSERT_LE(best, reach) << "d=" << d << " r=" << r << " L=" << level;
    }
  }
}

TEST(Random, SameSeedSamePoints) {
  const auto a = pointgen::uniform_random(2, 5, 7);
  const auto b = pointgen::uniform_random(2, 5, 7);
  EXPECT_EQ(format_pointset(a), format_pointset(b));
  EXPECT_NE(format_pointset(a), format_pointset(pointgen::uniform_random(2, 5, 8)));
}

TEST(Random, CoordinatesInUnitCube) {
  const auto p = pointgen::uniform_random(3, 1000, 1);
  for (double c : p.coords()) {
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
  }
}

TEST(Random, BoxDimensionNearTwo) {
  const auto p = pointgen::uniform_random(2, 2000, 1);
  const std::vector<double> scales{0.25, 0.125, 0.0625};
  const auto rep = count::box_dim(p, scales);
  EXPECT_NEAR(rep.slope, 2.0, 0.15);
}

TEST(Coplanar, ThreePointsAreCollinear) {
  const auto p = pointgen::coplanar(2, 3, 1);
  ASSERT_EQ(p.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(p.point(i)[1], 0.5);
}

TEST(Coplanar, EveryTetrahedronIsFlat) {
  const auto p = pointgen::coplanar(3, 50, 2);
  Gen g(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto perm = g.permutation(p.size());
    const std::vector<std::size_t> idx(perm.begin(), perm.begin() + 4);
    EXPECT_EQ(count::simplex_measure(p, idx, count::VolumeConvention::bare_determinant), 0.0);
  }
}

TEST(Coplanar, VolumeCountIsZero) {
  const auto p = pointgen::coplanar(2, 100, 3);
  EXPECT_EQ(count::count_volume(p, 0.1, 0.01).count, 0u);
}

TEST(Homogeneous, JitteredCellsKeepSeparation) {
  const auto p = pointgen::homogeneous(2, 400, 9);
  EXPECT_EQ(p.size(), 400u);
  EXPECT_GE(min_separation(p), 0.5 / 20.0 - 1e-12);
}

TEST(Generate, PureFunctionOfSpec) {
  Gen g(23);
  const std::vector<pointgen::Kind> kinds{pointgen::Kind::lattice,
                                          pointgen::Kind::cantor_product,
                                          pointgen::Kind::homogeneous,
                                          pointgen::Kind::uniform_random,
                                          pointgen::Kind::coplanar};
  for (int trial = 0; trial < 30; ++trial) {
    pointgen::GeneratorSpec spec;
    spec.kind = g.pick(kinds);
    spec.dim = g.index(2, 3);
    spec.side = g.index(1, 6);
    spec.ratio = g.real(0.1, 0.45);
    spec.level = g.index(0, 3);
    spec.count = g.index(1, 50);
    spec.seed = g.index(0, 1000);
    const auto a = pointgen::generate(spec), b = pointgen::generate(spec);
    EXPECT_EQ(format_pointset(a), format_pointset(b));
    for (double c : a.coords()) {
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 1.0);
    }
  }
}

TEST(PointSet, RejectsCoordinatesOutsideUnitCube) {
  EXPECT_THROW(PointSet(2, {0.0, 1.5}), Error);
  EXPECT_THROW(PointSet(2, {0.0, -0.1}), Error);
  EXPECT_THROW(PointSet(2, {0.0, 0.5, 0.2}), Error);
}

TEST(PointSetFile, RoundTripIsBitExact) {
  Gen g(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = pointgen::uniform_random(g.index(1, 4), g.index(1, 40), g.index(0, 99));
    const std::string text = format_pointset(p);
    const auto q = parse_pointset(text);
    EXPECT_EQ(p, q);
    EXPECT_EQ(format_pointset(q), text);
  }
  const auto c = pointgen::cantor(2, 0.3, 2);
  EXPECT_EQ(parse_pointset(format_pointset(c)), c);
}

TEST(PointSetFile, HeaderAndSeventeenDigits) {
  const auto p = pointgen::lattice(1, 4);
  const std::string text = format_pointset(p);
  EXPECT_EQ(text.rfind("pointset v1 d=1 n=4\n", 0), 0u);
  EXPECT_NE(text.find("0.33333333333333331\n"), std::string::npos);
}

TEST(PointSetFile, RejectsMismatches) {
  auto expect_parse_error = [](const std::string& text) {
    try {
      (void)parse_pointset(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::parse);
    }
  };
  expect_parse_error("pointset v1 d=2 n=2\n0 0\n1\n");
  expect_parse_error("pointset v1 d=2 n=3\n0 0\n1 1\n");
  expect_parse_error("pointset v1 d=2 n=1\n0 0\n1 1\n");
  expect_parse_error("pointset v2 d=2 n=1\n0 0\n");
  expect_parse_error("pointset v1 d=1 n=1\nabc\n");
}

}  // namespace
}  // namespace configeo
