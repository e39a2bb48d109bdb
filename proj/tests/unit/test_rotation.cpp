#include <gtest/gtest.h>

#include <random>

#include "anisogate/error.hpp"
#include "anisogate/rotation.hpp"
#include "oracles.hpp"

using namespace anisogate;

namespace {

Rotation random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Quaternion q{n(rng), n(rng), n(rng), n(rng)};
  const double k = q.norm();
  return {{q.w / k, q.x / k, q.y / k, q.z / k}, 0.0};
}

oracle::M su2_of(const Rotation& r) {
  const Vec3 a = r.axis();
  return oracle::su2(a.x(), a.y(), a.z(), 2.0 * std::acos(std::clamp(r.quaternion.w, -1.0, 1.0)));
}

}  // namespace

TEST(Compose, Identity) {
  const Rotation r = Rotation::about(Vec3(0.3, -0.2, 0.9).normalized(), 1.1, 2.0);
  const Rotation c = compose(r, Rotation::identity());
  EXPECT_EQ(c.quaternion, r.quaternion);
  EXPECT_EQ(c.accumulatedLambda, 2.0);
}

TEST(Compose, DoubleCoverSign) {
  const Vec3 n = Vec3(0.0, 0.6, 0.8);
  const Rotation r = compose(Rotation::about(n, kPi), Rotation::about(n, kPi));
  EXPECT_NEAR(r.quaternion.w, -1.0, 1e-15);
  EXPECT_NEAR(r.quaternion.vec().norm(), 0.0, 1e-15);
  EXPECT_NEAR(r.angle(), kTwoPi, 1e-12);  // spinor -1: 2 pi, i.e. identity as a rotation
  EXPECT_NEAR(rotation_distance(r, Rotation::identity()), 0.0, 1e-15);
}

TEST(Compose, MatchesMatrixProduct) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Rotation a = random_rotation(rng), b = random_rotation(rng);
    const oracle::M expected = oracle::M(b.quaternion.su2()) * oracle::M(a.quaternion.su2());
    EXPECT_LT((oracle::M(compose(a, b).quaternion.su2()) - expected).norm(), 1e-13);
  }
}

TEST(Compose, SU2MatchesExponential) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Rotation r = random_rotation(rng);
    const oracle::M m = su2_of(r);
    const oracle::M q = r.quaternion.su2();
    EXPECT_LT((m - q).norm(), 1e-12);
  }
}

TEST(Compose, Associative) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rotation a = random_rotation(rng), b = random_rotation(rng), c = random_rotation(rng);
    const Quaternion l = compose(compose(a, b), c).quaternion;
    const Quaternion r = compose(a, compose(b, c)).quaternion;
    EXPECT_NEAR(l.w, r.w, 1e-12);
    EXPECT_NEAR((l.vec() - r.vec()).norm(), 0.0, 1e-12);
  }
}

TEST(Compose, LongChainsKeepUnitNormAndExactLambda) {
  std::mt19937_64 rng(4);
  Rotation acc;
  double lambda = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Rotation r = random_rotation(rng);
    r.accumulatedLambda = 0.125 * (i % 7);
    lambda += r.accumulatedLambda;
    acc = compose(acc, r);
  }
  EXPECT_NEAR(acc.quaternion.norm(), 1.0, 1e-12);
  EXPECT_EQ(acc.accumulatedLambda, lambda);
}

TEST(PiPair, EqualAxesGiveSpinorMinusOne) {
  const Rotation r = pi_pair(yz_axis(0.3), yz_axis(0.3));
  EXPECT_NEAR(r.quaternion.w, -1.0, 1e-15);
}

TEST(PiPair, EighthPiSeparationGivesQuarterPi) {
  const Rotation r = pi_pair(yz_axis(kPi / 8), yz_axis(0.0));
  EXPECT_LT(rotation_distance(r, Rotation::about_x(kPi / 4)), 1e-15);
  const Rotation swapped = pi_pair(yz_axis(0.0), yz_axis(kPi / 8));
  EXPECT_LT(rotation_distance(swapped, Rotation::about_x(-kPi / 4)), 1e-15);
}

TEST(PiPair, MatchesMatrixOracleOnGrid) {
  for (int i = 0; i <= 50; ++i) {
    const double theta = 0.01 + (1.5 - 0.01) * i / 50.0;
    const Vec3 n1 = yz_axis(theta / 2), n2 = yz_axis(-theta / 2);
    const Rotation r = pi_pair(n1, n2);
    const oracle::M expected =
        oracle::su2(n2.x(), n2.y(), n2.z(), kPi) * oracle::su2(n1.x(), n1.y(), n1.z(), kPi);
    EXPECT_LT((oracle::M(r.quaternion.su2()) - expected).norm(), 1e-13);
    EXPECT_LT((r.axis_towards(Vec3::UnitX()) - Vec3::UnitX()).norm(), 1e-12);
    // a product of two pi rotations carries spinor sign -1: w = -cos(theta)
    EXPECT_NEAR(r.quaternion.w, -std::cos(theta), 1e-15);
    EXPECT_LT(rotation_distance(r, Rotation::about_x(2 * theta)), 1e-12);
  }
}

TEST(PiPair, RejectsAxesOutsideYZ) {
  EXPECT_THROW(pi_pair(Vec3(0.1, 0.0, std::sqrt(0.99)), Vec3::UnitZ()), Error);
}

TEST(PiPairWithErrors, ZeroErrors) {
  const auto e = pi_pair_with_errors(yz_axis(0.1), yz_axis(-0.1), 0.0, 0.0);
  EXPECT_EQ(e.firstOrder.tiltYPrime, 0.0);
  EXPECT_EQ(e.firstOrder.tiltZPrime, 0.0);
  EXPECT_NEAR(e.firstOrder.anglePredicted, 0.4, 1e-14);
}

TEST(PiPairWithErrors, OppositeErrorsTiltOnlyInYPrime) {
  // The first-order tilt along y' is -(d1 - d2) / (4 cos(theta/2)).
  const auto e = pi_pair_with_errors(yz_axis(0.1), yz_axis(-0.1), 0.01, -0.01);
  EXPECT_NEAR(e.firstOrder.tiltYPrime, -0.02 / (4 * std::cos(0.1)), 1e-15);
  EXPECT_NEAR(e.firstOrder.tiltYPrime, -0.005025, 1e-6);
  EXPECT_EQ(e.firstOrder.tiltZPrime, 0.0);
}

TEST(PiPairWithErrors, ResidualIsSecondOrder) {
  const Vec3 n1 = yz_axis(0.1), n2 = yz_axis(-0.1);
  std::vector<double> residuals;
  for (double d = 0.02; d > 0.001; d /= 2) {
    const auto e = pi_pair_with_errors(n1, n2, d, 0.37 * d);
    residuals.push_back((e.exact.axis_towards(Vec3::UnitX()) - e.firstOrder.predicted_axis()).norm());
  }
  for (std::size_t i = 1; i < residuals.size(); ++i) EXPECT_NEAR(residuals[i - 1] / residuals[i], 4.0, 0.1);
}

TEST(PiPairWithErrors, ZPrimeTiltMatchesLeadingOrderOfCaption) {
  // (d1 + d2) / (4 sin(theta/2)) -> (d1 + d2) / (2 theta) for small theta
  const double theta = 0.02;
  const auto e = pi_pair_with_errors(yz_axis(theta / 2), yz_axis(-theta / 2), 1e-4, 2e-4);
  EXPECT_NEAR(e.firstOrder.tiltZPrime, 3e-4 / (2 * theta), 1e-6);
}

TEST(PiPairWithErrors, CoincidentAxesAreSingular) {
  try {
    pi_pair_with_errors(yz_axis(0.1), yz_axis(0.1), 0.01, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(Euler, SingleAxisTargets) {
  const Vec3 w = yz_axis(0.2);
  const EulerAngles a = euler_decompose(Rotation::about(w, 0.7), w);
  EXPECT_NEAR(a.a, 0.7, 1e-12);
  EXPECT_NEAR(a.b, 0.0, 1e-12);
  EXPECT_NEAR(a.c, 0.0, 1e-12);

  const EulerAngles x = euler_decompose(Rotation::about_x(0.9), w);
  EXPECT_NEAR(std::remainder(x.a, kTwoPi), 0.0, 1e-12);
  EXPECT_NEAR(x.b, 0.9, 1e-12);
  EXPECT_NEAR(std::remainder(x.c, kTwoPi), 0.0, 1e-12);
}

TEST(Euler, RandomTargetsRecompose) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> th(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Rotation target = random_rotation(rng);
    const Vec3 w = yz_axis(th(rng));
    const EulerAngles e = euler_decompose(target, w);
    EXPECT_LT(rotation_distance(euler_compose(e, w), target), 1e-10);
    EXPECT_GT(e.a, -kTwoPi);
    EXPECT_LE(e.a, kTwoPi);
    EXPECT_GT(e.c, -kTwoPi);
    EXPECT_LE(e.c, kTwoPi);
  }
}

TEST(Euler, GimbalLockSetsCToZero) {
  const Vec3 w = yz_axis(-0.3);
  const Rotation target = compose(Rotation::about(w, 0.4), Rotation::about_x(kPi));
  const EulerAngles e = euler_decompose(target, w);
  EXPECT_EQ(e.c, 0.0);
  EXPECT_LT(rotation_distance(euler_compose(e, w), target), 1e-10);
}
