#include <gtest/gtest.h>

#include <random>

#include "anisogate/error.hpp"
#include "anisogate/exchange.hpp"
#include "oracles.hpp"

using namespace anisogate;

namespace {

GateParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ab(-0.3, 0.3), g(-0.1, 0.1), l(0.0, kFourPi);
  return {l(rng), ab(rng), ab(rng), g(rng)};
}

Vec4 to_vec4(const oracle::V& v) { return v; }

}  // namespace

TEST(SpinOrbitStrength, Examples) {
  PhysicalDevice d;
  d.fD = 0.7;
  d.fR = 0.7;
  EXPECT_EQ(spin_orbit_strength(d), 0.0);
  d = {1.0, 10.0, 2.0, 1.0, 1.0, 0.0};
  EXPECT_NEAR(spin_orbit_strength(d), 0.1, 1e-15);
  std::swap(d.fD, d.fR);
  EXPECT_NEAR(spin_orbit_strength(d), -0.1, 1e-15);
}

TEST(PrecessionAngle, Examples) {
  PhysicalDevice d{1.0, 1.0, 0.0, 0.0, 1.0, 3.0};
  EXPECT_EQ(precession_angle(d), 0.0);

  // s = 1 with a0 omega0 k / (sqrt2 t) = 1 makes tan(eta/2) = 1.
  d = {1.0, 1.0, 1.0, 0.0, 1.0 / std::sqrt(2.0), 1.0};
  EXPECT_NEAR(precession_angle(d), kPi / 2, 1e-14);
}

TEST(PrecessionAngle, MatchesBisectionRoot) {
  const PhysicalDevice d{1.3, 0.8, 0.31, 0.12, 0.45, 0.9};
  const double rhs = spin_orbit_strength(d) * d.a0 * d.omega0 / (std::sqrt(2.0) * d.t) * d.kMatrixElement;
  double lo = -kPi + 1e-9, hi = kPi - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::tan(mid / 2) < rhs ? lo : hi) = mid;
  }
  EXPECT_NEAR(precession_angle(d), 0.5 * (lo + hi), 1e-12);
}

TEST(PrecessionAngle, ZeroTunnelingIsDegenerate) {
  PhysicalDevice d;
  d.t = 0.0;
  try {
    precession_angle(d);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(ParamsFromControls, Examples) {
  EXPECT_EQ(params_from_controls({0.0, 0.0, 1.0, 1.0, 2.0}), (GateParams{2.0, 0.0, 0.0, 0.0}));
  const GateParams p = params_from_controls({0.1, 0.0, 1.0, 1.0, kPi});
  EXPECT_EQ(p.lambda, kPi);
  EXPECT_EQ(p.alpha, 0.0);
  EXPECT_NEAR(p.beta, 0.1, 1e-16);
  EXPECT_NEAR(p.gamma, 0.01, 1e-16);

  const GateParams a = params_from_controls({0.13, 0.5, 1.2, 0.7, 1.0});
  const GateParams b = params_from_controls({-0.13, 0.5, 1.2, 0.7, 1.0});
  EXPECT_EQ(a.alpha, -b.alpha);
  EXPECT_EQ(a.beta, -b.beta);
  EXPECT_EQ(a.gamma, b.gamma);
}

TEST(Hamiltonian, MatchesPauliProductOracle) {
  const Mat4 h = hamiltonian({1.0, 0.1, 0.2, 0.05});
  const oracle::M ref = oracle::hamiltonian(0.1, 0.2, 0.05);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(std::abs(h(r, c) - ref(r, c)), 0.0, 1e-15) << r << "," << c;
  EXPECT_LT((h - h.adjoint()).norm(), tol::kHermitian);
}

TEST(Hamiltonian, IsotropicSpectrum) {
  const Mat4 h = hamiltonian({1.0, 0.0, 0.0, 0.0});
  const Eigen::SelfAdjointEigenSolver<Mat4> es(h);
  EXPECT_NEAR(es.eigenvalues()(0), -1.0, 1e-15);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(es.eigenvalues()(k), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(basis::singlet().dot(h * basis::singlet()) + 1.0), 0.0, 1e-15);
}

TEST(Hamiltonian, KillsPolarizedTripletsAndHasTraceMinusOne) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Mat4 h = hamiltonian(random_params(rng));
    EXPECT_LT((h * basis::triplet_plus()).norm(), 1e-15);
    EXPECT_LT((h * basis::triplet_minus()).norm(), 1e-15);
    EXPECT_NEAR(h.trace().real(), -1.0, 1e-14);
    EXPECT_NEAR(h.trace().imag(), 0.0, 1e-14);
  }
}

TEST(GateUnitary, ZeroLambdaIsIdentity) {
  EXPECT_LT((gate_unitary({0.0, 0.2, -0.1, 0.05}).matrix - Mat4::Identity()).norm(), 1e-15);
}

TEST(GateUnitary, IsotropicPiFlipsSingletSign) {
  const Mat4 u = gate_unitary({kPi, 0.0, 0.0, 0.0}).matrix;
  EXPECT_LT((u * basis::singlet() + basis::singlet()).norm(), 1e-15);
  EXPECT_LT((u * basis::triplet0() - basis::triplet0()).norm(), 1e-15);
  EXPECT_LT((u * basis::triplet_plus() - basis::triplet_plus()).norm(), 1e-15);
  EXPECT_LT((u * basis::triplet_minus() - basis::triplet_minus()).norm(), 1e-15);
}

TEST(GateUnitary, MatchesExponentialOracle) {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const GateParams p = random_params(rng);
    const Mat4 u = gate_unitary(p).matrix;
    const oracle::M ref = oracle::gate(p.lambda, p.alpha, p.beta, p.gamma);
    worst = std::max(worst, oracle::opnorm(u - ref));
    EXPECT_LT(unitarity_defect(u), tol::kUnitary);
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(PseudospinForm, Isotropic) {
  const PseudospinRotation r = pseudospin_form({1.3, 0.0, 0.0, 0.0});
  EXPECT_LT((r.axis - Vec3::UnitZ()).norm(), 1e-15);
  EXPECT_NEAR(r.angle, 1.3, 1e-15);
  EXPECT_NEAR(r.globalPhase, 0.65, 1e-15);
}

TEST(PseudospinForm, AngleFormulaAndEigenphases) {
  const GateParams p{kPi, 0.0, 0.1, 0.01};
  const PseudospinRotation r = pseudospin_form(p);
  EXPECT_NEAR(r.angle, kPi * std::sqrt(1.0301), 1e-12);

  // Eigenvalues of the {S, T0} block are exp(i lambda/2) exp(-+ i phi/2).
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const GateParams q = random_params(rng);
    const oracle::M u = oracle::gate(q.lambda, q.alpha, q.beta, q.gamma);
    oracle::M block(2, 2);
    const oracle::V v[2] = {oracle::triplet0(), oracle::singlet()};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) block(a, b) = v[a].dot(u * v[b]);
    const Eigen::ComplexEigenSolver<oracle::M> es(block);
    const PseudospinRotation f = pseudospin_form(q);
    const Complex predicted[2] = {std::exp(Complex(0, f.globalPhase - f.angle / 2)),
                                  std::exp(Complex(0, f.globalPhase + f.angle / 2))};
    const Complex e0 = es.eigenvalues()(0), e1 = es.eigenvalues()(1);
    const double straight = std::max(std::abs(e0 - predicted[0]), std::abs(e1 - predicted[1]));
    const double crossed = std::max(std::abs(e0 - predicted[1]), std::abs(e1 - predicted[0]));
    EXPECT_LT(std::min(straight, crossed), 1e-10);
  }
}

TEST(PseudospinForm, AngleMinusLambdaIsSecondOrder) {
  for (double s : {0.1, 0.05, 0.025}) {
    const GateParams p = params_from_controls({s, 0.0, 1.0, 1.0, 1.0});
    const double d = pseudospin_form(p).angle - p.lambda;
    EXPECT_NEAR(d / (s * s), 1.5, 0.02) << s;  // sqrt(1 + 2g + b^2 + g^2) - 1 ~ 3 s^2 / 2
  }
}

TEST(PseudospinForm, GammaMinusOneIsDegenerate) {
  try {
    pseudospin_form({1.0, 0.0, 0.0, -1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(GateFromPseudospin, IdentityAndPhase) {
  PseudospinRotation id;
  EXPECT_LT((gate_from_pseudospin(id).matrix - Mat4::Identity()).norm(), 1e-15);

  PseudospinRotation phase;
  phase.globalPhase = kPi;
  const Mat4 g = gate_from_pseudospin(phase).matrix;
  Mat4 expected = Mat4::Identity();
  expected(1, 1) = -1.0;
  expected(2, 2) = -1.0;
  EXPECT_LT((g - expected).norm(), 1e-15);
}

TEST(GateFromPseudospin, RoundTrip) {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const GateParams p = random_params(rng);
    worst = std::max(worst, oracle::opnorm(gate_from_pseudospin(pseudospin_form(p)).matrix - gate_unitary(p).matrix));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Basis, SingletIsOracleSinglet) {
  EXPECT_LT((basis::singlet() - to_vec4(oracle::singlet())).norm(), 1e-15);
  EXPECT_LT((basis::triplet0() - to_vec4(oracle::triplet0())).norm(), 1e-15);
}
