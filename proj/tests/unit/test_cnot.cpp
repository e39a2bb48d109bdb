#include <gtest/gtest.h>

#include "anisogate/cnot.hpp"
#include "anisogate/error.hpp"
#include "anisogate/verifier.hpp"

using namespace anisogate;

namespace {

PulseSequence with_total_lambda(double lambda) {
  PulseSequence s;
  s.append(Pulse{kMiddlePair, {lambda, 0.0, 0.0, 0.0}});
  return s;
}

}  // namespace

TEST(PhaseConstraint, Examples) {
  auto c = phase_constraint_check(with_total_lambda(kPi));
  EXPECT_EQ(c.n, 0);
  EXPECT_TRUE(c.pass);
  c = phase_constraint_check(with_total_lambda(33 * kPi));
  EXPECT_EQ(c.n, 16);
  EXPECT_NEAR(c.residual, 0.0, 1e-12);
  c = phase_constraint_check(with_total_lambda(2 * kPi));
  EXPECT_NEAR(c.residual, kPi, 1e-12);
  EXPECT_FALSE(c.pass);
}

TEST(ProcedureOne, CountsAtThetaPointOne) {
  const Wedge w = Wedge::centered(0.1);
  const CnotPlan p = procedure_one(w);
  EXPECT_EQ(p.corePiPulses, 32);
  EXPECT_EQ(p.pulseCount, 34);
  EXPECT_EQ(p.n, 16);
  EXPECT_NEAR(p.coreSequence.lambdaTotal(), 33 * kPi, 1e-9);
  EXPECT_NEAR(p.phiNetAngle, kPi, 1e-9);  // 33 pi mod 4 pi
  EXPECT_NEAR(p.psi, kPi, 1e-9);
  EXPECT_LT(p.xAxisDefect, 1e-10);
  EXPECT_TRUE(p.coreSequence.all_on(kMiddlePair));
}

TEST(ProcedureOne, IsotropicLimitGivesHalfPiAPulses) {
  // Axis wedge with gamma = 0 at the z axis: the A pulses sit on z with no mismatch.
  const Wedge w = Wedge::centered(0.1);
  const CnotPlan p = procedure_one(w, 0.0);
  const auto& first = p.coreSequence.pulses().front();
  EXPECT_NEAR(first.params.lambda, kPi / 2 - p.mu / 2, 1e-15);
  // Control wedges: theta_m shrinks with s, so mu ~ s^2 / theta_m ~ s and lambda_A -> pi/2 linearly.
  std::vector<double> dev;
  for (double s : {1e-2, 1e-3, 1e-4}) {
    const CnotPlan small = procedure_one(wedge_from_controls({-s, s}, {1, 1}, {1, 1}), 0.0);
    dev.push_back(std::abs(small.coreSequence.pulses().front().params.lambda - kPi / 2));
    EXPECT_LT(dev.back(), 10 * s);
  }
  EXPECT_NEAR(dev[0] / dev[1], 10.0, 2.0);
  EXPECT_NEAR(dev[1] / dev[2], 10.0, 2.0);
}

TEST(ProcedureOne, MuEstimateTracksExactMu) {
  const Wedge w = wedge_from_controls({-0.1, 0.1}, {1, 1}, {1, 1});
  const CnotPlan p = procedure_one(w);
  EXPECT_NEAR(p.mu, p.muEstimate, 0.05 * std::abs(p.mu) + 1e-4);
}

TEST(ProcedureOne, RejectsAxisOutsideWedge) {
  const Wedge w = Wedge::centered(0.1);
  try {
    procedure_one(w, 0.2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(ProcedureTwo, Bounds) {
  EXPECT_EQ(procedure_two_bound({-0.0924, 0.0}), 34);
  EXPECT_EQ(procedure_two_bound({0.01, 0.02}), 161);
}

TEST(ProcedureTwo, ScheduleSumsToOddMultiple) {
  for (Interval nu : {Interval{-0.0924, 0.0}, Interval{0.01, 0.02}, Interval{-0.03, 0.05}, Interval{-0.2, -0.15},
                      Interval{0.3, 0.31}}) {
    const auto s = two_pi_mismatch_schedule(nu);
    double sum = 0.0;
    for (double v : s) {
      EXPECT_GE(v, nu.lo);
      EXPECT_LE(v, nu.hi);
      sum += v;
    }
    const double m = sum / kPi;
    EXPECT_NEAR(m, std::round(m), 1e-12);
    EXPECT_EQ(std::abs(static_cast<long>(std::round(m))) % 2, 1);
    EXPECT_LE(static_cast<int>(s.size()), procedure_two_bound(nu));
  }
}

TEST(ProcedureTwo, RejectsIsotropicRange) {
  try {
    two_pi_mismatch_schedule({0.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
  EXPECT_THROW(two_pi_mismatch_schedule({0.01, 0.01}), Error);
}

TEST(ProcedureTwo, WedgeExample) {
  const Wedge w = wedge_from_controls({-0.1, 0.1}, {1, 1}, {1, 1});
  const CnotPlan p = procedure_two(w);
  EXPECT_LE(p.pulseCount, 34);
  EXPECT_TRUE(phase_constraint_check(p.coreSequence).pass);
  EXPECT_LT(p.xAxisDefect, 1e-10);
  // Phi = 2 k pi
  EXPECT_NEAR(std::remainder(p.phiNetAngle, kTwoPi), 0.0, 1e-9);
  for (const Pulse& pulse : p.coreSequence.pulses()) {
    EXPECT_EQ(pulse.params.alpha, 0.0);
    EXPECT_NEAR(pseudospin_angle(pulse.params), kTwoPi, 1e-12);
  }
}

TEST(Layout, SearchFindsControlHadamards) {
  const CircuitLayout& l = canonical_layout();
  EXPECT_EQ(l.hadamard, HadamardPlacement::Control);
  EXPECT_EQ(l.rx, RxPlacement::Both);
  // the placements the caption could also be read as do not work
  EXPECT_FALSE(layout_realizes_cnot({HadamardPlacement::Target, RxPlacement::Both}));
  EXPECT_FALSE(layout_realizes_cnot({HadamardPlacement::Both, RxPlacement::Both}));
}

TEST(CompleteCnot, CorrectionAngle) {
  EXPECT_NEAR(correction_angle(kPi, kPi), kPi, 1e-15);
  EXPECT_NEAR(correction_angle(33 * kPi, 33 * kPi), kPi, 1e-12);
}

TEST(CompleteCnot, AssembledCircuitIsCnot) {
  const Wedge w = wedge_from_controls({-0.1, 0.1}, {1, 1}, {1, 1});
  for (int proc : {1, 2}) {
    const CnotPlan plan = complete_cnot(proc == 1 ? procedure_one(w) : procedure_two(w), w);
    const auto program = plan.program();
    const LogicalAction a = logical_action_of_program(program);
    // U CNOT^-1 = phase * identity
    const Mat4 r = a.gate.matrix * logical::cnot().adjoint();
    const Complex phase = r(0, 0);
    EXPECT_NEAR(std::abs(phase), 1.0, 1e-9);
    EXPECT_LT((r - phase * Mat4::Identity()).norm(), 1e-9) << proc;
    EXPECT_LT(a.leakage, 1e-10);
    EXPECT_EQ(plan.totalPulseCount(), static_cast<int>(program.size()));
  }
}
