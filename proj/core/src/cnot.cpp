#include "anisogate/cnot.hpp"

#include <cmath>

#include "anisogate/error.hpp"
#include "anisogate/verifier.hpp"

namespace anisogate {

namespace {

void finish_core(CnotPlan& plan) {
  const auto check = phase_constraint_check(plan.coreSequence);
  plan.n = check.n;
  plan.lambdaResidual = check.residual;
  require(check.pass, ErrorKind::Synthesis, "core sequence misses Lambda = (2n+1) pi");

  const Quaternion& q = plan.coreSequence.phiNet().quaternion;
  plan.phiNetAngle = plan.coreSequence.phiNet().angle_about(Vec3::UnitX());
  plan.xAxisDefect = std::hypot(q.y, q.z);
  plan.psi = correction_angle(plan.coreSequence.lambdaTotal(), plan.phiNetAngle);
  plan.pulseCount = static_cast<int>(plan.coreSequence.size());
}

}  // namespace

PhaseCheck phase_constraint_check(const PulseSequence& seq, double tolerance) {
  const double lambda = seq.lambdaTotal();
  PhaseCheck out;
  out.n = static_cast<int>(std::lround((lambda / kPi - 1.0) / 2.0));
  out.residual = std::abs(lambda - (2.0 * out.n + 1.0) * kPi);
  out.pass = out.residual < tolerance;
  return out;
}

const char* to_string(HadamardPlacement p) {
  switch (p) {
    case HadamardPlacement::Target: return "target";
    case HadamardPlacement::Both: return "both";
    case HadamardPlacement::Control: return "control";
  }
  return "?";
}

const char* to_string(RxPlacement p) {
  switch (p) {
    case RxPlacement::Both: return "both";
    case RxPlacement::Control: return "control";
    case RxPlacement::Target: return "target";
  }
  return "?";
}

std::vector<Pulse> CnotPlan::program() const {
  std::vector<Pulse> out;
  for (const auto& c : corrections)
    if (c.beforeCore) out.insert(out.end(), c.pulses.pulses().begin(), c.pulses.pulses().end());
  out.insert(out.end(), coreSequence.pulses().begin(), coreSequence.pulses().end());
  for (const auto& c : corrections)
    if (!c.beforeCore) out.insert(out.end(), c.pulses.pulses().begin(), c.pulses.pulses().end());
  return out;
}

int CnotPlan::totalPulseCount() const { return static_cast<int>(program().size()); }

double correction_angle(double Lambda, double Phi) { return wrap(0.5 * (Phi + Lambda), kTwoPi); }

int procedure_one_pulse_count(double thetaM) { return x_rotation_pulse_count(kPi, thetaM) + 2; }

CnotPlan procedure_one(const Wedge& wedge, std::optional<double> aAxisTheta) {
  const double aTheta = aAxisTheta.value_or(wedge.includesZ() ? 0.0 : wedge.thetaLo());
  require(std::isfinite(aTheta) && wedge.contains(aTheta, 0.0), ErrorKind::InvalidArgument,
          "A-pulse axis lies outside the wedge");

  const SynthesisResult rx = synthesize_x_rotation(kPi, wedge, kMiddlePair);
  const int piPulses = rx.pulseCount;
  const double lambdaPi = rx.sequence.lambdaTotal();
  const double mu = lambdaPi - piPulses * kPi;
  const double lambdaA = 0.5 * kPi - 0.5 * mu;
  require(lambdaA >= 0.0, ErrorKind::Synthesis, "mismatch mu exceeds pi; anisotropy too large for this wedge");

  const AxisPoint a = wedge.realize_axis(aTheta);
  const Pulse aPulse{kMiddlePair, a.with_lambda(lambdaA)};

  CnotPlan plan;
  plan.procedure = 1;
  plan.corePiPulses = piPulses;
  plan.mu = mu;
  for (const auto& p : rx.sequence.pulses()) {
    plan.muEstimate += kPi * (-p.params.gamma - 0.5 * p.params.beta * p.params.beta);
  }
  plan.aAxisTheta = a.polar_angle();
  plan.coreSequence.append(aPulse);
  plan.coreSequence.append(rx.sequence);
  plan.coreSequence.append(aPulse);
  plan.countBound = procedure_one_pulse_count(wedge.thetaM());
  finish_core(plan);
  return plan;
}

int procedure_two_bound(Interval nu) {
  const double nuMax = std::max(std::abs(nu.lo), std::abs(nu.hi));
  require(nuMax > 0.0, ErrorKind::Degenerate, "no 2 pi mismatch available (nu1 = nu2 = 0)");
  if (nu.lo <= 0.0 && nu.hi >= 0.0) return static_cast<int>(std::floor(kPi / nuMax)) + 1;
  require(nu.hi > nu.lo, ErrorKind::Degenerate, "mismatch range has zero width");
  return static_cast<int>(std::floor(nuMax / (nu.hi - nu.lo))) + 2 + static_cast<int>(std::floor(kPi / nuMax));
}

std::vector<double> two_pi_mismatch_schedule(Interval nu) {
  require(std::isfinite(nu.lo) && std::isfinite(nu.hi) && nu.lo <= nu.hi, ErrorKind::InvalidArgument,
          "mismatch range must be finite and ordered");
  require(!(nu.lo == 0.0 && nu.hi == 0.0), ErrorKind::Degenerate,
          "isotropic wedge: 2 pi rotations carry no phase mismatch");
  require(nu.hi > nu.lo, ErrorKind::Degenerate, "mismatch range has zero width");
  const int bound = procedure_two_bound(nu);
  const bool positiveDominant = std::abs(nu.hi) >= std::abs(nu.lo);

  for (int k = 1; k <= bound; ++k) {
    // Odd j with j pi in [k nu1, k nu2]; prefer the smallest |j|.
    const long jLo = static_cast<long>(std::ceil(k * nu.lo / kPi));
    const long jHi = static_cast<long>(std::floor(k * nu.hi / kPi));
    std::optional<long> pick;
    for (long j = jLo; j <= jHi; ++j) {
      if (j % 2 == 0) continue;
      if (!pick || std::labs(j) < std::labs(*pick) ||
          (std::labs(j) == std::labs(*pick) && ((j > 0) == positiveDominant))) {
        pick = j;
      }
    }
    if (!pick) continue;

    const double target = static_cast<double>(*pick) * kPi;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    double remaining = target;
    for (int i = 0; i < k; ++i) {
      const double after = static_cast<double>(k - i - 1);
      double v = target > 0.0 ? std::min(nu.hi, remaining - after * nu.lo)
                              : std::max(nu.lo, remaining - after * nu.hi);
      if (i == k - 1) v = remaining;
      v = std::clamp(v, nu.lo, nu.hi);
      out.push_back(v);
      remaining -= v;
    }
    return out;
  }
  fail(ErrorKind::Synthesis, "no odd multiple of pi is reachable within the pulse-count bound");
}

CnotPlan procedure_two(const Wedge& wedge) {
  CnotPlan plan;
  plan.procedure = 2;
  plan.nuBounds = nu_range(wedge);
  plan.nus = two_pi_mismatch_schedule(plan.nuBounds);
  plan.countBound = procedure_two_bound(plan.nuBounds);
  for (double nu : plan.nus) {
    const AxisPoint p = wedge.realize_mismatch(nu);
    require(wedge.contains(p.polar_angle()), ErrorKind::Synthesis, "emitted pulse axis left the wedge");
    plan.coreSequence.append(Pulse{kMiddlePair, p.with_lambda(kTwoPi + nu)});
  }
  finish_core(plan);
  return plan;
}

std::vector<CircuitLayout> layout_candidates() {
  std::vector<CircuitLayout> out;
  for (auto h : {HadamardPlacement::Target, HadamardPlacement::Both, HadamardPlacement::Control})
    for (auto r : {RxPlacement::Both, RxPlacement::Control, RxPlacement::Target}) out.push_back({h, r});
  return out;
}

namespace {

Mat4 hadamards(HadamardPlacement p) {
  const Mat2 h = logical::hadamard();
  switch (p) {
    case HadamardPlacement::Target: return logical::on_qubit(h, 1);
    case HadamardPlacement::Both: return logical::on_qubit(h, 0) * logical::on_qubit(h, 1);
    case HadamardPlacement::Control: return logical::on_qubit(h, 0);
  }
  return Mat4::Identity();
}

Mat4 x_rotations(RxPlacement p, double psi) {
  const Mat2 r = logical::rx(psi);
  switch (p) {
    case RxPlacement::Both: return logical::on_qubit(r, 0) * logical::on_qubit(r, 1);
    case RxPlacement::Control: return logical::on_qubit(r, 0);
    case RxPlacement::Target: return logical::on_qubit(r, 1);
  }
  return Mat4::Identity();
}

bool on_control(HadamardPlacement p) { return p != HadamardPlacement::Target; }
bool on_target(HadamardPlacement p) { return p != HadamardPlacement::Control; }
bool on_control(RxPlacement p) { return p != RxPlacement::Target; }
bool on_target(RxPlacement p) { return p != RxPlacement::Control; }

}  // namespace

Mat4 layout_circuit(const CircuitLayout& layout, double Lambda, double Phi) {
  const Mat4 h = hadamards(layout.hadamard);
  return h * x_rotations(layout.rx, correction_angle(Lambda, Phi)) * logical::two_qubit_form(Lambda, Phi) * h;
}

bool layout_realizes_cnot(const CircuitLayout& layout) {
  // Odd multiples of pi with assorted Phi, including both parities of n.
  const double samples[][2] = {{kPi, kPi}, {3.0 * kPi, 0.7}, {33.0 * kPi, kPi}, {5.0 * kPi, 2.1}, {67.0 * kPi, 0.0}};
  for (const auto& s : samples) {
    if (fidelity(layout_circuit(layout, s[0], s[1]), logical::cnot()) < 1.0 - 1e-12) return false;
  }
  return true;
}

const CircuitLayout& canonical_layout() {
  static const CircuitLayout layout = [] {
    for (const auto& c : layout_candidates())
      if (layout_realizes_cnot(c)) return c;
    fail(ErrorKind::Synthesis, "no correction layout reproduces CNOT");
  }();
  return layout;
}

CnotPlan complete_cnot(const CnotPlan& plan, const Wedge& wedge) {
  const auto check = phase_constraint_check(plan.coreSequence);
  require(check.pass, ErrorKind::Synthesis, "core sequence violates Lambda = (2n+1) pi");

  CnotPlan out = plan;
  out.corrections.clear();
  out.layout = canonical_layout();
  out.psi = correction_angle(plan.coreSequence.lambdaTotal(), plan.phiNetAngle);

  const Rotation hadamard = logical::to_rotation(logical::hadamard());
  const SpinPair pairs[2] = {kQubitA, kQubitB};
  const auto add_h = [&](int qubit, bool before) {
    LogicalCorrection c;
    c.kind = LogicalCorrection::Kind::Hadamard;
    c.qubit = qubit;
    c.angle = kPi;
    c.beforeCore = before;
    c.pulses = synthesize_1q(hadamard, wedge, pairs[qubit]).sequence;
    out.corrections.push_back(std::move(c));
  };

  for (int q = 0; q < 2; ++q) {
    if (q == 0 ? on_control(out.layout.hadamard) : on_target(out.layout.hadamard)) add_h(q, true);
  }
  for (int q = 0; q < 2; ++q) {
    if (!(q == 0 ? on_control(out.layout.rx) : on_target(out.layout.rx))) continue;
    LogicalCorrection c;
    c.kind = LogicalCorrection::Kind::Rx;
    c.qubit = q;
    c.angle = out.psi;
    c.beforeCore = false;
    c.pulses = synthesize_x_rotation(out.psi, wedge, pairs[q]).sequence;
    out.corrections.push_back(std::move(c));
  }
  for (int q = 0; q < 2; ++q) {
    if (q == 0 ? on_control(out.layout.hadamard) : on_target(out.layout.hadamard)) add_h(q, false);
  }
  out.completed = true;
  return out;
}

}  // namespace anisogate
