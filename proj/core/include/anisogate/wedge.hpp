#pragma once

// Achievable rotation axes ("the wedge") and single-qubit synthesis from
// time-symmetric (alpha = 0) pulses.
//
// An achievable pulse has anisotropy (beta, gamma); its pseudospin axis lies in
// the yz plane at polar angle atan2(beta, 1 + gamma). The wedge is the interval
// [thetaLo, thetaHi] of such angles. Two sources are supported:
//   * control ranges: beta = cBeta s, gamma = cGamma s^2 with s, cBeta, cGamma
//     each ranging over an interval (coupled mode);
//   * axis ranges: the axis angle and gamma are independent, with
//     beta = (1 + gamma) tan(theta).

#include <array>
#include <optional>
#include <variant>

#include "anisogate/pulse.hpp"
#include "anisogate/rotation.hpp"

namespace anisogate {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ControlRanges {
  Interval s;
  Interval cBeta{1.0, 1.0};
  Interval cGamma{1.0, 1.0};
};

struct AxisRanges {
  double thetaLo = 0.0;
  double thetaHi = 0.0;
  double gammaLo = 0.0;
  double gammaHi = 0.0;
};

/// Anisotropy of an achievable time-symmetric pulse.
struct AxisPoint {
  double beta = 0.0;
  double gamma = 0.0;

  double polar_angle() const;
  /// |(0, beta, 1 + gamma)|: rotation angle per unit lambda.
  double angle_per_lambda() const;
  /// nu = lambda - 2 pi for a 2 pi pseudospin rotation.
  double two_pi_mismatch() const;
  GateParams with_lambda(double lambda) const { return {lambda, 0.0, beta, gamma}; }
  /// Pulse for a pseudospin rotation by `angle` about this axis.
  GateParams for_angle(double angle) const;
};

class Wedge {
 public:
  /// Largest angular extent the small-anisotropy model is trusted for.
  static constexpr double kMaxThetaM = kPi / 2.0;

  static Wedge from_controls(const ControlRanges& ranges);
  static Wedge from_axes(const AxisRanges& ranges);
  /// Symmetric-about-center axis wedge of width thetaM with fixed gamma bounds.
  static Wedge centered(double thetaM, double center = 0.0, Interval gamma = {});

  double thetaLo() const { return thetaLo_; }
  double thetaHi() const { return thetaHi_; }
  double thetaM() const { return thetaHi_ - thetaLo_; }
  bool includesZ() const { return thetaLo_ <= 0.0 && thetaHi_ >= 0.0; }
  bool contains(double theta, double slack = 1e-10) const;

  /// Achievable gamma range at axis angle theta (empty when theta is outside).
  /// Coupled mode samples s on a 4001-point grid, so bounds there are good to
  /// about 2 cGamma s ds.
  std::optional<Interval> gamma_range(double theta) const;

  /// An achievable (beta, gamma) whose axis is at `theta`. The extremes map to
  /// the exact points that define thetaLo and thetaHi.
  AxisPoint realize_axis(double theta) const;
  /// An achievable (beta, gamma) whose 2 pi mismatch equals `nu`.
  AxisPoint realize_mismatch(double nu) const;
  /// Min and max of nu = 2 pi / |(beta, 1+gamma)| - 2 pi over the achievable set.
  Interval mismatch_range() const { return nuRange_; }

  const std::variant<ControlRanges, AxisRanges>& source() const { return source_; }

 private:
  using Coords = std::array<double, 3>;

  explicit Wedge(std::variant<ControlRanges, AxisRanges> source);
  AxisPoint point(const Coords& u) const;
  std::array<Interval, 3> box() const;

  template <class F>
  Coords argextreme(F&& f, bool maximize) const;
  template <class F>
  AxisPoint solve_on_segment(const Coords& from, const Coords& to, F&& f, double target) const;

  std::variant<ControlRanges, AxisRanges> source_;
  double thetaLo_ = 0.0;
  double thetaHi_ = 0.0;
  Coords thetaLoAt_{};
  Coords thetaHiAt_{};
  Interval nuRange_;
  Coords nuLoAt_{};
  Coords nuHiAt_{};
};

/// Wedge construction from pulse-control ranges; throws Degenerate for a
/// zero-width wedge.
Wedge wedge_from_controls(Interval sRange, Interval cBetaRange, Interval cGammaRange);

struct SynthesisResult {
  PulseSequence sequence;
  int pulseCount = 0;
  Rotation netRotation;
  double targetResidual = 0.0;
};

/// 2 floor(Theta / (2 thetaM)) + 2 with Theta first wrapped into [0, 2 pi).
int x_rotation_pulse_count(double theta, double thetaM);

/// Rotation by Theta about pseudospin x from pairs of pi pulses on wedge axes.
SynthesisResult synthesize_x_rotation(double theta, const Wedge& wedge, SpinPair pair = kQubitA);

/// Arbitrary rotation via R_w(a) R_x(b) R_w(c) with w a wedge axis.
SynthesisResult synthesize_1q(const Rotation& target, const Wedge& wedge, SpinPair pair = kQubitA);

/// Achievable range (nu1, nu2) of 2 pi rotation mismatches.
Interval nu_range(const Wedge& wedge);

}  // namespace anisogate
