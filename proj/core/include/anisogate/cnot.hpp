#pragma once

// CNOT synthesis from pulses on the middle pair (spins 2, 3).
//
// A middle-pair sequence whose net pseudospin rotation is about x acts on the
// logical qubits as U(Lambda, Phi) = e^{i Lambda/2} e^{-i Phi/2 sigma_x}, with
// Lambda the plain sum of pulse strengths. It is locally equivalent to CNOT iff
// Lambda is an odd multiple of pi. Two constructions are provided:
//   procedure one:  A R_x(pi) A, where R_x(pi) is built from pi pulses and the
//                   two A pulses absorb the accumulated mismatch mu;
//   procedure two:  2 pi pulses whose strength mismatches nu_i add up to an odd
//                   multiple of pi.
// complete_cnot() then adds the logical single-qubit corrections (Hadamards and
// R_x(psi), psi = (Phi + Lambda)/2 mod 2 pi) compiled onto the qubit pairs.

#include <optional>
#include <vector>

#include "anisogate/pulse.hpp"
#include "anisogate/wedge.hpp"

namespace anisogate {

struct PhaseCheck {
  int n = 0;              ///< Lambda closest to (2n + 1) pi
  double residual = 0.0;  ///< |Lambda - (2n + 1) pi|
  bool pass = false;
};

PhaseCheck phase_constraint_check(const PulseSequence& seq, double tolerance = tol::kPhaseConstraint);

enum class HadamardPlacement { Target, Both, Control };
enum class RxPlacement { Both, Control, Target };

struct CircuitLayout {
  HadamardPlacement hadamard = HadamardPlacement::Control;
  RxPlacement rx = RxPlacement::Both;

  friend bool operator==(const CircuitLayout&, const CircuitLayout&) = default;
};

const char* to_string(HadamardPlacement p);
const char* to_string(RxPlacement p);

struct LogicalCorrection {
  enum class Kind { Hadamard, Rx };

  Kind kind = Kind::Hadamard;
  int qubit = 0;  ///< 0 = pair 1-2 (control), 1 = pair 3-4 (target)
  double angle = 0.0;
  bool beforeCore = false;
  PulseSequence pulses;
};

struct CnotPlan {
  int procedure = 0;
  PulseSequence coreSequence;
  int n = 0;                    ///< Lambda = (2n + 1) pi
  double lambdaResidual = 0.0;  ///< |Lambda - (2n + 1) pi|
  double phiNetAngle = 0.0;     ///< Phi in [0, 4 pi)
  double xAxisDefect = 0.0;     ///< hypot(q_y, q_z) of the net core rotation
  double psi = 0.0;
  int pulseCount = 0;  ///< core pulses

  // procedure one
  int corePiPulses = 0;
  double mu = 0.0;
  double muEstimate = 0.0;
  double aAxisTheta = 0.0;

  // procedure two
  Interval nuBounds;
  std::vector<double> nus;

  int countBound = 0;  ///< the construction's worst-case core pulse count

  bool completed = false;
  CircuitLayout layout;
  std::vector<LogicalCorrection> corrections;

  /// Corrections before the core, the core, then corrections after it.
  std::vector<Pulse> program() const;
  int totalPulseCount() const;
};

/// psi = (Phi + Lambda) / 2 wrapped into [0, 2 pi).
double correction_angle(double Lambda, double Phi);

/// 2 floor(pi / (2 theta_m)) + 2 + 2.
int procedure_one_pulse_count(double thetaM);

CnotPlan procedure_one(const Wedge& wedge, std::optional<double> aAxisTheta = std::nullopt);

/// floor(pi / nu_max) + 1 when 0 is in [nu1, nu2], otherwise
/// floor(nu_max / (nu2 - nu1)) + 2 + floor(pi / nu_max).
int procedure_two_bound(Interval nu);

/// Mismatches nu_i, each in [nu1, nu2], with the fewest terms whose sum is an
/// odd multiple of pi. All but the trailing terms sit at the endpoint of
/// largest magnitude.
std::vector<double> two_pi_mismatch_schedule(Interval nu);

CnotPlan procedure_two(const Wedge& wedge);

std::vector<CircuitLayout> layout_candidates();
/// Logical circuit H_after Rx(psi) U(Lambda, Phi) H_before for a layout.
Mat4 layout_circuit(const CircuitLayout& layout, double Lambda, double Phi);
bool layout_realizes_cnot(const CircuitLayout& layout);
/// First candidate that realizes CNOT (control 12, target 34); computed once.
const CircuitLayout& canonical_layout();

CnotPlan complete_cnot(const CnotPlan& plan, const Wedge& wedge);

}  // namespace anisogate
