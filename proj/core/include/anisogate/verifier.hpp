#pragma once

// Independent numerical checks on pulse programs for two logical qubits
// (spins 1-2 and 3-4). Pulses are embedded as dense 16x16 operators, so this
// path shares no code with the stride-based chain simulator.
//
// Logical basis: |0_L> = |S>, |1_L> = |T0> per pair, ordered
// |0_L 0_L>, |0_L 1_L>, |1_L 0_L>, |1_L 1_L> with qubit 12 most significant.

#include <cstdint>
#include <span>
#include <utility>

#include "anisogate/pulse.hpp"

namespace anisogate {

inline constexpr int kLogicalSpins = 4;

struct LogicalGate {
  Mat4 matrix = Mat4::Identity();
};

struct LogicalAction {
  LogicalGate gate;
  double leakage = 0.0;           ///< operator norm of the block leaving the computational subspace
  double leakageFrobenius = 0.0;  ///< Frobenius norm of the same block
};

struct EquivalenceReport {
  Complex g1;
  double g2 = 0.0;
  bool cnotClass = false;
  double fidelityToCnot = 0.0;  ///< after optimizing local corrections
  double leakage = 0.0;
};

struct MakhlinInvariants {
  Complex g1;
  double g2 = 0.0;
  double g2Imag = 0.0;  ///< residual imaginary part (zero for exact unitaries)
};

/// Embeds a two-spin operator acting on `pair` into 2^nSpins dimensions.
MatX embed_pair_operator(const Mat4& op, SpinPair pair, int nSpins);

/// 16x4 isometry onto the logical basis.
Eigen::Matrix<Complex, 16, 4> logical_isometry();

/// Action of a middle-pair sequence on the logical qubits.
LogicalAction logical_action(const PulseSequence& core);

/// Action of an arbitrary four-spin program (any neighboring pairs).
LogicalAction logical_action_of_program(std::span<const Pulse> program);

MakhlinInvariants makhlin_invariants(const LogicalGate& u);

/// Invariant check plus the best CNOT fidelity over local corrections, found by
/// a seeded multi-start alternating polar-decomposition search.
EquivalenceReport is_cnot_equivalent(const LogicalGate& u, std::uint64_t seed = 0, double leakage = 0.0);

/// max over local unitaries of |tr(target^dagger (A1 x A2) u (B1 x B2))|^2 / 16.
double optimize_local_fidelity(const Mat4& u, const Mat4& target, std::uint64_t seed, int starts = 8);

/// || e^{i Lambda/2} e^{-i Phi/2 sigma_x^(23)} - e^{i Lambda/4} e^{i Lambda/4 X X} e^{i Phi/4 X 1} e^{i Phi/4 1 X} ||
/// on the computational subspace.
double decomposition_check(double Lambda, double Phi);

/// |tr(u^dagger v)|^2 / dim^2.
double fidelity(const MatX& u, const MatX& v);

namespace logical {
Mat4 identity();
Mat4 cnot();  ///< control qubit 12, target qubit 34
Mat4 swap();
Mat2 x();
Mat2 z();
Mat2 hadamard();  ///< (X + Z) / sqrt2
Mat2 rx(double angle);
Mat4 on_qubit(const Mat2& op, int qubit);  ///< qubit 0 = pair 12, qubit 1 = pair 34
/// Logical right-hand side e^{i L/4} e^{i L/4 XX} e^{i P/4 X1} e^{i P/4 X2}.
Mat4 two_qubit_form(double Lambda, double Phi);
/// Logical single-qubit matrix of a pseudospin rotation (basis swap S <-> T0).
Mat2 from_rotation(const Rotation& r);
/// Pseudospin rotation whose logical matrix is `op` up to global phase.
Rotation to_rotation(const Mat2& op);
}  // namespace logical

}  // namespace anisogate
