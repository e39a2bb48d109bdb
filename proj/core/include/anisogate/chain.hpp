#pragma once

// Dense state-vector simulation of a linear chain of N spins.
//
// Bit order: spin 1 is the most significant bit of the amplitude index, spin N
// the least; up = 0, down = 1. So "udud" on four spins is index 0b0101 = 5.
// Logical qubits are the encoded pairs (1,2), (3,4), ...

#include <span>
#include <string>
#include <vector>

#include "anisogate/pulse.hpp"

namespace anisogate {

class ChainState {
 public:
  static constexpr int kMinSpins = 4;
  static constexpr int kMaxSpins = 20;

  /// All spins up.
  explicit ChainState(int nSpins);
  ChainState(int nSpins, VecX amplitudes);

  /// A single configuration such as "uddu".
  static ChainState configuration(const std::string& spins);
  /// Tensor product of two-spin states, pair (1,2) first.
  static ChainState from_pairs(std::span<const Vec4> pairStates);

  int spins() const { return nSpins_; }
  const VecX& amplitudes() const { return amps_; }
  VecX& amplitudes() { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  int nSpins_;
  VecX amps_;
};

/// Amplitude index of a configuration string over {u, d}.
std::size_t configuration_index(const std::string& spins);

/// Acts with a 4x4 gate on spins (pair.first, pair.second).
void apply_gate(ChainState& state, SpinPair pair, const Mat4& gate);
ChainState apply_gate(const ChainState& state, SpinPair pair, const TwoSpinGate& gate);

ChainState run_program(ChainState state, std::span<const Pulse> program);
ChainState run_program(ChainState state, const PulseSequence& program);

/// Pulses that undo `program`: reversed order, each gate replaced by its inverse.
/// Only the unitaries are inverted; the output is a list of raw 4x4 gates.
std::vector<std::pair<SpinPair, Mat4>> inverse_program(std::span<const Pulse> program);

/// Singlet-like ground state of the pair Hamiltonian, phase fixed so <S|g> > 0.
Vec4 ground_state(const GateParams& params);
/// Ground energy per unit lambda: -1/2 - |(alpha, beta, 1+gamma)|/2.
double ground_energy(const GateParams& params);

/// Cooling modeled as exact ground-state preparation of every encoded pair.
ChainState init_ground(int nSpins, std::span<const GateParams> pairParams);
ChainState init_ground(int nSpins, const GateParams& params);

/// Pseudospin rotation taking ground_state(params) to |S> (up to phase).
Rotation preparation_rotation(const GateParams& params);

struct ReadoutResult {
  double pSinglet = 0.0;
  double axisTilt = 0.0;
};

/// Probability of finding the pair in the measurement Hamiltonian's
/// singlet-like ground state.
ReadoutResult readout(const ChainState& state, SpinPair pair, const GateParams& measureParams);

/// Largest |U_ij| connecting configurations of different total S_z, over the
/// full 2^N unitary of `program`.
double sz_block_violation(std::span<const Pulse> program, int nSpins);

}  // namespace anisogate
