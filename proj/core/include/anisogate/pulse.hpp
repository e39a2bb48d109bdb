#pragma once

#include <string>
#include <vector>

#include "anisogate/exchange.hpp"
#include "anisogate/rotation.hpp"

namespace anisogate {

/// Neighboring spins (first, first + 1), 1-based.
struct SpinPair {
  int first = 1;

  int second() const { return first + 1; }
  /// "1-2", "2-3", ...
  std::string label() const;
  static SpinPair parse(const std::string& label);

  friend bool operator==(const SpinPair&, const SpinPair&) = default;
};

inline constexpr SpinPair kQubitA{1};      // logical qubit 12 (CNOT control)
inline constexpr SpinPair kMiddlePair{2};  // spins 2 and 3
inline constexpr SpinPair kQubitB{3};      // logical qubit 34 (CNOT target)

struct Pulse {
  SpinPair pair;
  GateParams params;

  friend bool operator==(const Pulse&, const Pulse&) = default;
};

/// Ordered pulses with exact bookkeeping: lambdaTotal is the plain running sum
/// of the member lambdas (never reduced mod 2 pi), and phiNet is the composed
/// pseudospin rotation, meaningful when every pulse acts on the same pair.
class PulseSequence {
 public:
  PulseSequence() = default;
  explicit PulseSequence(const std::vector<Pulse>& pulses);

  void append(const Pulse& pulse);
  void append(const PulseSequence& other);

  const std::vector<Pulse>& pulses() const { return pulses_; }
  std::size_t size() const { return pulses_.size(); }
  bool empty() const { return pulses_.empty(); }
  double lambdaTotal() const { return lambdaTotal_; }
  const Rotation& phiNet() const { return phiNet_; }
  bool single_pair() const;
  bool all_on(SpinPair pair) const;

 private:
  std::vector<Pulse> pulses_;
  double lambdaTotal_ = 0.0;
  Rotation phiNet_;
};

/// Pseudospin rotation of one pulse, carrying its lambda.
Rotation pulse_rotation(const GateParams& params);

}  // namespace anisogate
