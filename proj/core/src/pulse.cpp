#include "anisogate/pulse.hpp"

#include <charconv>

#include "anisogate/error.hpp"

namespace anisogate {

std::string SpinPair::label() const { return std::to_string(first) + "-" + std::to_string(second()); }

SpinPair SpinPair::parse(const std::string& label) {
  const auto dash = label.find('-');
  require(dash != std::string::npos, ErrorKind::InvalidArgument, "spin pair must look like \"2-3\": " + label);
  int a = 0;
  int b = 0;
  const char* begin = label.data();
  const char* end = begin + label.size();
  const auto r1 = std::from_chars(begin, begin + dash, a);
  const auto r2 = std::from_chars(begin + dash + 1, end, b);
  require(r1.ec == std::errc() && r1.ptr == begin + dash && r2.ec == std::errc() && r2.ptr == end,
          ErrorKind::InvalidArgument, "spin pair must look like \"2-3\": " + label);
  require(a >= 1 && b == a + 1, ErrorKind::InvalidArgument, "spin pair must be two neighboring spins: " + label);
  return SpinPair{a};
}

PulseSequence::PulseSequence(const std::vector<Pulse>& pulses) {
  for (const auto& p : pulses) append(p);
}

void PulseSequence::append(const Pulse& pulse) {
  pulse.params.validate();
  pulses_.push_back(pulse);
  lambdaTotal_ += pulse.params.lambda;
  phiNet_ = compose(phiNet_, pulse_rotation(pulse.params));
}

void PulseSequence::append(const PulseSequence& other) {
  for (const auto& p : other.pulses()) append(p);
}

bool PulseSequence::single_pair() const {
  return pulses_.empty() || all_on(pulses_.front().pair);
}

bool PulseSequence::all_on(SpinPair pair) const {
  for (const auto& p : pulses_) {
    if (!(p.pair == pair)) return false;
  }
  return true;
}

Rotation pulse_rotation(const GateParams& params) { return to_rotation(pseudospin_form(params)); }

}  // namespace anisogate
