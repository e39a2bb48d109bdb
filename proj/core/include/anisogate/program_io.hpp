#pragma once

// JSON interchange: pulse programs, wedge specs, reports.
//
// Program record:
//   {"format": "anisogate.program.v1", "kind": "cnot" | "x-rot" | "1q",
//    "pulses": [{"pair": "2-3", "lambda": .., "alpha": .., "beta": .., "gamma": ..}, ...],
//    "corrections": {"before": [...], "after": [...]},
//    "metadata": {"procedure", "n", "Lambda", "Phi", "psi", "pulseCount", ...}}
// For a CNOT, "pulses" is the middle-pair core only; the single-qubit
// corrections live under "corrections" and the full time order is
// before + pulses + after.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "anisogate/chain.hpp"
#include "anisogate/cnot.hpp"
#include "anisogate/verifier.hpp"
#include "anisogate/wedge.hpp"

namespace anisogate {

using Json = nlohmann::ordered_json;

inline constexpr const char* kProgramFormat = "anisogate.program.v1";

struct ProgramRecord {
  std::string kind;
  std::vector<Pulse> pulses;
  std::vector<Pulse> before;
  std::vector<Pulse> after;
  Json metadata = Json::object();

  std::vector<Pulse> full_program() const;
};

Json to_json(const GateParams& p);
GateParams gate_params_from_json(const Json& j);
Json to_json(const PulseControls& c);
PulseControls pulse_controls_from_json(const Json& j);
Json to_json(const Pulse& p);
Pulse pulse_from_json(const Json& j);

/// Row-major: an array of rows, each an array of [re, im] pairs.
Json matrix_to_json(const MatX& m);
MatX matrix_from_json(const Json& j);

/// (w, x, y, z, accumulatedLambda)
Json to_json(const Rotation& r);

Json to_json(const ProgramRecord& r);
ProgramRecord program_from_json(const Json& j);

ProgramRecord program_record(const CnotPlan& plan);
ProgramRecord program_record(const SynthesisResult& result, const std::string& kind);

/// {"s": [lo, hi], "cBeta": [lo, hi], "cGamma": [lo, hi]} or
/// {"thetaLo": .., "thetaHi": .., "gammaLo": .., "gammaHi": ..}.
Wedge wedge_from_json(const Json& j);
Json to_json(const Wedge& w);

Json to_json(const EquivalenceReport& r);
Json to_json(const ReadoutResult& r);
Json to_json(const PhaseCheck& c);

/// Throws InvalidArgument if `j` has keys outside `allowed`.
void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where);

}  // namespace anisogate
