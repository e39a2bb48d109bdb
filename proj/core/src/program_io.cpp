#include "anisogate/program_io.hpp"

#include <algorithm>

#include "anisogate/error.hpp"

namespace anisogate {

namespace {

double number(const Json& j, const char* key, const std::string& where) {
  require(j.contains(key), ErrorKind::InvalidArgument, where + ": missing \"" + key + "\"");
  const Json& v = j.at(key);
  require(v.is_number(), ErrorKind::InvalidArgument, where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback, const std::string& where) {
  return j.contains(key) ? number(j, key, where) : fallback;
}

Interval interval(const Json& j, const char* key, Interval fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), v.get<double>()};
  require(v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(), ErrorKind::InvalidArgument,
          where + ": \"" + key + "\" must be [lo, hi]");
  return {v[0].get<double>(), v[1].get<double>()};
}

Json pulses_to_json(const std::vector<Pulse>& pulses) {
  Json a = Json::array();
  for (const auto& p : pulses) a.push_back(to_json(p));
  return a;
}

std::vector<Pulse> pulses_from_json(const Json& j, const std::string& where) {
  require(j.is_array(), ErrorKind::InvalidArgument, where + " must be an array");
  std::vector<Pulse> out;
  for (const auto& e : j) out.push_back(pulse_from_json(e));
  return out;
}

Json complex_pair(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  require(j.is_object(), ErrorKind::InvalidArgument, where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    require(known, ErrorKind::InvalidArgument, where + ": unknown key \"" + key + "\"");
  }
}

std::vector<Pulse> ProgramRecord::full_program() const {
  std::vector<Pulse> out = before;
  out.insert(out.end(), pulses.begin(), pulses.end());
  out.insert(out.end(), after.begin(), after.end());
  return out;
}

Json to_json(const GateParams& p) {
  return {{"lambda", p.lambda}, {"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}};
}

GateParams gate_params_from_json(const Json& j) {
  reject_unknown_keys(j, {"lambda", "alpha", "beta", "gamma"}, "gate params");
  GateParams p{number(j, "lambda", "gate params"), number_or(j, "alpha", 0.0, "gate params"),
               number_or(j, "beta", 0.0, "gate params"), number_or(j, "gamma", 0.0, "gate params")};
  p.validate();
  return p;
}

Json to_json(const PulseControls& c) {
  return {{"s", c.s}, {"cAlpha", c.cAlpha}, {"cBeta", c.cBeta}, {"cGamma", c.cGamma}, {"lambda", c.lambda}};
}

PulseControls pulse_controls_from_json(const Json& j) {
  reject_unknown_keys(j, {"s", "cAlpha", "cBeta", "cGamma", "lambda"}, "pulse controls");
  PulseControls c;
  c.s = number(j, "s", "pulse controls");
  c.cAlpha = number_or(j, "cAlpha", c.cAlpha, "pulse controls");
  c.cBeta = number_or(j, "cBeta", c.cBeta, "pulse controls");
  c.cGamma = number_or(j, "cGamma", c.cGamma, "pulse controls");
  c.lambda = number_or(j, "lambda", c.lambda, "pulse controls");
  c.validate();
  return c;
}

Json to_json(const Pulse& p) {
  Json j = {{"pair", p.pair.label()}};
  const Json params = to_json(p.params);
  for (const auto& [k, v] : params.items()) j[k] = v;
  return j;
}

Pulse pulse_from_json(const Json& j) {
  reject_unknown_keys(j, {"pair", "lambda", "alpha", "beta", "gamma"}, "pulse");
  require(j.contains("pair") && j.at("pair").is_string(), ErrorKind::InvalidArgument, "pulse: missing \"pair\"");
  Json params = j;
  params.erase("pair");
  return {SpinPair::parse(j.at("pair").get<std::string>()), gate_params_from_json(params)};
}

Json matrix_to_json(const MatX& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatX matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty() && j[0].is_array(), ErrorKind::InvalidArgument, "matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  MatX m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    require(row.is_array() && static_cast<Eigen::Index>(row.size()) == cols, ErrorKind::InvalidArgument,
            "matrix rows differ in length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      require(e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number(), ErrorKind::InvalidArgument,
              "matrix entries must be [re, im]");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json to_json(const Rotation& r) {
  const Quaternion& q = r.quaternion;
  return Json::array({q.w, q.x, q.y, q.z, r.accumulatedLambda});
}

Json to_json(const ProgramRecord& r) {
  Json j;
  j["format"] = kProgramFormat;
  j["kind"] = r.kind;
  j["pulses"] = pulses_to_json(r.pulses);
  if (!r.before.empty() || !r.after.empty())
    j["corrections"] = {{"before", pulses_to_json(r.before)}, {"after", pulses_to_json(r.after)}};
  j["metadata"] = r.metadata;
  return j;
}

ProgramRecord program_from_json(const Json& j) {
  reject_unknown_keys(j, {"format", "kind", "pulses", "corrections", "metadata"}, "program");
  require(j.contains("format") && j.at("format") == kProgramFormat, ErrorKind::InvalidArgument,
          std::string("program: \"format\" must be \"") + kProgramFormat + "\"");
  require(j.contains("pulses"), ErrorKind::InvalidArgument, "program: missing \"pulses\"");
  ProgramRecord r;
  r.kind = j.value("kind", std::string{});
  r.pulses = pulses_from_json(j.at("pulses"), "program.pulses");
  if (j.contains("corrections")) {
    const Json& c = j.at("corrections");
    reject_unknown_keys(c, {"before", "after"}, "program.corrections");
    if (c.contains("before")) r.before = pulses_from_json(c.at("before"), "corrections.before");
    if (c.contains("after")) r.after = pulses_from_json(c.at("after"), "corrections.after");
  }
  if (j.contains("metadata")) r.metadata = j.at("metadata");
  return r;
}

ProgramRecord program_record(const CnotPlan& plan) {
  ProgramRecord r;
  r.kind = "cnot";
  r.pulses = plan.coreSequence.pulses();
  for (const auto& c : plan.corrections) {
    auto& dst = c.beforeCore ? r.before : r.after;
    dst.insert(dst.end(), c.pulses.pulses().begin(), c.pulses.pulses().end());
  }
  Json& m = r.metadata;
  m["procedure"] = plan.procedure;
  m["n"] = plan.n;
  m["Lambda"] = plan.coreSequence.lambdaTotal();
  m["Phi"] = plan.phiNetAngle;
  m["psi"] = plan.psi;
  m["pulseCount"] = plan.pulseCount;
  m["pulseCountBound"] = plan.countBound;
  m["totalPulseCount"] = plan.totalPulseCount();
  m["lambdaResidual"] = plan.lambdaResidual;
  m["xAxisDefect"] = plan.xAxisDefect;
  if (plan.procedure == 1) {
    m["mu"] = plan.mu;
    m["muEstimate"] = plan.muEstimate;
    m["aAxisTheta"] = plan.aAxisTheta;
    m["piPulses"] = plan.corePiPulses;
  } else {
    m["nu"] = Json::array({plan.nuBounds.lo, plan.nuBounds.hi});
  }
  if (plan.completed)
    m["layout"] = {{"hadamard", to_string(plan.layout.hadamard)}, {"rx", to_string(plan.layout.rx)}};
  return r;
}

ProgramRecord program_record(const SynthesisResult& result, const std::string& kind) {
  ProgramRecord r;
  r.kind = kind;
  r.pulses = result.sequence.pulses();
  r.metadata["pulseCount"] = result.pulseCount;
  r.metadata["Lambda"] = result.sequence.lambdaTotal();
  r.metadata["rotation"] = to_json(result.netRotation);
  r.metadata["targetResidual"] = result.targetResidual;
  return r;
}

Wedge wedge_from_json(const Json& j) {
  const std::string where = "wedge";
  require(j.is_object(), ErrorKind::InvalidArgument, "wedge must be a JSON object");
  if (j.contains("s")) {
    reject_unknown_keys(j, {"s", "cBeta", "cGamma"}, where);
    ControlRanges c;
    c.s = interval(j, "s", {}, where);
    c.cBeta = interval(j, "cBeta", c.cBeta, where);
    c.cGamma = interval(j, "cGamma", c.cGamma, where);
    return Wedge::from_controls(c);
  }
  reject_unknown_keys(j, {"thetaLo", "thetaHi", "gammaLo", "gammaHi"}, where);
  AxisRanges a;
  a.thetaLo = number(j, "thetaLo", where);
  a.thetaHi = number(j, "thetaHi", where);
  a.gammaLo = number_or(j, "gammaLo", 0.0, where);
  a.gammaHi = number_or(j, "gammaHi", a.gammaLo, where);
  return Wedge::from_axes(a);
}

Json to_json(const Wedge& w) {
  Json j;
  if (const auto* c = std::get_if<ControlRanges>(&w.source())) {
    j["s"] = {c->s.lo, c->s.hi};
    j["cBeta"] = {c->cBeta.lo, c->cBeta.hi};
    j["cGamma"] = {c->cGamma.lo, c->cGamma.hi};
  } else {
    const auto& a = std::get<AxisRanges>(w.source());
    j["thetaLo"] = a.thetaLo;
    j["thetaHi"] = a.thetaHi;
    j["gammaLo"] = a.gammaLo;
    j["gammaHi"] = a.gammaHi;
  }
  return j;
}

Json to_json(const EquivalenceReport& r) {
  return {{"g1", complex_pair(r.g1)}, {"g2", r.g2}, {"cnotClass", r.cnotClass},
          {"fidelityToCnot", r.fidelityToCnot}, {"leakage", r.leakage}};
}

Json to_json(const ReadoutResult& r) { return {{"pSinglet", r.pSinglet}, {"axisTilt", r.axisTilt}}; }

Json to_json(const PhaseCheck& c) { return {{"n", c.n}, {"residual", c.residual}, {"pass", c.pass}}; }

}  // namespace anisogate
