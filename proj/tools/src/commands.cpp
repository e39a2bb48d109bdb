#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "anisogate/error.hpp"
#include "commands.hpp"

namespace anisogate::cli {

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, std::string(what) + ": \"" + item + "\" is not a number");
    }
    require(item.find_first_not_of(" \t", used) == std::string::npos && std::isfinite(v), ErrorKind::InvalidArgument,
            std::string(what) + ": \"" + item + "\" is not a finite number");
    out.push_back(v);
  }
  return out;
}

Interval parse_interval(const std::string& text, Interval fallback, const char* what) {
  if (text.empty()) return fallback;
  const auto v = parse_list(text, what);
  require(v.size() == 1 || v.size() == 2, ErrorKind::InvalidArgument, std::string(what) + " takes \"lo,hi\" or one value");
  const Interval i = v.size() == 1 ? Interval{v[0], v[0]} : Interval{v[0], v[1]};
  require(i.lo <= i.hi, ErrorKind::InvalidArgument, std::string(what) + ": lo exceeds hi");
  return i;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::InvalidArgument, "cannot read " + path);
  return Json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  require(f.good(), ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
  require(f.good(), ErrorKind::InvalidArgument, "failed writing " + path);
}

void Table::print(std::ostream& out) const {
  std::size_t width = 0;
  for (const auto& r : rows_) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows_) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

Wedge WedgeFlags::build() const {
  const Interval cb = parse_interval(cBeta, {1.0, 1.0}, "--c-beta");
  const Interval cg = parse_interval(cGamma, {1.0, 1.0}, "--c-gamma");
  if (thetaM) {
    Interval gamma{0.0, 0.0};
    if (gammaLo) {
      gamma = {*gammaLo, gammaHi.value_or(*gammaLo)};
    } else if (s) {
      const double g = cg.lo * *s * *s;
      gamma = {g, g};
    }
    require(gamma.lo <= gamma.hi, ErrorKind::InvalidArgument, "--gamma-lo exceeds --gamma-hi");
    return Wedge::centered(*thetaM, center, gamma);
  }
  if (s) return Wedge::from_controls({{-std::abs(*s), std::abs(*s)}, cb, cg});
  if (!wedgeJson.empty()) return wedge_from_json(Json::parse(wedgeJson));
  fail(ErrorKind::InvalidArgument, "no wedge given: use --theta-m, --s or a \"wedge\" config entry");
}

namespace {

std::string complex_text(Complex c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", c.real(), c.imag());
  return buf;
}

void emit_program(const ProgramRecord& record, const CompileFlags& f, const Common& c, const Table& summary,
                  std::ostream& out) {
  const std::string text = to_json(record).dump(2) + "\n";
  if (!f.out.empty()) write_text_file(f.out, text);
  if (c.format == Format::Json) {
    out << text;
  } else {
    summary.print(out);
    if (!f.out.empty()) out << "program written to " << f.out << "\n";
  }
}

Table synthesis_summary(const SynthesisResult& r, const Wedge& w) {
  Table t;
  t.row("thetaM", num(w.thetaM()));
  t.row("pulses", std::to_string(r.pulseCount));
  t.row("Lambda", num(r.sequence.lambdaTotal()));
  t.row("rotation angle", num(r.netRotation.angle()));
  t.row("residual", num(r.targetResidual));
  return t;
}

Mat2 named_gate(const std::string& name) {
  const Complex i(0.0, 1.0);
  Mat2 m = Mat2::Identity();
  if (name == "h") return logical::hadamard();
  if (name == "x") return logical::x();
  if (name == "z") return logical::z();
  if (name == "s") m(1, 1) = i;
  if (name == "t") m(1, 1) = std::exp(i * (kPi / 4.0));
  return m;
}

}  // namespace

int cmd_gate(const GateFlags& f, const Common& c, std::ostream& out) {
  const GateParams p{f.lambda, f.alpha, f.beta, f.gamma};
  p.validate();
  const TwoSpinGate g = gate_unitary(p);
  const PseudospinRotation r = pseudospin_form(p);
  if (c.format == Format::Json) {
    Json j;
    j["params"] = to_json(p);
    j["matrix"] = matrix_to_json(g.matrix);
    j["pseudospin"] = {{"axis", {r.axis.x(), r.axis.y(), r.axis.z()}}, {"angle", r.angle}, {"globalPhase", r.globalPhase}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "U(lambda=" << num(p.lambda) << "; alpha=" << num(p.alpha) << ", beta=" << num(p.beta)
      << ", gamma=" << num(p.gamma) << ")  basis uu, ud, du, dd\n";
  for (int row = 0; row < 4; ++row) {
    out << " ";
    for (int col = 0; col < 4; ++col) out << "  " << complex_text(g.matrix(row, col));
    out << "\n";
  }
  Table t;
  t.row("pseudospin axis", "(" + num(r.axis.x()) + ", " + num(r.axis.y()) + ", " + num(r.axis.z()) + ")");
  t.row("angle", num(r.angle));
  t.row("global phase", num(r.globalPhase));
  t.print(out);
  return kOk;
}

int cmd_compile_xrot(const CompileFlags& f, const Common& c, std::ostream& out) {
  const Wedge w = f.wedge.build();
  require(f.angle.has_value(), ErrorKind::InvalidArgument, "--angle is required");
  const SynthesisResult r = synthesize_x_rotation(*f.angle, w, SpinPair::parse(f.pair));
  ProgramRecord rec = program_record(r, "x-rot");
  rec.metadata["angle"] = *f.angle;
  rec.metadata["wedge"] = to_json(w);
  rec.metadata["thetaM"] = w.thetaM();
  emit_program(rec, f, c, synthesis_summary(r, w), out);
  return kOk;
}

int cmd_compile_1q(const CompileFlags& f, const Common& c, std::ostream& out) {
  const Wedge w = f.wedge.build();
  Mat2 target;
  std::string label;
  if (!f.gate.empty()) {
    require(f.axis.empty(), ErrorKind::InvalidArgument, "give either --gate or --axis, not both");
    target = named_gate(f.gate);
    label = f.gate;
  } else {
    require(!f.axis.empty() && f.angle.has_value(), ErrorKind::InvalidArgument, "1q needs --gate or --axis with --angle");
    const auto a = parse_list(f.axis, "--axis");
    require(a.size() == 3, ErrorKind::InvalidArgument, "--axis takes three components");
    Vec3 n(a[0], a[1], a[2]);
    require(n.norm() > 0.0, ErrorKind::InvalidArgument, "--axis must be nonzero");
    n.normalize();
    const Mat2 ns = n.x() * pauli::x() + n.y() * pauli::y() + n.z() * pauli::z();
    target = std::cos(*f.angle / 2) * Mat2::Identity() - Complex(0.0, std::sin(*f.angle / 2)) * ns;
    label = "axis";
  }
  const SynthesisResult r = synthesize_1q(logical::to_rotation(target), w, SpinPair::parse(f.pair));
  ProgramRecord rec = program_record(r, "1q");
  rec.metadata["gate"] = label;
  rec.metadata["wedge"] = to_json(w);
  rec.metadata["thetaM"] = w.thetaM();
  emit_program(rec, f, c, synthesis_summary(r, w), out);
  return kOk;
}

int cmd_compile_cnot(const CompileFlags& f, const Common& c, std::ostream& out) {
  const Wedge w = f.wedge.build();
  const CnotPlan core = f.procedure == 1 ? procedure_one(w, f.aAxis) : procedure_two(w);
  const CnotPlan plan = complete_cnot(core, w);
  ProgramRecord rec = program_record(plan);
  rec.metadata["wedge"] = to_json(w);
  rec.metadata["thetaM"] = w.thetaM();

  Table t;
  t.row("procedure", std::to_string(plan.procedure));
  t.row("thetaM", num(w.thetaM()));
  t.row("core pulses", std::to_string(plan.pulseCount) + " (bound " + std::to_string(plan.countBound) + ")");
  t.row("total pulses", std::to_string(plan.totalPulseCount()));
  t.row("n", std::to_string(plan.n));
  t.row("Lambda", num(plan.coreSequence.lambdaTotal()) + " = (2n+1) pi + " + num(plan.coreSequence.lambdaTotal() - (2.0 * plan.n + 1.0) * kPi));
  t.row("Phi", num(plan.phiNetAngle));
  t.row("psi", num(plan.psi));
  if (plan.procedure == 1) {
    t.row("mu", num(plan.mu) + " (estimate " + num(plan.muEstimate) + ")");
  } else {
    t.row("nu range", "[" + num(plan.nuBounds.lo) + ", " + num(plan.nuBounds.hi) + "]");
  }
  t.row("layout", std::string("H on ") + to_string(plan.layout.hadamard) + ", Rx on " + to_string(plan.layout.rx));
  emit_program(rec, f, c, t, out);
  return kOk;
}

int cmd_verify(const VerifyFlags& f, const Common& c, std::ostream& out) {
  const ProgramRecord rec = program_from_json(read_json_file(f.program));
  const PulseSequence core(rec.pulses);
  const LogicalAction action = logical_action(core);  // Contract error off pair 2-3
  EquivalenceReport eq = is_cnot_equivalent(action.gate, c.seed, action.leakage);
  eq.cnotClass = std::abs(eq.g1) < f.cnotTol && std::abs(eq.g2 - 1.0) < f.cnotTol && action.leakage < f.cnotTol;
  const PhaseCheck phase = phase_constraint_check(core, f.phaseTol);

  const bool hasCircuit = !rec.before.empty() || !rec.after.empty();
  LogicalAction full;
  double circuitFidelity = 0.0;
  if (hasCircuit) {
    const auto program = rec.full_program();
    full = logical_action_of_program(program);
    circuitFidelity = fidelity(full.gate.matrix, logical::cnot());
  }

  if (c.format == Format::Json) {
    Json j;
    j["kind"] = rec.kind;
    j["corePulses"] = rec.pulses.size();
    j["phase"] = to_json(phase);
    j["equivalence"] = to_json(eq);
    if (hasCircuit) j["circuit"] = {{"pulses", rec.full_program().size()}, {"fidelityToCnot", circuitFidelity}, {"leakage", full.leakage}};
    if (f.matrices) {
      j["matrices"]["core"] = matrix_to_json(action.gate.matrix);
      if (hasCircuit) j["matrices"]["circuit"] = matrix_to_json(full.gate.matrix);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  Table t;
  t.row("core pulses", std::to_string(rec.pulses.size()));
  t.row("Lambda", num(core.lambdaTotal()) + "  n=" + std::to_string(phase.n) + "  residual=" + num(phase.residual) +
                      (phase.pass ? "  ok" : "  FAIL"));
  t.row("G1", complex_text(eq.g1));
  t.row("G2", num(eq.g2));
  t.row("CNOT class", eq.cnotClass ? "yes" : "no");
  t.row("local fidelity", num(eq.fidelityToCnot));
  t.row("core leakage", num(action.leakage));
  if (hasCircuit) {
    t.row("circuit pulses", std::to_string(rec.full_program().size()));
    t.row("circuit fidelity", num(circuitFidelity));
    t.row("circuit leakage", num(full.leakage));
  }
  t.print(out);
  return kOk;
}

int cmd_simulate(const SimulateFlags& f, const Common& c, std::ostream& out) {
  const ProgramRecord rec = program_from_json(read_json_file(f.program));
  const GateParams device{1.0, 0.0, f.beta, f.gamma};
  device.validate();
  const int n = f.spins;
  require(n >= ChainState::kMinSpins && n <= ChainState::kMaxSpins && n % 2 == 0, ErrorKind::InvalidArgument,
          "--spins must be even and between 4 and 20");

  std::optional<ChainState> state;
  if (f.init == "ground") {
    state = init_ground(n, device);
  } else if (!f.init.empty() && f.init.find_first_not_of("ud") == std::string::npos) {
    require(static_cast<int>(f.init.size()) == n, ErrorKind::InvalidArgument, "--init configuration needs one letter per spin");
    state = ChainState::configuration(f.init);
  } else {
    const std::string bits = f.init.empty() ? std::string(static_cast<std::size_t>(n / 2), '0') : f.init;
    require(bits.find_first_not_of("01") == std::string::npos && static_cast<int>(bits.size()) == n / 2,
            ErrorKind::InvalidArgument, "--init takes one logical bit per pair, a u/d configuration or \"ground\"");
    std::vector<Vec4> pairs;
    for (char b : bits) pairs.push_back(b == '0' ? basis::singlet() : basis::triplet0());
    state = ChainState::from_pairs(pairs);
  }

  const auto program = rec.full_program();
  const ChainState final = run_program(*state, program);

  Json readouts = Json::array();
  Table t;
  t.row("spins", std::to_string(n));
  t.row("pulses", std::to_string(program.size()));
  for (int first = 1; first < n; first += 2) {
    const SpinPair pair{first};
    const ReadoutResult r = readout(final, pair, device);
    Json j = {{"pair", pair.label()}};
    const Json fields = to_json(r);
    for (const auto& [k, v] : fields.items()) j[k] = v;
    readouts.push_back(j);
    t.row("pair " + pair.label(), "pSinglet=" + num(r.pSinglet) + "  axisTilt=" + num(r.axisTilt));
  }

  if (c.format == Format::Json) {
    Json j;
    j["spins"] = n;
    j["pulses"] = program.size();
    j["norm"] = final.norm();
    j["readout"] = readouts;
    if (f.amplitudes) {
      Json a = Json::array();
      for (Eigen::Index i = 0; i < final.amplitudes().size(); ++i)
        a.push_back({final.amplitudes()(i).real(), final.amplitudes()(i).imag()});
      j["amplitudes"] = a;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  t.print(out);
  return kOk;
}

}  // namespace anisogate::cli
