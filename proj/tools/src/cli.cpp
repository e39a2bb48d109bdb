#include "anisogate/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "anisogate/error.hpp"
#include "commands.hpp"

namespace anisogate::cli {

namespace {

bool takes_subcommand(const std::string& cmd) { return cmd == "compile" || cmd == "sweep"; }

std::string config_value(const Json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string joined;
    for (const auto& e : v) {
      require(e.is_number(), ErrorKind::InvalidArgument, "config key \"" + key + "\": list entries must be numbers");
      joined += (joined.empty() ? "" : ",") + e.dump();
    }
    return joined;
  }
  fail(ErrorKind::InvalidArgument, "config key \"" + key + "\" has an unsupported value type");
}

// Config keys become ordinary flags placed in front of the user's own flags.
// Every option keeps its last value, so anything on the command line wins,
// and a key that matches no flag is rejected by the parser like a bad flag.
std::vector<std::string> splice_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      require(i + 1 < args.size(), ErrorKind::InvalidArgument, "--config needs a file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;

  const Json cfg = read_json_file(*path);
  require(cfg.is_object(), ErrorKind::InvalidArgument, "config file must hold a JSON object");

  // skip root options (all of which take a value) to find the command words
  std::size_t at = 0;
  while (at < args.size() && !args[at].empty() && args[at].front() == '-')
    at += args[at].find('=') == std::string::npos ? 2 : 1;
  at = std::min(at, args.size());
  if (at < args.size()) {
    const std::string& cmd = args[at];
    ++at;
    if (takes_subcommand(cmd) && at < args.size() && !args[at].empty() && args[at].front() != '-') ++at;
  }
  std::vector<std::string> injected;
  for (const auto& [key, value] : cfg.items()) {
    if (key == "wedge") {
      injected.insert(injected.end(), {"--wedge-json", value.dump()});
    } else if (value.is_boolean()) {
      if (value.get<bool>()) injected.push_back("--" + key);
    } else {
      injected.insert(injected.end(), {"--" + key, config_value(value, key)});
    }
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), injected.begin(), injected.end());
  return args;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return kConfigError;
    case ErrorKind::Degenerate:
    case ErrorKind::Synthesis: return kSynthesisFailure;
    case ErrorKind::Contract: return kContractViolation;
  }
  return kConfigError;
}

void add_wedge_flags(CLI::App* app, WedgeFlags& w) {
  app->add_option("--theta-m", w.thetaM, "Wedge width, centered on --center (radians)");
  app->add_option("--center", w.center, "Wedge center for --theta-m (radians)");
  app->add_option("--gamma-lo", w.gammaLo, "Lower gamma bound for a --theta-m wedge");
  app->add_option("--gamma-hi", w.gammaHi, "Upper gamma bound for a --theta-m wedge");
  app->add_option("--s", w.s, "Spin-orbit strength; alone it gives the control wedge s in [-s, s]");
  app->add_option("--c-beta", w.cBeta, "C_beta range \"lo,hi\" (default 1)");
  app->add_option("--c-gamma", w.cGamma, "C_gamma range \"lo,hi\" (default 1)");
  app->add_option("--wedge-json", w.wedgeJson, "Wedge record as JSON (the config key \"wedge\")");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    args = splice_config(std::move(args));
  } catch (const Error& e) {
    err << "anisogate: " << e.what() << "\n";
    return kConfigError;
  } catch (const Json::exception& e) {
    err << "anisogate: config: " << e.what() << "\n";
    return kConfigError;
  }

  CLI::App app{"Compiler, verifier and simulator for anisotropic-exchange spin-pair gates", "anisogate"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.fallthrough();
  app.require_subcommand(1);

  Common common;
  std::string format = "table";
  std::optional<std::uint64_t> seed;
  std::string unusedConfig;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--seed", seed, "Seed for randomized searches (falls back to ANISOGATE_SEED)");
  app.add_option("--config", unusedConfig, "JSON file of flag values; explicit flags win");

  std::function<int()> action;

  GateFlags gate;
  auto* gateCmd = app.add_subcommand("gate", "Two-spin gate matrix and pseudospin form");
  gateCmd->add_option("--lambda", gate.lambda, "Integrated isotropic strength");
  gateCmd->add_option("--alpha", gate.alpha);
  gateCmd->add_option("--beta", gate.beta);
  gateCmd->add_option("--gamma", gate.gamma);
  gateCmd->callback([&] { action = [&] { return cmd_gate(gate, common, out); }; });

  CompileFlags comp;
  auto* compileCmd = app.add_subcommand("compile", "Compile pulse programs");
  compileCmd->require_subcommand(1);
  auto* xrot = compileCmd->add_subcommand("x-rot", "Rotation about pseudospin x from pi pulses");
  xrot->add_option("--angle", comp.angle, "Rotation angle (radians)")->required();
  xrot->add_option("--pair", comp.pair, "Spin pair, e.g. 1-2");
  xrot->add_option("--out", comp.out, "Write the program here");
  add_wedge_flags(xrot, comp.wedge);
  xrot->callback([&] { action = [&] { return cmd_compile_xrot(comp, common, out); }; });

  auto* oneq = compileCmd->add_subcommand("1q", "Arbitrary single-qubit gate via an Euler construction");
  oneq->add_option("--gate", comp.gate, "Named logical gate")->check(CLI::IsMember({"h", "x", "z", "s", "t"}));
  oneq->add_option("--axis", comp.axis, "Logical rotation axis \"x,y,z\" (with --angle)");
  oneq->add_option("--angle", comp.angle, "Rotation angle for --axis (radians)");
  oneq->add_option("--pair", comp.pair, "Spin pair, e.g. 1-2");
  oneq->add_option("--out", comp.out, "Write the program here");
  add_wedge_flags(oneq, comp.wedge);
  oneq->callback([&] { action = [&] { return cmd_compile_1q(comp, common, out); }; });

  auto* cnot = compileCmd->add_subcommand("cnot", "CNOT from middle-pair pulses plus corrections");
  cnot->add_option("--procedure", comp.procedure, "1 (mismatch absorbed by A pulses) or 2 (2 pi pulses)")
      ->check(CLI::IsMember({1, 2}));
  cnot->add_option("--a-axis", comp.aAxis, "Polar angle of the A-pulse axis (procedure 1)");
  cnot->add_option("--out", comp.out, "Write the program here");
  add_wedge_flags(cnot, comp.wedge);
  cnot->callback([&] { action = [&] { return cmd_compile_cnot(comp, common, out); }; });

  VerifyFlags ver;
  auto* verifyCmd = app.add_subcommand("verify", "Check a CNOT program's core and full circuit");
  verifyCmd->add_option("program", ver.program, "Program file")->required();
  verifyCmd->add_option("--phase-tol", ver.phaseTol, "Tolerance on Lambda = (2n+1) pi");
  verifyCmd->add_option("--cnot-tol", ver.cnotTol, "Tolerance on the CNOT-class invariants");
  verifyCmd->add_flag("--matrices", ver.matrices, "Include the logical matrices in JSON output");
  verifyCmd->callback([&] { action = [&] { return cmd_verify(ver, common, out); }; });

  SimulateFlags sim;
  auto* simCmd = app.add_subcommand("simulate", "Run a program on a spin chain and read out every pair");
  simCmd->add_option("program", sim.program, "Program file")->required();
  simCmd->add_option("--spins", sim.spins, "Chain length (even, 4..20)");
  simCmd->add_option("--init", sim.init, "Logical bits per pair (\"10\"), a configuration (\"udud\") or \"ground\"");
  simCmd->add_option("--beta", sim.beta, "Readout (and ground-state) beta");
  simCmd->add_option("--gamma", sim.gamma, "Readout (and ground-state) gamma");
  simCmd->add_flag("--amplitudes", sim.amplitudes, "Include the final amplitudes in JSON output");
  simCmd->callback([&] { action = [&] { return cmd_simulate(sim, common, out); }; });

  SweepFlags sw;
  auto* sweepCmd = app.add_subcommand("sweep", "Parameter sweeps written as CSV");
  sweepCmd->require_subcommand(1);
  auto* swTheta = sweepCmd->add_subcommand("theta-m", "Pulse counts versus wedge width");
  swTheta->add_option("--values", sw.values, "Comma-separated theta_m grid")->required();
  swTheta->add_option("--angle", sw.angle, "x-rotation angle");
  swTheta->add_option("--gamma", sw.gamma, "Fixed gamma across the wedge");
  swTheta->add_option("--out", sw.out, "Write the table here");
  swTheta->add_option("--threads", sw.threads, "Worker threads (0 = hardware)");
  swTheta->callback([&] { action = [&] { return cmd_sweep_theta_m(sw, common, out); }; });

  auto* swDelta = sweepCmd->add_subcommand("delta", "Pi-pair axis error versus pulse-angle error");
  swDelta->add_option("--values", sw.values, "Comma-separated delta1 grid")->required();
  swDelta->add_option("--theta", sw.theta, "Half-angle between the two axes");
  swDelta->add_option("--ratio", sw.ratio, "delta2 / delta1");
  swDelta->add_option("--out", sw.out, "Write the table here");
  swDelta->add_option("--threads", sw.threads, "Worker threads (0 = hardware)");
  swDelta->callback([&] { action = [&] { return cmd_sweep_delta(sw, common, out); }; });

  auto* swS = sweepCmd->add_subcommand("s", "Full CNOT compile-and-verify versus spin-orbit strength");
  swS->add_option("--values", sw.values, "Comma-separated s grid (wedge s in [-s, s])")->required();
  swS->add_option("--procedure", sw.procedure)->check(CLI::IsMember({"1", "2", "both"}));
  swS->add_option("--c-beta", sw.cBeta, "C_beta range \"lo,hi\"");
  swS->add_option("--c-gamma", sw.cGamma, "C_gamma range \"lo,hi\"");
  swS->add_option("--out", sw.out, "Write the table here");
  swS->add_option("--threads", sw.threads, "Worker threads (0 = hardware)");
  swS->callback([&] { action = [&] { return cmd_sweep_s(sw, common, out); }; });

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  common.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  if (seed) {
    common.seed = *seed;
  } else if (const char* env = std::getenv("ANISOGATE_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "anisogate: ANISOGATE_SEED is not an unsigned integer\n";
      return kConfigError;
    }
  }

  try {
    return action ? action() : kConfigError;
  } catch (const Error& e) {
    err << "anisogate: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    err << "anisogate: bad JSON: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::ios_base::failure& e) {
    err << "anisogate: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace anisogate::cli
