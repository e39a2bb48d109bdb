#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "anisogate/cli.hpp"
#include "anisogate/program_io.hpp"

namespace anisogate::cli {

enum class Format { Table, Json, Csv };

struct Common {
  Format format = Format::Table;
  std::uint64_t seed = 0;
};

struct WedgeFlags {
  std::optional<double> thetaM;
  double center = 0.0;
  std::optional<double> gammaLo;
  std::optional<double> gammaHi;
  std::optional<double> s;
  std::string cBeta;   // "lo,hi" or "v"
  std::string cGamma;
  std::string wedgeJson;

  Wedge build() const;
};

struct GateFlags {
  double lambda = 0.0, alpha = 0.0, beta = 0.0, gamma = 0.0;
};

struct CompileFlags {
  WedgeFlags wedge;
  std::string out;
  std::string pair = "1-2";
  // x-rot / 1q
  std::optional<double> angle;
  std::string gate;  // 1q: h, x, z, s, t
  std::string axis;  // 1q: "x,y,z" in logical coordinates
  // cnot
  int procedure = 1;
  std::optional<double> aAxis;
};

struct VerifyFlags {
  std::string program;
  double phaseTol = tol::kPhaseConstraint;
  double cnotTol = tol::kCnotClass;
  bool matrices = false;
};

struct SimulateFlags {
  std::string program;
  int spins = 4;
  std::string init;  // logical bits ("01"), configuration ("udud") or "ground"
  double beta = 0.0;
  double gamma = 0.0;
  bool amplitudes = false;
};

struct SweepFlags {
  std::string values;
  std::string out;
  // theta-m
  double angle = kPi;
  double gamma = 0.0;
  // delta
  double theta = 0.2;
  double ratio = 0.5;
  // s
  std::string procedure = "both";
  std::string cBeta;
  std::string cGamma;
  unsigned threads = 0;
};

int cmd_gate(const GateFlags& f, const Common& c, std::ostream& out);
int cmd_compile_xrot(const CompileFlags& f, const Common& c, std::ostream& out);
int cmd_compile_1q(const CompileFlags& f, const Common& c, std::ostream& out);
int cmd_compile_cnot(const CompileFlags& f, const Common& c, std::ostream& out);
int cmd_verify(const VerifyFlags& f, const Common& c, std::ostream& out);
int cmd_simulate(const SimulateFlags& f, const Common& c, std::ostream& out);
int cmd_sweep_theta_m(const SweepFlags& f, const Common& c, std::ostream& out);
int cmd_sweep_delta(const SweepFlags& f, const Common& c, std::ostream& out);
int cmd_sweep_s(const SweepFlags& f, const Common& c, std::ostream& out);

// helpers shared by the command files

std::vector<double> parse_list(const std::string& text, const char* what);
Interval parse_interval(const std::string& text, Interval fallback, const char* what);
std::string num(double v);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Two-column "key  value" block with the keys padded to one width.
class Table {
 public:
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void print(std::ostream& out) const;

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

}  // namespace anisogate::cli
