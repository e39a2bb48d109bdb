#include <atomic>
#include <cmath>
#include <thread>

#include "anisogate/error.hpp"
#include "commands.hpp"

namespace anisogate::cli {

namespace {

// Grid points run on worker threads; results land by index, so the output
// order never depends on scheduling.
template <class F>
std::vector<Json> parallel_rows(std::size_t count, unsigned threads, F&& row) {
  std::vector<Json> out(count);
  std::atomic<std::size_t> next{0};
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = row(i);
        out[i]["status"] = "ok";
      } catch (const Error& e) {
        out[i]["status"] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (v.is_number_float()) return num(v.get<double>());
  return v.dump();
}

// log(count) = a + slope * log(1 / thetaM)
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  return den == 0.0 ? std::nan("") : (n * sxy - sx * sy) / den;
}

int emit(const std::vector<std::string>& header, const std::vector<Json>& rows, Json extra, const SweepFlags& f,
         const Common& c, std::ostream& out) {
  std::string text;
  if (c.format == Format::Json) {
    Json j;
    j["rows"] = rows;
    for (auto& [k, v] : extra.items()) j[k] = v;
    text = j.dump(2) + "\n";
  } else {
    for (std::size_t k = 0; k < header.size(); ++k) text += (k ? "," : "") + header[k];
    text += "\n";
    for (const auto& r : rows) {
      for (std::size_t k = 0; k < header.size(); ++k)
        text += (k ? "," : "") + csv_cell(r.contains(header[k]) ? r.at(header[k]) : Json());
      text += "\n";
    }
  }
  if (f.out.empty()) {
    out << text;
  } else {
    write_text_file(f.out, text);
    out << "wrote " << rows.size() << " rows to " << f.out << "\n";
  }
  return kOk;
}

std::vector<double> grid(const SweepFlags& f) {
  auto v = parse_list(f.values, "--values");
  require(!v.empty(), ErrorKind::InvalidArgument, "empty sweep grid");
  return v;
}

}  // namespace

int cmd_sweep_theta_m(const SweepFlags& f, const Common& c, std::ostream& out) {
  const auto values = grid(f);
  const auto rows = parallel_rows(values.size(), f.threads, [&](std::size_t i) {
    const double thetaM = values[i];
    const Wedge w = Wedge::centered(thetaM, 0.0, {f.gamma, f.gamma});
    const SynthesisResult x = synthesize_x_rotation(f.angle, w);
    const CnotPlan p = procedure_one(w);
    Json r;
    r["index"] = i;
    r["thetaM"] = thetaM;
    r["xrotPulses"] = x.pulseCount;
    r["xrotFormula"] = x_rotation_pulse_count(f.angle, thetaM);
    r["xrotResidual"] = x.targetResidual;
    r["cnotCorePulses"] = p.pulseCount;
    r["cnotLambdaResidual"] = p.lambdaResidual;
    return r;
  });

  std::vector<double> lx, lxr, lcn;
  for (const auto& r : rows) {
    if (r.at("status") != "ok") continue;
    lx.push_back(std::log(1.0 / r.at("thetaM").get<double>()));
    lxr.push_back(std::log(r.at("xrotPulses").get<double>()));
    lcn.push_back(std::log(r.at("cnotCorePulses").get<double>()));
  }
  Json extra;
  if (lx.size() >= 2) extra["fit"] = {{"xrotExponent", loglog_slope(lx, lxr)}, {"cnotExponent", loglog_slope(lx, lcn)}};
  return emit({"index", "thetaM", "xrotPulses", "xrotFormula", "xrotResidual", "cnotCorePulses", "cnotLambdaResidual",
               "status"},
              rows, extra, f, c, out);
}

int cmd_sweep_delta(const SweepFlags& f, const Common& c, std::ostream& out) {
  const auto values = grid(f);
  require(f.theta > 0.0 && f.theta < kPi, ErrorKind::InvalidArgument, "--theta must lie in (0, pi)");
  const Vec3 n1 = yz_axis(0.5 * f.theta);
  const Vec3 n2 = yz_axis(-0.5 * f.theta);
  auto rows = parallel_rows(values.size(), f.threads, [&](std::size_t i) {
    const double d1 = values[i];
    const double d2 = f.ratio * d1;
    const ErroredPiPair e = pi_pair_with_errors(n1, n2, d1, d2);
    const Vec3 exact = e.exact.axis_towards(Vec3::UnitX());
    const Vec3 predicted = e.firstOrder.predicted_axis();
    Json r;
    r["index"] = i;
    r["delta1"] = d1;
    r["delta2"] = d2;
    r["tiltYPrime"] = e.firstOrder.tiltYPrime;
    r["tiltZPrime"] = e.firstOrder.tiltZPrime;
    r["residual"] = (exact - predicted).norm();
    r["residualNormalized"] = (exact - predicted.normalized()).norm();
    return r;
  });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].contains("residual") && rows[i - 1].contains("residual") && rows[i].at("residual").get<double>() > 0.0)
      rows[i]["ratio"] = rows[i - 1].at("residual").get<double>() / rows[i].at("residual").get<double>();
  }
  return emit({"index", "delta1", "delta2", "tiltYPrime", "tiltZPrime", "residual", "ratio", "residualNormalized", "status"}, rows, Json::object(),
              f, c, out);
}

int cmd_sweep_s(const SweepFlags& f, const Common& c, std::ostream& out) {
  const auto values = grid(f);
  const Interval cb = parse_interval(f.cBeta, {1.0, 1.0}, "--c-beta");
  const Interval cg = parse_interval(f.cGamma, {1.0, 1.0}, "--c-gamma");
  std::vector<std::pair<double, int>> points;
  for (double s : values) {
    if (f.procedure != "2") points.emplace_back(s, 1);
    if (f.procedure != "1") points.emplace_back(s, 2);
  }
  const auto rows = parallel_rows(points.size(), f.threads, [&](std::size_t i) {
    const auto [s, proc] = points[i];
    Json r;
    r["index"] = i;
    r["s"] = s;
    r["procedure"] = proc;
    const Wedge w = Wedge::from_controls({{-std::abs(s), std::abs(s)}, cb, cg});
    r["thetaM"] = w.thetaM();
    const CnotPlan plan = complete_cnot(proc == 1 ? procedure_one(w) : procedure_two(w), w);
    const auto program = plan.program();
    const LogicalAction full = logical_action_of_program(program);
    r["corePulses"] = plan.pulseCount;
    r["bound"] = plan.countBound;
    r["totalPulses"] = program.size();
    r["lambdaResidual"] = plan.lambdaResidual;
    r["leakage"] = full.leakage;
    r["infidelity"] = 1.0 - fidelity(full.gate.matrix, logical::cnot());
    return r;
  });
  return emit({"index", "s", "procedure", "thetaM", "corePulses", "bound", "totalPulses", "lambdaResidual", "leakage",
               "infidelity", "status"},
              rows, Json::object(), f, c, out);
}

}  // namespace anisogate::cli
