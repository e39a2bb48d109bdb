#include "anisogate/wedge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "anisogate/error.hpp"

namespace anisogate {

namespace {

constexpr int kScanPoints = 2001;
constexpr int kGoldenIterations = 200;
constexpr int kBisectionIterations = 200;

void check_interval(const Interval& r, const char* name) {
  require(std::isfinite(r.lo) && std::isfinite(r.hi), ErrorKind::InvalidArgument,
          std::string(name) + " range must be finite");
  require(r.lo <= r.hi, ErrorKind::InvalidArgument, std::string(name) + " range is empty (lo > hi)");
}

std::vector<double> corner_candidates(const Interval& r) {
  std::vector<double> c{r.lo};
  if (r.hi != r.lo) c.push_back(r.hi);
  if (r.lo < 0.0 && r.hi > 0.0) c.push_back(0.0);
  return c;
}

std::vector<double> scan_grid(const Interval& r) {
  std::vector<double> g;
  if (r.hi == r.lo) return {r.lo};
  g.reserve(kScanPoints + 1);
  for (int i = 0; i < kScanPoints; ++i) {
    const double t = static_cast<double>(i) / (kScanPoints - 1);
    g.push_back(i == kScanPoints - 1 ? r.hi : r.lo + t * (r.hi - r.lo));
  }
  if (r.lo < 0.0 && r.hi > 0.0) g.push_back(0.0);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

}  // namespace

double AxisPoint::polar_angle() const { return std::atan2(beta, 1.0 + gamma); }

double AxisPoint::angle_per_lambda() const { return std::hypot(beta, 1.0 + gamma); }

double AxisPoint::two_pi_mismatch() const { return kTwoPi / angle_per_lambda() - kTwoPi; }

GateParams AxisPoint::for_angle(double angle) const {
  return with_lambda(lambda_for_angle(angle, 0.0, beta, gamma));
}

Wedge::Wedge(std::variant<ControlRanges, AxisRanges> source) : source_(std::move(source)) {
  if (const auto* c = std::get_if<ControlRanges>(&source_)) {
    check_interval(c->s, "s");
    check_interval(c->cBeta, "cBeta");
    check_interval(c->cGamma, "cGamma");
    const double sMax = std::max(std::abs(c->s.lo), std::abs(c->s.hi));
    const double gMin = std::min(c->cGamma.lo, 0.0) * sMax * sMax;
    require(1.0 + gMin > 0.0, ErrorKind::InvalidArgument, "control ranges allow gamma <= -1");
  } else {
    const auto& a = std::get<AxisRanges>(source_);
    check_interval({a.thetaLo, a.thetaHi}, "theta");
    check_interval({a.gammaLo, a.gammaHi}, "gamma");
    require(a.thetaLo > -kPi / 2.0 && a.thetaHi < kPi / 2.0, ErrorKind::InvalidArgument,
            "axis angles must lie strictly between -pi/2 and pi/2");
    require(1.0 + a.gammaLo > 0.0, ErrorKind::InvalidArgument, "gamma must exceed -1");
  }

  const auto theta = [this](const Coords& u) { return point(u).polar_angle(); };
  const auto nu = [this](const Coords& u) { return point(u).two_pi_mismatch(); };

  thetaLoAt_ = argextreme(theta, false);
  thetaHiAt_ = argextreme(theta, true);
  thetaLo_ = theta(thetaLoAt_);
  thetaHi_ = theta(thetaHiAt_);
  require(thetaM() > 0.0, ErrorKind::Degenerate, "wedge has zero angular extent; no x rotations are reachable");
  require(thetaM() <= kMaxThetaM, ErrorKind::InvalidArgument, "wedge wider than pi/2 is outside the model");

  nuLoAt_ = argextreme(nu, false);
  nuHiAt_ = argextreme(nu, true);
  nuRange_ = {nu(nuLoAt_), nu(nuHiAt_)};
}

Wedge Wedge::from_controls(const ControlRanges& ranges) { return Wedge(ranges); }

Wedge Wedge::from_axes(const AxisRanges& ranges) { return Wedge(ranges); }

Wedge Wedge::centered(double thetaM, double center, Interval gamma) {
  require(std::isfinite(thetaM) && thetaM > 0.0, ErrorKind::Degenerate, "theta_m must be positive");
  return from_axes({center - 0.5 * thetaM, center + 0.5 * thetaM, gamma.lo, gamma.hi});
}

std::array<Interval, 3> Wedge::box() const {
  if (const auto* c = std::get_if<ControlRanges>(&source_)) return {c->s, c->cBeta, c->cGamma};
  const auto& a = std::get<AxisRanges>(source_);
  return {Interval{a.thetaLo, a.thetaHi}, Interval{a.gammaLo, a.gammaHi}, Interval{0.0, 0.0}};
}

AxisPoint Wedge::point(const Coords& u) const {
  if (std::holds_alternative<ControlRanges>(source_)) return {u[1] * u[0], u[2] * u[0] * u[0]};
  return {(1.0 + u[1]) * std::tan(u[0]), u[1]};
}

// For both sources the objective is monotone (or even about 0) in the second
// and third coordinates, so those are searched over the interval ends and
// zero; the first coordinate gets a dense scan plus golden-section polish.
template <class F>
Wedge::Coords Wedge::argextreme(F&& f, bool maximize) const {
  const auto ranges = box();
  const double sign = maximize ? 1.0 : -1.0;
  const auto grid = scan_grid(ranges[0]);

  Coords best{};
  double bestValue = -std::numeric_limits<double>::infinity();
  for (double c1 : corner_candidates(ranges[1])) {
    for (double c2 : corner_candidates(ranges[2])) {
      std::size_t bestIdx = 0;
      double local = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = sign * f(Coords{grid[i], c1, c2});
        if (v > local) {
          local = v;
          bestIdx = i;
        }
      }
      Coords at{grid[bestIdx], c1, c2};
      if (bestIdx > 0 && bestIdx + 1 < grid.size()) {
        double a = grid[bestIdx - 1];
        double b = grid[bestIdx + 1];
        const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int it = 0; it < kGoldenIterations && b - a > 0.0; ++it) {
          const double x1 = b - phi * (b - a);
          const double x2 = a + phi * (b - a);
          if (sign * f(Coords{x1, c1, c2}) >= sign * f(Coords{x2, c1, c2})) {
            if (b == x2) break;
            b = x2;
          } else {
            if (a == x1) break;
            a = x1;
          }
        }
        const Coords polished{0.5 * (a + b), c1, c2};
        if (sign * f(polished) > local) {
          local = sign * f(polished);
          at = polished;
        }
      }
      if (local > bestValue) {
        bestValue = local;
        best = at;
      }
    }
  }
  return best;
}

template <class F>
AxisPoint Wedge::solve_on_segment(const Coords& from, const Coords& to, F&& f, double target) const {
  const auto lerp = [&](double t) {
    return Coords{from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1]), from[2] + t * (to[2] - from[2])};
  };
  const double g0 = f(from) - target;
  const double g1 = f(to) - target;
  if (g0 == 0.0) return point(from);
  if (g1 == 0.0) return point(to);
  require((g0 < 0.0) != (g1 < 0.0), ErrorKind::Synthesis, "requested value is outside the achievable wedge");

  double t0 = 0.0;
  double t1 = 1.0;
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double mid = 0.5 * (t0 + t1);
    if (mid <= t0 || mid >= t1) break;
    const double g = f(lerp(mid)) - target;
    if (g == 0.0) return point(lerp(mid));
    if ((g < 0.0) == (g0 < 0.0)) {
      t0 = mid;
    } else {
      t1 = mid;
    }
  }
  const Coords a = lerp(t0);
  const Coords b = lerp(t1);
  return std::abs(f(a) - target) <= std::abs(f(b) - target) ? point(a) : point(b);
}

bool Wedge::contains(double theta, double slack) const {
  return theta >= thetaLo_ - slack && theta <= thetaHi_ + slack;
}

std::optional<Interval> Wedge::gamma_range(double theta) const {
  if (!contains(theta, 1e-12)) return std::nullopt;
  if (const auto* a = std::get_if<AxisRanges>(&source_)) return Interval{a->gammaLo, a->gammaHi};

  // Coupled mode: at fixed s the axis condition cBeta s = tan(theta) (1 + cGamma s^2)
  // is linear in cGamma, so the feasible cGamma set is an interval. Only s is sampled.
  const auto& c = std::get<ControlRanges>(source_);
  constexpr int kS = 4001;
  std::optional<Interval> out;
  const auto add = [&](double g) {
    if (!out) {
      out = Interval{g, g};
    } else {
      out->lo = std::min(out->lo, g);
      out->hi = std::max(out->hi, g);
    }
  };
  const double t = std::tan(theta);
  const auto visit = [&](double s) {
    if (s == 0.0) {
      if (theta == 0.0) add(0.0);
      return;
    }
    const double slope = t * s, offset = t / s;
    double lo = c.cGamma.lo, hi = c.cGamma.hi;
    if (slope == 0.0) {
      if (!c.cBeta.contains(0.0, 1e-12)) return;
    } else {
      double a = (c.cBeta.lo - offset) / slope, b = (c.cBeta.hi - offset) / slope;
      if (a > b) std::swap(a, b);
      lo = std::max(lo, a);
      hi = std::min(hi, b);
      if (lo > hi + 1e-12) return;
      hi = std::max(lo, hi);
    }
    add(lo * s * s);
    add(hi * s * s);
  };
  for (int i = 0; i < kS; ++i) visit(c.s.lo + (c.s.hi - c.s.lo) * static_cast<double>(i) / (kS - 1));
  if (c.s.contains(0.0)) visit(0.0);
  // Wedge extremes are attained at the exact argmax points.
  if (std::abs(theta - thetaLo_) <= 1e-12) add(point(thetaLoAt_).gamma);
  if (std::abs(theta - thetaHi_) <= 1e-12) add(point(thetaHiAt_).gamma);
  return out;
}

AxisPoint Wedge::realize_axis(double theta) const {
  require(std::isfinite(theta) && contains(theta, 1e-12), ErrorKind::InvalidArgument,
          "requested axis angle lies outside the wedge");
  if (theta <= thetaLo_) return point(thetaLoAt_);
  if (theta >= thetaHi_) return point(thetaHiAt_);
  return solve_on_segment(thetaLoAt_, thetaHiAt_, [this](const Coords& u) { return point(u).polar_angle(); },
                          theta);
}

AxisPoint Wedge::realize_mismatch(double nu) const {
  require(std::isfinite(nu) && nuRange_.contains(nu, 1e-15), ErrorKind::InvalidArgument,
          "requested mismatch lies outside the achievable range");
  if (nu <= nuRange_.lo) return point(nuLoAt_);
  if (nu >= nuRange_.hi) return point(nuHiAt_);
  return solve_on_segment(nuLoAt_, nuHiAt_, [this](const Coords& u) { return point(u).two_pi_mismatch(); }, nu);
}

Wedge wedge_from_controls(Interval sRange, Interval cBetaRange, Interval cGammaRange) {
  return Wedge::from_controls({sRange, cBetaRange, cGammaRange});
}

int x_rotation_pulse_count(double theta, double thetaM) {
  require(std::isfinite(thetaM) && thetaM > 0.0, ErrorKind::Degenerate, "theta_m must be positive");
  const double wrapped = wrap(theta, kTwoPi);
  return 2 * static_cast<int>(std::floor(wrapped / (2.0 * thetaM))) + 2;
}

namespace {

void append_checked(PulseSequence& seq, const Wedge& wedge, SpinPair pair, const AxisPoint& axis, double angle) {
  require(wedge.contains(axis.polar_angle()), ErrorKind::Synthesis, "emitted pulse axis left the wedge");
  seq.append(Pulse{pair, axis.for_angle(angle)});
}

double angle_mod_2pi(double angle) {
  const double w = wrap(angle, kTwoPi);
  return w;
}

bool negligible(double angle) {
  const double w = angle_mod_2pi(angle);
  return std::min(w, kTwoPi - w) < 1e-14;
}

}  // namespace

SynthesisResult synthesize_x_rotation(double theta, const Wedge& wedge, SpinPair pair) {
  require(std::isfinite(theta), ErrorKind::InvalidArgument, "rotation angle must be finite");
  const double thetaM = wedge.thetaM();
  const double target = wrap(theta, kTwoPi);
  const int fullSteps = static_cast<int>(std::floor(target / (2.0 * thetaM)));
  const double remainderHalf = 0.5 * (target - 2.0 * thetaM * fullSteps);

  const AxisPoint lo = wedge.realize_axis(wedge.thetaLo());
  const AxisPoint hi = wedge.realize_axis(wedge.thetaHi());
  const AxisPoint interior = wedge.realize_axis(std::min(wedge.thetaLo() + remainderHalf, wedge.thetaHi()));

  SynthesisResult out;
  // pi about the larger polar angle first turns the pair positively about +x.
  for (int i = 0; i < fullSteps; ++i) {
    append_checked(out.sequence, wedge, pair, hi, kPi);
    append_checked(out.sequence, wedge, pair, lo, kPi);
  }
  append_checked(out.sequence, wedge, pair, interior, kPi);
  append_checked(out.sequence, wedge, pair, lo, kPi);

  out.pulseCount = static_cast<int>(out.sequence.size());
  out.netRotation = out.sequence.phiNet();
  out.targetResidual = rotation_distance(out.netRotation, Rotation::about_x(target));
  require(out.pulseCount == x_rotation_pulse_count(theta, thetaM), ErrorKind::Synthesis,
          "x-rotation pulse count disagrees with 2 floor(Theta/(2 theta_m)) + 2");
  return out;
}

SynthesisResult synthesize_1q(const Rotation& target, const Wedge& wedge, SpinPair pair) {
  const Quaternion q = target.quaternion;
  require(std::abs(q.norm() - 1.0) < 1e-10, ErrorKind::InvalidArgument, "target rotation must be a unit quaternion");

  // Prefer the target's own axis when it is available, so single-axis targets
  // cost one pulse; otherwise use the lower wedge edge.
  AxisPoint wPoint = wedge.realize_axis(wedge.thetaLo());
  const Vec3 axis = target.axis();
  if (q.vec().norm() > 1e-14 && std::abs(axis.x()) < tol::kInPlane) {
    for (const Vec3& candidate : {axis, Vec3(-axis)}) {
      const double polar = polar_angle(candidate);
      if (wedge.contains(polar, 0.0)) {
        wPoint = wedge.realize_axis(polar);
        break;
      }
    }
  }
  const Vec3 w = yz_axis(wPoint.polar_angle());
  const EulerAngles e = euler_decompose(target, w);

  SynthesisResult out;
  if (!negligible(e.c)) append_checked(out.sequence, wedge, pair, wPoint, angle_mod_2pi(e.c));
  if (!negligible(e.b)) out.sequence.append(synthesize_x_rotation(e.b, wedge, pair).sequence);
  if (!negligible(e.a)) append_checked(out.sequence, wedge, pair, wPoint, angle_mod_2pi(e.a));

  out.pulseCount = static_cast<int>(out.sequence.size());
  out.netRotation = out.sequence.phiNet();
  out.targetResidual = rotation_distance(out.netRotation, target);
  return out;
}

Interval nu_range(const Wedge& wedge) { return wedge.mismatch_range(); }

}  // namespace anisogate
