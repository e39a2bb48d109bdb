#include "anisogate/rotation.hpp"

#include <algorithm>
#include <cmath>

#include "anisogate/error.hpp"

namespace anisogate {

namespace {

void require_yz_unit(const Vec3& n, const char* name) {
  require(n.allFinite(), ErrorKind::InvalidArgument, std::string(name) + " must be finite");
  require(std::abs(n.norm() - 1.0) < tol::kInPlane, ErrorKind::InvalidArgument,
          std::string(name) + " must be a unit vector");
  require(std::abs(n.x()) <= tol::kInPlane, ErrorKind::InvalidArgument,
          std::string(name) + " must lie in the yz plane");
}

constexpr double kGimbal = 1e-12;

}  // namespace

Quaternion Quaternion::from_axis_angle(const Vec3& axis, double angle) {
  const double n = axis.norm();
  require(n > 0.0, ErrorKind::InvalidArgument, "rotation axis must be nonzero");
  const Vec3 u = axis / n;
  const double s = std::sin(0.5 * angle);
  return {std::cos(0.5 * angle), s * u.x(), s * u.y(), s * u.z()};
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::canonical() const {
  if (w > 0.0) return *this;
  if (w < 0.0) return -*this;
  for (double c : {x, y, z}) {
    if (c > 0.0) return *this;
    if (c < 0.0) return -*this;
  }
  return *this;
}

Mat2 Quaternion::su2() const {
  const Complex i(0.0, 1.0);
  return w * Mat2::Identity() - i * (x * pauli::x() + y * pauli::y() + z * pauli::z());
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Rotation Rotation::about(const Vec3& axis, double angle, double lambda) {
  return {Quaternion::from_axis_angle(axis, angle), lambda};
}

double Rotation::angle() const {
  return 2.0 * std::atan2(quaternion.vec().norm(), quaternion.w);
}

Vec3 Rotation::axis() const {
  const Vec3 v = quaternion.vec();
  const double n = v.norm();
  return n > 0.0 ? Vec3(v / n) : Vec3(Vec3::UnitZ());
}

double Rotation::angle_about(const Vec3& reference) const {
  const double along = quaternion.vec().dot(reference.normalized());
  return wrap(2.0 * std::atan2(along, quaternion.w), kFourPi);
}

Vec3 Rotation::axis_towards(const Vec3& reference) const {
  const Vec3 a = axis();
  return a.dot(reference) < 0.0 ? Vec3(-a) : a;
}

Rotation compose(const Rotation& first, const Rotation& second) {
  return {second.quaternion * first.quaternion, first.accumulatedLambda + second.accumulatedLambda};
}

Rotation to_rotation(const PseudospinRotation& rotation) {
  return Rotation::about(rotation.axis, rotation.angle, 2.0 * rotation.globalPhase);
}

double rotation_distance(const Rotation& a, const Rotation& b) {
  const Quaternion& p = a.quaternion;
  const Quaternion& q = b.quaternion;
  const double minus = std::sqrt((p.w - q.w) * (p.w - q.w) + (p.x - q.x) * (p.x - q.x) +
                                 (p.y - q.y) * (p.y - q.y) + (p.z - q.z) * (p.z - q.z));
  const double plus = std::sqrt((p.w + q.w) * (p.w + q.w) + (p.x + q.x) * (p.x + q.x) +
                                (p.y + q.y) * (p.y + q.y) + (p.z + q.z) * (p.z + q.z));
  return std::min(minus, plus);
}

double rotation_fidelity(const Rotation& a, const Rotation& b) {
  const Complex tr = (a.quaternion.su2().adjoint() * b.quaternion.su2()).trace();
  return std::norm(tr) / 4.0;
}

Vec3 yz_axis(double theta) { return {0.0, std::sin(theta), std::cos(theta)}; }

double polar_angle(const Vec3& axis) { return std::atan2(axis.y(), axis.z()); }

Rotation pi_pair(const Vec3& n1, const Vec3& n2) {
  require_yz_unit(n1, "n1");
  require_yz_unit(n2, "n2");
  return compose(Rotation::about(n1, kPi), Rotation::about(n2, kPi));
}

ErroredPiPair pi_pair_with_errors(const Vec3& n1, const Vec3& n2, double delta1, double delta2) {
  require_yz_unit(n1, "n1");
  require_yz_unit(n2, "n2");
  require(std::isfinite(delta1) && std::isfinite(delta2), ErrorKind::InvalidArgument,
          "angle errors must be finite");

  ErroredPiPair out;
  out.exact = compose(Rotation::about(n1, kPi + delta1), Rotation::about(n2, kPi + delta2));

  const double theta = std::acos(std::clamp(n1.dot(n2), -1.0, 1.0));
  const Vec3 sum = n1 + n2;
  require(sum.norm() > tol::kInPlane, ErrorKind::Degenerate, "antiparallel axes leave z' undefined");

  AxisError& e = out.firstOrder;
  e.zPrime = sum.normalized();
  e.yPrime = e.zPrime.cross(Vec3::UnitX());
  e.anglePredicted = 2.0 * theta;
  e.tiltYPrime = -(delta1 - delta2) / (4.0 * std::cos(0.5 * theta));

  const double sinHalf = std::sin(0.5 * theta);
  if (sinHalf == 0.0) {
    require(delta1 + delta2 == 0.0, ErrorKind::Degenerate,
            "tilt along z' diverges for coincident axes with delta1 + delta2 != 0");
    e.tiltZPrime = 0.0;
  } else {
    const double sense = n1.cross(n2).x() >= 0.0 ? 1.0 : -1.0;
    e.tiltZPrime = sense * (delta1 + delta2) / (4.0 * sinHalf);
  }
  return out;
}

EulerAngles euler_decompose(const Rotation& target, const Vec3& w) {
  require_yz_unit(w, "Euler axis w");
  // Right-handed frame (X', Y', Z') = (x-hat cross w, x-hat, w); in it the
  // problem is the textbook Z-Y-Z decomposition.
  const Vec3 xPrime = Vec3::UnitX().cross(w);
  const Quaternion& q = target.quaternion;
  const Vec3 v = q.vec();
  const double qx = v.dot(xPrime);
  const double qy = v.x();
  const double qz = v.dot(w);

  const double sinHalfB = std::hypot(qx, qy);
  const double cosHalfB = std::hypot(q.w, qz);

  EulerAngles out;
  if (sinHalfB < kGimbal) {
    out.a = 2.0 * std::atan2(qz, q.w);
  } else if (cosHalfB < kGimbal) {
    out.b = kPi;
    out.a = 2.0 * std::atan2(-qx, qy);
  } else {
    out.b = 2.0 * std::atan2(sinHalfB, cosHalfB);
    const double sum = std::atan2(qz, q.w);
    const double diff = std::atan2(-qx, qy);
    out.a = sum + diff;
    out.c = sum - diff;
  }
  return out;
}

Rotation euler_compose(const EulerAngles& angles, const Vec3& w) {
  Rotation r = Rotation::about(w, angles.c);
  r = compose(r, Rotation::about_x(angles.b));
  return compose(r, Rotation::about(w, angles.a));
}

}  // namespace anisogate
