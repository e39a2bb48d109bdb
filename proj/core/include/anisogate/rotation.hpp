#pragma once

// SU(2) rotations with exact bookkeeping of the accumulated pulse strength.
//
// A unit quaternion (w, x, y, z) stands for the SU(2) element
// w - i (x sigma_x + y sigma_y + z sigma_z), i.e. a rotation by `angle`
// about `axis` is (cos(angle/2), sin(angle/2) axis). The sign of the
// quaternion is physical here: it separates Phi from Phi + 2 pi.

#include "anisogate/exchange.hpp"
#include "anisogate/linalg.hpp"

namespace anisogate {

struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion from_axis_angle(const Vec3& axis, double angle);

  Vec3 vec() const { return {x, y, z}; }
  double norm() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  /// Representative with w >= 0 (for comparisons only).
  Quaternion canonical() const;
  Mat2 su2() const;

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

struct Rotation {
  Quaternion quaternion;
  double accumulatedLambda = 0.0;

  static Rotation identity() { return {}; }
  static Rotation about(const Vec3& axis, double angle, double lambda = 0.0);
  /// Rotation about x-hat (the pseudospin x axis).
  static Rotation about_x(double angle) { return about(Vec3::UnitX(), angle); }

  /// Rotation angle in [0, 2 pi] with the axis returned by axis().
  double angle() const;
  /// Unit rotation axis; z-hat when the rotation is trivial.
  Vec3 axis() const;
  /// Signed angle about `reference`, wrapped into [0, 4 pi). Meaningful when the
  /// rotation axis is (anti)parallel to `reference`.
  double angle_about(const Vec3& reference) const;
  /// Axis oriented to have a non-negative component along `reference`.
  Vec3 axis_towards(const Vec3& reference) const;
};

/// `first` is applied first: the quaternion is q(second) q(first).
Rotation compose(const Rotation& first, const Rotation& second);

/// Pseudospin image of a gate as a Rotation carrying lambda = 2 * globalPhase.
Rotation to_rotation(const PseudospinRotation& rotation);

/// min(|qa - qb|, |qa + qb|): distance between rotations ignoring spinor sign.
double rotation_distance(const Rotation& a, const Rotation& b);

/// |tr(Ua^dagger Ub)|^2 / 4.
double rotation_fidelity(const Rotation& a, const Rotation& b);

/// Unit axis in the yz plane at signed polar angle `theta` from z-hat,
/// (0, sin theta, cos theta).
Vec3 yz_axis(double theta);
/// Inverse of yz_axis for vectors in the yz plane.
double polar_angle(const Vec3& axis);

/// Pi rotation about n1 followed by a pi rotation about n2 (both in the yz
/// plane). The result is a 2 theta rotation about x-hat, cos theta = n1.n2;
/// it is positive about +x-hat when n1 sits at the larger polar angle.
Rotation pi_pair(const Vec3& n1, const Vec3& n2);

/// First-order description of a pi pair with angle errors.
struct AxisError {
  double tiltYPrime = 0.0;
  double tiltZPrime = 0.0;
  double anglePredicted = 0.0;
  Vec3 yPrime = Vec3::UnitY();  ///< z' x x-hat
  Vec3 zPrime = Vec3::UnitZ();  ///< parallel to n1 + n2

  /// x-hat + tiltYPrime y' + tiltZPrime z' (not normalized).
  Vec3 predicted_axis() const { return Vec3::UnitX() + tiltYPrime * yPrime + tiltZPrime * zPrime; }
};

struct ErroredPiPair {
  Rotation exact;
  AxisError firstOrder;
};

/// (pi + delta1) about n1, then (pi + delta2) about n2. Tilts are for the
/// composite axis oriented along +x-hat:
///   tilt_y' = -(delta1 - delta2) / (4 cos(theta/2)),
///   tilt_z' = sense * (delta1 + delta2) / (4 sin(theta/2)) ~ (delta1 + delta2) / (2 theta),
/// where sense = +1 when the error-free pair turns about +x-hat.
ErroredPiPair pi_pair_with_errors(const Vec3& n1, const Vec3& n2, double delta1, double delta2);

struct EulerAngles {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Finds (a, b, c) with R_w(a) R_x(b) R_w(c) = target up to spinor sign, for a
/// unit axis w in the yz plane. b is in [0, pi]; a and c in (-2 pi, 2 pi].
/// When b is 0 or pi, c is set to 0.
EulerAngles euler_decompose(const Rotation& target, const Vec3& w);

/// R_w(a) R_x(b) R_w(c) assembled from the angles.
Rotation euler_compose(const EulerAngles& angles, const Vec3& w);

}  // namespace anisogate
