#include "anisogate/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "anisogate/error.hpp"

namespace anisogate {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Complex kI(0.0, 1.0);

Mat4 magic_basis() {
  Mat4 q;
  q << 1.0, 0.0, 0.0, kI,  //
      0.0, kI, 1.0, 0.0,   //
      0.0, kI, -1.0, 0.0,  //
      1.0, 0.0, 0.0, -kI;
  return q * kInvSqrt2;
}

// Partial traces of a 4x4 operator on qubit 0 (most significant) x qubit 1.
Mat2 trace_out_second(const Mat4& m) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += m(2 * i + k, 2 * j + k);
  return out;
}

Mat2 trace_out_first(const Mat4& m) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += m(2 * k + i, 2 * k + j);
  return out;
}

// argmax over unitary A of |tr(A Y)|.
Mat2 best_local(const Mat2& y) {
  Eigen::JacobiSVD<Mat2> svd(y, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixV() * svd.matrixU().adjoint();
}

Mat4 kron2(const Mat2& a, const Mat2& b) { return kron(a, b); }

Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Quaternion q{normal(rng), normal(rng), normal(rng), normal(rng)};
  const double n = q.norm();
  q = {q.w / n, q.x / n, q.y / n, q.z / n};
  return q.su2();
}

Mat4 nearest_unitary(const Mat4& m) {
  Eigen::JacobiSVD<Mat4> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

MatX embed_pair_operator(const Mat4& op, SpinPair pair, int nSpins) {
  require(pair.first >= 1 && pair.second() <= nSpins, ErrorKind::InvalidArgument,
          "spin pair " + pair.label() + " is outside a chain of " + std::to_string(nSpins) + " spins");
  const Eigen::Index left = Eigen::Index{1} << (pair.first - 1);
  const Eigen::Index right = Eigen::Index{1} << (nSpins - pair.second());
  return kron(kron(MatX::Identity(left, left), op), MatX::Identity(right, right));
}

Eigen::Matrix<Complex, 16, 4> logical_isometry() {
  const Vec4 states[2] = {basis::singlet(), basis::triplet0()};
  Eigen::Matrix<Complex, 16, 4> v;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) v.col(2 * a + b) = kron(states[a], states[b]);
  return v;
}

LogicalAction logical_action_of_program(std::span<const Pulse> program) {
  MatX u = MatX::Identity(16, 16);
  for (const auto& pulse : program) {
    u = embed_pair_operator(gate_unitary(pulse.params).matrix, pulse.pair, kLogicalSpins) * u;
  }
  const auto v = logical_isometry();
  const MatX image = u * v;
  const MatX outside = image - v * (v.adjoint() * image);

  LogicalAction out;
  out.gate.matrix = v.adjoint() * image;
  out.leakage = operator_norm(outside);
  out.leakageFrobenius = frobenius_norm(outside);
  return out;
}

LogicalAction logical_action(const PulseSequence& core) {
  require(core.all_on(kMiddlePair), ErrorKind::Contract, "two-qubit core must act only on spins 2-3");
  return logical_action_of_program(core.pulses());
}

MakhlinInvariants makhlin_invariants(const LogicalGate& u) {
  require(unitarity_defect(u.matrix) < 1e-9, ErrorKind::Contract, "local invariants need a unitary gate");
  const Mat4 q = magic_basis();
  const Mat4 ub = q.adjoint() * u.matrix * q;
  const Mat4 m = ub.transpose() * ub;
  const Complex det = u.matrix.determinant();
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();

  MakhlinInvariants out;
  out.g1 = tr * tr / (16.0 * det);
  const Complex g2 = (tr * tr - tr2) / (4.0 * det);
  out.g2 = g2.real();
  out.g2Imag = g2.imag();
  return out;
}

double optimize_local_fidelity(const Mat4& u, const Mat4& target, std::uint64_t seed, int starts) {
  std::mt19937_64 rng(seed);
  const Mat4 targetAdj = target.adjoint();
  double best = 0.0;
  for (int start = 0; start < std::max(starts, 1); ++start) {
    Mat2 a1 = Mat2::Identity(), a2 = Mat2::Identity(), b1 = Mat2::Identity(), b2 = Mat2::Identity();
    if (start > 0) {
      a1 = random_su2(rng);
      a2 = random_su2(rng);
      b1 = random_su2(rng);
      b2 = random_su2(rng);
    }
    double value = 0.0;
    for (int it = 0; it < 4000; ++it) {
      a1 = best_local(trace_out_second(kron2(Mat2::Identity(), a2) * u * kron2(b1, b2) * targetAdj));
      a2 = best_local(trace_out_first(u * kron2(b1, b2) * targetAdj * kron2(a1, Mat2::Identity())));
      const Mat4 left = kron2(a1, a2);
      b1 = best_local(trace_out_second(kron2(Mat2::Identity(), b2) * targetAdj * left * u));
      b2 = best_local(trace_out_first(targetAdj * left * u * kron2(b1, Mat2::Identity())));
      const double next = std::norm((targetAdj * left * u * kron2(b1, b2)).trace()) / 16.0;
      const bool done = next - value < 1e-16;
      value = std::max(value, next);
      if (done && it > 2) break;
    }
    best = std::max(best, value);
    if (best > 1.0 - 1e-15) break;
  }
  return std::min(best, 1.0);
}

EquivalenceReport is_cnot_equivalent(const LogicalGate& u, std::uint64_t seed, double leakage) {
  EquivalenceReport report;
  report.leakage = leakage;
  const bool unitary = unitarity_defect(u.matrix) < 1e-9;
  const Mat4 w = unitary ? u.matrix : nearest_unitary(u.matrix);
  const auto inv = makhlin_invariants(LogicalGate{w});
  report.g1 = inv.g1;
  report.g2 = inv.g2;
  report.cnotClass = unitary && std::abs(inv.g1) < tol::kCnotClass && std::abs(inv.g2 - 1.0) < tol::kCnotClass;
  report.fidelityToCnot = optimize_local_fidelity(u.matrix, logical::cnot(), seed);
  return report;
}

double decomposition_check(double Lambda, double Phi) {
  require(std::isfinite(Lambda) && std::isfinite(Phi), ErrorKind::InvalidArgument, "angles must be finite");
  PseudospinRotation rot;
  rot.axis = Vec3::UnitX();
  rot.angle = wrap(Phi, kFourPi);
  rot.globalPhase = 0.5 * Lambda;
  const MatX lhs16 = embed_pair_operator(gate_from_pseudospin(rot).matrix, kMiddlePair, kLogicalSpins);
  const auto v = logical_isometry();
  const Mat4 lhs = v.adjoint() * lhs16 * v;
  return operator_norm(lhs - logical::two_qubit_form(Lambda, Phi));
}

double fidelity(const MatX& u, const MatX& v) {
  require(u.rows() == v.rows() && u.cols() == v.cols() && u.rows() == u.cols(), ErrorKind::InvalidArgument,
          "fidelity needs square operators of equal dimension");
  const double dim = static_cast<double>(u.rows());
  return std::norm((u.adjoint() * v).trace()) / (dim * dim);
}

namespace logical {

Mat4 identity() { return Mat4::Identity(); }

Mat4 cnot() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

Mat4 swap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

Mat2 x() { return pauli::x(); }
Mat2 z() { return pauli::z(); }
Mat2 hadamard() { return (pauli::x() + pauli::z()) * kInvSqrt2; }

Mat2 rx(double angle) {
  return std::cos(0.5 * angle) * Mat2::Identity() - kI * std::sin(0.5 * angle) * pauli::x();
}

Mat4 on_qubit(const Mat2& op, int qubit) {
  require(qubit == 0 || qubit == 1, ErrorKind::InvalidArgument, "logical qubit index must be 0 or 1");
  return qubit == 0 ? kron2(op, Mat2::Identity()) : kron2(Mat2::Identity(), op);
}

Mat4 two_qubit_form(double Lambda, double Phi) {
  const Mat4 id = Mat4::Identity();
  const Mat4 xx = kron2(pauli::x(), pauli::x());
  const Mat4 x1 = on_qubit(pauli::x(), 0);
  const Mat4 x2 = on_qubit(pauli::x(), 1);
  const double l = 0.25 * Lambda;
  const double p = 0.25 * Phi;
  const Mat4 ent = std::cos(l) * id + kI * std::sin(l) * xx;
  const Mat4 r1 = std::cos(p) * id + kI * std::sin(p) * x1;
  const Mat4 r2 = std::cos(p) * id + kI * std::sin(p) * x2;
  return std::polar(1.0, l) * ent * r1 * r2;
}

Mat2 from_rotation(const Rotation& r) {
  const Mat2 sx = pauli::x();
  return sx * r.quaternion.su2() * sx;
}

Rotation to_rotation(const Mat2& op) {
  const Mat2 sx = pauli::x();
  Mat2 pseudo = sx * op * sx;
  const Complex det = pseudo.determinant();
  require(std::abs(std::abs(det) - 1.0) < 1e-9, ErrorKind::InvalidArgument, "single-qubit gate must be unitary");
  pseudo /= std::sqrt(det);
  // M = w - i (x sx + y sy + z sz)  =>  c_k = (i/2) tr(sigma_k M).
  Quaternion q;
  q.w = 0.5 * pseudo.trace().real();
  q.x = (0.5 * kI * (pauli::x() * pseudo).trace()).real();
  q.y = (0.5 * kI * (pauli::y() * pseudo).trace()).real();
  q.z = (0.5 * kI * (pauli::z() * pseudo).trace()).real();
  const double n = q.norm();
  return Rotation{{q.w / n, q.x / n, q.y / n, q.z / n}, 0.0};
}

}  // namespace logical

}  // namespace anisogate
