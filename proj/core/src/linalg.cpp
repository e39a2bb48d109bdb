#include "anisogate/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace anisogate {

double operator_norm(const MatX& m, double relTol, int maxIter) {
  if (m.size() == 0) return 0.0;
  const MatX gram = m.adjoint() * m;
  const Eigen::Index n = gram.cols();

  // Deterministic, non-symmetric start so no eigenvector is missed by accident.
  VecX v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = Complex(1.0 + 0.1 * static_cast<double>(i), 0.05 * static_cast<double>(i % 3));
  }
  v.normalize();

  double estimate = 0.0;
  for (int iter = 0; iter < maxIter; ++iter) {
    VecX w = gram * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    const double next = std::real(v.dot(w));
    v = w / norm;
    if (iter > 0 && std::abs(next - estimate) <= relTol * std::abs(next)) {
      estimate = next;
      break;
    }
    estimate = next;
  }
  // Rayleigh quotient of the final iterate.
  estimate = std::max(estimate, std::real(v.dot(gram * v)));
  return std::sqrt(std::max(estimate, 0.0));
}

double unitarity_defect(const MatX& u) {
  const MatX defect = u.adjoint() * u - MatX::Identity(u.cols(), u.cols());
  return operator_norm(defect);
}

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

MatX kron(const MatX& a, const MatX& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
  Mat2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
Mat2 y() {
  Mat2 m;
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}
Mat2 z() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

}  // namespace anisogate
