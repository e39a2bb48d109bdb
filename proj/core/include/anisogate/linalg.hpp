#pragma once

#include <complex>

#include <Eigen/Dense>

namespace anisogate {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kFourPi = 4.0 * kPi;

/// Default numerical tolerances shared across modules.
namespace tol {
inline constexpr double kUnitary = 1e-12;
inline constexpr double kHermitian = 1e-14;
inline constexpr double kAngle = 1e-10;
inline constexpr double kPhaseConstraint = 1e-9;
inline constexpr double kSynthesis = 1e-9;
inline constexpr double kCnotClass = 1e-9;
inline constexpr double kInPlane = 1e-12;
}  // namespace tol

/// Largest singular value, by power iteration on M^dagger M from a fixed start
/// vector. Converges to `relTol` in the eigenvalue estimate or stops after
/// `maxIter` sweeps.
double operator_norm(const MatX& m, double relTol = 1e-13, int maxIter = 5000);

inline double frobenius_norm(const MatX& m) { return m.norm(); }

/// ||U^dagger U - 1|| in operator norm.
double unitarity_defect(const MatX& u);

/// Reduces x into [0, period).
double wrap(double x, double period);

/// Tensor (Kronecker) product, first factor most significant.
MatX kron(const MatX& a, const MatX& b);

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

}  // namespace anisogate
