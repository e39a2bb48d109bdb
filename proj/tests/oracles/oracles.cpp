#include "oracles.hpp"

#include <cmath>

namespace oracle {

M pauli(char which) {
  M p = M::Zero(2, 2);
  const C i(0, 1);
  switch (which) {
    case 'x': p(0, 1) = 1; p(1, 0) = 1; break;
    case 'y': p(0, 1) = -i; p(1, 0) = i; break;
    case 'z': p(0, 0) = 1; p(1, 1) = -1; break;
    default: p = M::Identity(2, 2);
  }
  return p;
}

M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

M hamiltonian(double alpha, double beta, double gamma) {
  const auto s1 = [](char k) { return kron(0.5 * pauli(k), pauli('i')); };
  const auto s2 = [](char k) { return kron(pauli('i'), 0.5 * pauli(k)); };
  M h = s1('x') * s2('x') + s1('y') * s2('y') + s1('z') * s2('z');
  h += (alpha / 2) * (s1('z') - s2('z'));
  h += beta * (s1('x') * s2('y') - s1('y') * s2('x'));
  h += gamma * (s1('x') * s2('x') + s1('y') * s2('y'));
  h -= 0.25 * M::Identity(4, 4);
  return h;
}

M expm(const M& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const M scaled = a / std::pow(2.0, squarings);
  M term = M::Identity(a.rows(), a.cols());
  M sum = term;
  for (int k = 1; k < 40; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    if (term.norm() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

M gate(double lambda, double alpha, double beta, double gamma) {
  return expm(C(0, -lambda) * hamiltonian(alpha, beta, gamma));
}

M embed(const M& op, int first, int nSpins) {
  const M left = M::Identity(1 << (first - 1), 1 << (first - 1));
  const int rightSpins = nSpins - first - 1;
  const M right = M::Identity(1 << rightSpins, 1 << rightSpins);
  return kron(kron(left, op), right);
}

V singlet() {
  V v = V::Zero(4);
  v(1) = 1 / std::sqrt(2.0);
  v(2) = -1 / std::sqrt(2.0);
  return v;
}

V triplet0() {
  V v = V::Zero(4);
  v(1) = 1 / std::sqrt(2.0);
  v(2) = 1 / std::sqrt(2.0);
  return v;
}

M logical_basis() {
  const V st[2] = {singlet(), triplet0()};
  M out(16, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out.col(2 * a + b) = kron(st[a], st[b]);
  return out;
}

M su2(double nx, double ny, double nz, double angle) {
  const double n = std::sqrt(nx * nx + ny * ny + nz * nz);
  const M gen = (nx * pauli('x') + ny * pauli('y') + nz * pauli('z')) / n;
  return expm(C(0, -angle / 2) * gen);
}

M two_qubit_form(double Lambda, double Phi) {
  const M x = pauli('x'), i2 = pauli('i');
  const C i(0, 1);
  return std::exp(i * (Lambda / 4)) * expm(i * (Lambda / 4) * kron(x, x)) * expm(i * (Phi / 4) * kron(x, i2)) *
         expm(i * (Phi / 4) * kron(i2, x));
}

double phase_free_fidelity(const M& a, const M& b) {
  const double d = static_cast<double>(a.rows());
  return std::norm((a.adjoint() * b).trace()) / (d * d);
}

double opnorm(const M& a) { return Eigen::JacobiSVD<M>(a).singularValues()(0); }

std::pair<double, V> ground(const M& h) {
  Eigen::SelfAdjointEigenSolver<M> es(h);
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

}  // namespace oracle
