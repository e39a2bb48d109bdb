#include "anisogate/chain.hpp"

#include <bit>
#include <cmath>

#include "anisogate/error.hpp"

namespace anisogate {

namespace {

void check_spins(int n) {
  require(n >= ChainState::kMinSpins && n <= ChainState::kMaxSpins, ErrorKind::InvalidArgument,
          "chain length must be between 4 and 20 spins");
  require(n % 2 == 0, ErrorKind::InvalidArgument, "chain length must be even");
}

void check_pair(SpinPair pair, int n) {
  require(pair.first >= 1 && pair.second() <= n, ErrorKind::InvalidArgument,
          "spin pair " + pair.label() + " is outside the chain");
}

}  // namespace

ChainState::ChainState(int nSpins) : nSpins_(nSpins) {
  check_spins(nSpins);
  amps_ = VecX::Zero(Eigen::Index{1} << nSpins);
  amps_(0) = 1.0;
}

ChainState::ChainState(int nSpins, VecX amplitudes) : nSpins_(nSpins), amps_(std::move(amplitudes)) {
  check_spins(nSpins);
  require(amps_.size() == (Eigen::Index{1} << nSpins), ErrorKind::InvalidArgument, "amplitude vector has wrong length");
  require(std::abs(amps_.norm() - 1.0) < 1e-12, ErrorKind::InvalidArgument, "state is not normalized");
}

std::size_t configuration_index(const std::string& spins) {
  std::size_t idx = 0;
  for (char c : spins) {
    require(c == 'u' || c == 'd', ErrorKind::InvalidArgument, "configuration uses letters other than u/d");
    idx = (idx << 1) | (c == 'd' ? 1u : 0u);
  }
  return idx;
}

ChainState ChainState::configuration(const std::string& spins) {
  const int n = static_cast<int>(spins.size());
  check_spins(n);
  VecX a = VecX::Zero(Eigen::Index{1} << n);
  a(static_cast<Eigen::Index>(configuration_index(spins))) = 1.0;
  return ChainState(n, std::move(a));
}

ChainState ChainState::from_pairs(std::span<const Vec4> pairStates) {
  require(!pairStates.empty(), ErrorKind::InvalidArgument, "no pair states");
  VecX a = VecX::Ones(1);
  for (const Vec4& p : pairStates) {
    VecX next(a.size() * 4);
    for (Eigen::Index i = 0; i < a.size(); ++i) next.segment(4 * i, 4) = a(i) * p;
    a = std::move(next);
  }
  a.normalize();
  return ChainState(2 * static_cast<int>(pairStates.size()), std::move(a));
}

void apply_gate(ChainState& state, SpinPair pair, const Mat4& gate) {
  const int n = state.spins();
  check_pair(pair, n);
  const std::size_t hiBit = std::size_t{1} << (n - pair.first);
  const std::size_t loBit = std::size_t{1} << (n - pair.second());
  VecX& a = state.amplitudes();
  const std::size_t dim = static_cast<std::size_t>(a.size());
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & (hiBit | loBit)) continue;
    const std::size_t idx[4] = {base, base | loBit, base | hiBit, base | hiBit | loBit};
    Vec4 v;
    for (int k = 0; k < 4; ++k) v(k) = a(static_cast<Eigen::Index>(idx[k]));
    const Vec4 w = gate * v;
    for (int k = 0; k < 4; ++k) a(static_cast<Eigen::Index>(idx[k])) = w(k);
  }
}

ChainState apply_gate(const ChainState& state, SpinPair pair, const TwoSpinGate& gate) {
  require(unitarity_defect(gate.matrix) < tol::kUnitary, ErrorKind::InvalidArgument, "gate is not unitary");
  ChainState out = state;
  apply_gate(out, pair, gate.matrix);
  return out;
}

ChainState run_program(ChainState state, std::span<const Pulse> program) {
  for (const Pulse& p : program) check_pair(p.pair, state.spins());
  for (const Pulse& p : program) apply_gate(state, p.pair, gate_unitary(p.params).matrix);
  return state;
}

ChainState run_program(ChainState state, const PulseSequence& program) {
  return run_program(std::move(state), std::span<const Pulse>(program.pulses()));
}

std::vector<std::pair<SpinPair, Mat4>> inverse_program(std::span<const Pulse> program) {
  std::vector<std::pair<SpinPair, Mat4>> out;
  for (auto it = program.rbegin(); it != program.rend(); ++it)
    out.emplace_back(it->pair, gate_unitary(it->params).matrix.adjoint());
  return out;
}

Vec4 ground_state(const GateParams& params) {
  params.validate();
  const Vec3 n = params.rotation_direction().normalized();
  // Eigenvector of n.sigma with eigenvalue -1 in (T0, S) coordinates.
  Complex t0(-n.x(), n.y());
  Complex s(1.0 + n.z(), 0.0);
  if (std::abs(s) < 1e-300) {
    t0 = 1.0;
    s = 0.0;
  }
  const double norm = std::sqrt(std::norm(t0) + std::norm(s));
  return (t0 / norm) * basis::triplet0() + (s / norm) * basis::singlet();
}

double ground_energy(const GateParams& params) { return -0.5 - 0.5 * params.angle_per_lambda(); }

ChainState init_ground(int nSpins, std::span<const GateParams> pairParams) {
  check_spins(nSpins);
  require(static_cast<int>(pairParams.size()) == nSpins / 2, ErrorKind::InvalidArgument,
          "need one parameter set per encoded pair");
  std::vector<Vec4> states;
  for (const auto& p : pairParams) states.push_back(ground_state(p));
  return ChainState::from_pairs(states);
}

ChainState init_ground(int nSpins, const GateParams& params) {
  check_spins(nSpins);
  const std::vector<GateParams> all(static_cast<std::size_t>(nSpins / 2), params);
  return init_ground(nSpins, all);
}

Rotation preparation_rotation(const GateParams& params) {
  // Bloch vector of the ground state is -n; |S> sits at -z. Rotate n onto z.
  const Vec3 n = params.rotation_direction().normalized();
  const Vec3 z = Vec3::UnitZ();
  const Vec3 c = n.cross(z);
  const double angle = std::atan2(c.norm(), n.dot(z));
  if (c.norm() < 1e-15) return angle < 1.0 ? Rotation::identity() : Rotation::about_x(kPi);
  return Rotation::about(c.normalized(), angle);
}

ReadoutResult readout(const ChainState& state, SpinPair pair, const GateParams& measureParams) {
  const int n = state.spins();
  check_pair(pair, n);
  const Vec4 g = ground_state(measureParams);
  const std::size_t hiBit = std::size_t{1} << (n - pair.first);
  const std::size_t loBit = std::size_t{1} << (n - pair.second());
  const VecX& a = state.amplitudes();
  double p = 0.0;
  for (std::size_t base = 0; base < static_cast<std::size_t>(a.size()); ++base) {
    if (base & (hiBit | loBit)) continue;
    const std::size_t idx[4] = {base, base | loBit, base | hiBit, base | hiBit | loBit};
    Complex amp = 0.0;
    for (int k = 0; k < 4; ++k) amp += std::conj(g(k)) * a(static_cast<Eigen::Index>(idx[k]));
    p += std::norm(amp);
  }
  return {std::clamp(p, 0.0, 1.0), std::atan2(measureParams.beta, 1.0 + measureParams.gamma)};
}

double sz_block_violation(std::span<const Pulse> program, int nSpins) {
  check_spins(nSpins);
  const std::size_t dim = std::size_t{1} << nSpins;
  double worst = 0.0;
  for (std::size_t col = 0; col < dim; ++col) {
    VecX e = VecX::Zero(static_cast<Eigen::Index>(dim));
    e(static_cast<Eigen::Index>(col)) = 1.0;
    const ChainState out = run_program(ChainState(nSpins, std::move(e)), program);
    for (std::size_t row = 0; row < dim; ++row) {
      if (std::popcount(row) == std::popcount(col)) continue;
      worst = std::max(worst, std::abs(out.amplitudes()(static_cast<Eigen::Index>(row))));
    }
  }
  return worst;
}

}  // namespace anisogate
