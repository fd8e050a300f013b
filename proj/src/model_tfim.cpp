#include "pepsdisp/model_tfim.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace pepsdisp {

namespace {

Tensor matmul(const Tensor& a, const Tensor& b) { return contract(a, {1}, b, {0}); }

Tensor commutator(const Tensor& a, const Tensor& b) {
  return matmul(a, b) - matmul(b, a);
}

// Splits C into (scalar m, C/m) where m is the first entry of largest
// magnitude in row-major order. Keeps the stored operator O(1)-normalized
// with the scale carried by the term prefactor.
std::pair<Complex, Tensor> factor_leading(const Tensor& c) {
  const double m = c.max_abs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i]) >= m * (1.0 - 1e-12)) {
      const Complex lead = c[i];
      return {lead, (Complex{1.0, 0.0} / lead) * c};
    }
  }
  throw std::invalid_argument("cannot factor an all-zero commutator");
}

}  // namespace

double critical_field(int dimensionality) {
  if (dimensionality == 2) return 3.044;
  if (dimensionality == 3) return 5.29;
  throw std::invalid_argument("dimensionality must be 2 or 3");
}

void TfimParams::validate() const {
  if (dimensionality != 2 && dimensionality != 3)
    throw std::invalid_argument("dimensionality must be 2 or 3");
  if (j < 0.0 || g < 0.0)
    throw std::invalid_argument("couplings must be non-negative");
  if (j == 0.0 && g == 0.0)
    throw std::invalid_argument("j and g cannot both vanish");
}

Phase TfimParams::phase() const {
  validate();
  if (j == 0.0) return Phase::Paramagnetic;
  return g / j < critical_field(dimensionality) ? Phase::Ferromagnetic
                                                : Phase::Paramagnetic;
}

double TfimParams::unit_energy() const {
  return phase() == Phase::Ferromagnetic ? j : g;
}

Tensor pauli_x() {
  Tensor t({2, 2});
  t.at({0, 1}) = 1.0;
  t.at({1, 0}) = 1.0;
  return t;
}

Tensor pauli_y() {
  Tensor t({2, 2});
  t.at({0, 1}) = Complex{0.0, -1.0};
  t.at({1, 0}) = Complex{0.0, 1.0};
  return t;
}

Tensor pauli_z() {
  Tensor t({2, 2});
  t.at({0, 0}) = 1.0;
  t.at({1, 1}) = -1.0;
  return t;
}

Tensor identity2() {
  Tensor t({2, 2});
  t.at({0, 0}) = 1.0;
  t.at({1, 1}) = 1.0;
  return t;
}

Tensor bond_hamiltonian(const TfimParams& p) {
  p.validate();
  const double field_share = p.g / (2.0 * p.dimensionality);
  const Tensor sx = pauli_x(), sz = pauli_z(), id = identity2();
  Tensor h = Complex{-p.j, 0.0} * kron(sz, sz) +
             Complex{-field_share, 0.0} * (kron(sx, id) + kron(id, sx));
  return reshape(h, {2, 2, 2, 2});
}

TrotterGate build_gate(const TfimParams& p, double dtau) {
  if (dtau < 0.0) throw std::invalid_argument("dtau must be non-negative");
  const Tensor h = reshape(bond_hamiltonian(p), {4, 4});
  Eigen::Matrix4cd hm;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      hm(i, j) = h[static_cast<std::size_t>(i * 4 + j)];
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(hm);
  if (eig.info() != Eigen::Success)
    throw DecompositionError("bond Hamiltonian eigendecomposition failed");
  Eigen::Vector4d w = eig.eigenvalues();
  Eigen::Matrix4cd v = eig.eigenvectors();
  Eigen::Matrix4cd gm = v *
                        (-dtau * w.array()).exp().matrix().asDiagonal() *
                        v.adjoint();
  Tensor gate({4, 4});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      gate[static_cast<std::size_t>(i * 4 + j)] = gm(i, j);
  return TrotterGate{reshape(gate, {2, 2, 2, 2}), dtau};
}

std::vector<CommutatorTerm> commutator_terms(const TfimParams& p,
                                             const Momentum& k,
                                             const UnitCell& cell) {
  p.validate();
  if (!commensurate(k, cell))
    throw std::invalid_argument("momentum is incommensurate with the unit cell");

  const Tensor sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), id = identity2();

  // [sx, sy] on the probe site.
  const auto [m_field, op_field] = factor_leading(commutator(sx, sy));
  // [sz⊗sz, sy⊗1]: probe site first in the pair.
  const auto [m_first, op_first_raw] =
      factor_leading(commutator(kron(sz, sz), kron(sy, id)));
  // [sz⊗sz, 1⊗sy]: probe site second in the pair.
  const auto [m_second, op_second_raw] =
      factor_leading(commutator(kron(sz, sz), kron(id, sy)));
  const Tensor op_first = reshape(op_first_raw, {2, 2, 2, 2});
  const Tensor op_second = reshape(op_second_raw, {2, 2, 2, 2});

  std::vector<CommutatorTerm> terms;
  for (const Site& site : cell.sites()) {
    const Complex ph = phase(k, site);
    if (p.g != 0.0)
      terms.push_back(CommutatorTerm{ph * Complex{-p.g, 0.0} * m_field,
                                     {site},
                                     -1,
                                     op_field});
    if (p.j == 0.0) continue;
    for (int dir = 0; dir < cell.ndim(); ++dir) {
      // neighbor in +dir: probe site is the bond base
      terms.push_back(CommutatorTerm{ph * Complex{-p.j, 0.0} * m_first,
                                     {site, cell.neighbor(site, dir, +1)},
                                     dir,
                                     op_first});
      // neighbor in -dir: probe site is the bond end
      const Site base = cell.neighbor(site, dir, -1);
      terms.push_back(CommutatorTerm{ph * Complex{-p.j, 0.0} * m_second,
                                     {base, site},
                                     dir,
                                     op_second});
    }
  }
  return terms;
}

}  // namespace pepsdisp
