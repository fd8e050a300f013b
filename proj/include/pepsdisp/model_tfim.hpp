#pragma once

#include <vector>

#include "pepsdisp/lattice.hpp"
#include "pepsdisp/tensor.hpp"

namespace pepsdisp {

enum class Phase { Ferromagnetic, Paramagnetic };

/// Critical transverse field g_c/J: 3.044 on the square lattice,
/// 5.29 on the simple cubic lattice.
double critical_field(int dimensionality);

struct TfimParams {
  double j = 0.0;  // Ising coupling, >= 0
  double g = 0.0;  // transverse field, >= 0
  int dimensionality = 2;

  void validate() const;
  Phase phase() const;
  // Energy scale results are reported in: J in the ferromagnetic phase,
  // g in the paramagnetic phase.
  double unit_energy() const;
};

Tensor pauli_x();
Tensor pauli_y();
Tensor pauli_z();
Tensor identity2();

/// Nearest-neighbor bond Hamiltonian as a (2,2,2,2) tensor [o1,o2,i1,i2]:
/// -J sz⊗sz - (g/2d)(sx⊗1 + 1⊗sx). The field is split evenly over the 2d
/// bonds touching each site, so the bond terms sum to the full Hamiltonian.
Tensor bond_hamiltonian(const TfimParams& p);

struct TrotterGate {
  Tensor matrix;  // (2,2,2,2), exp(-dtau * h_bond)
  double dtau = 0.0;
};

/// Imaginary-time two-site gate from the exact 4x4 eigendecomposition of
/// the bond Hamiltonian. dtau = 0 yields the identity gate.
TrotterGate build_gate(const TfimParams& p, double dtau);

// One local term of the expansion of [H, O_k] on the unit cell. For 2-site
// terms the operator slot order matches `sites` = {base, base + e_dir} and
// bond_dir >= 0 identifies the bond.
struct CommutatorTerm {
  Complex prefactor;
  std::vector<Site> sites;
  int bond_dir = -1;
  Tensor op;  // (2,2) or (2,2,2,2)
};

/// Exact finite expansion of [H, O_k] with O_k = sum_j e^{i k r_j} sigma^y_j
/// restricted to one unit cell. Pauli commutators are produced by explicit
/// matrix arithmetic; terms with vanishing coupling are omitted.
std::vector<CommutatorTerm> commutator_terms(const TfimParams& p,
                                             const Momentum& k,
                                             const UnitCell& cell);

}  // namespace pepsdisp
