#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pepsdisp/lattice.hpp"
#include "pepsdisp/model_tfim.hpp"
#include "pepsdisp/tensor.hpp"

namespace pepsdisp {

/// iPEPS on a periodic unit cell in the weighted (Gamma-lambda) form: one
/// tensor per site with legs [phys, x+, x-, y+, y- (, z+, z-)] and one
/// positive weight vector per bond, normalized to max weight 1.
struct IpepsState {
  UnitCell cell;
  int d_max = 1;
  double tau = 0.0;
  std::uint64_t seed = 0;
  std::vector<Tensor> site_tensors;                // by site index
  std::vector<std::vector<double>> bond_weights;   // by bond index

  static std::size_t leg_axis(int dir, bool positive) {
    return 1 + 2 * static_cast<std::size_t>(dir) + (positive ? 0 : 1);
  }
  // Bond carrying the weights of leg `leg_axis(dir, positive)` at `site`.
  Bond leg_bond(const Site& site, int dir, bool positive) const;
  const std::vector<double>& leg_weights(const Site& site, int dir,
                                         bool positive) const;
};

struct EvolutionParams {
  double dtau = 0.01;
  int max_steps = 1000;
  int d_max = 4;
  std::uint64_t seed = 0;
  double floor = 1e-12;  // stop threshold on |<[H,O_k]>|
};

/// Product state (all virtual dimensions 1) with real positive physical
/// components drawn i.i.d. uniform on [0,1); bit-reproducible per seed.
IpepsState init_random(const UnitCell& cell, std::uint64_t seed);

/// One reduced simple-update step on `bond`: absorb environment weights,
/// apply the gate through QR-reduced site tensors, split with a truncated
/// SVD (keeping at most state.d_max weights, dropping those below 1e-12 of
/// the largest), restore the environment and renormalize the site tensors.
void simple_update_step(IpepsState& state, const TrotterGate& gate,
                        const Bond& bond);

/// Applies simple_update_step to every bond, direction-major (all x bonds,
/// then y, then z; site-major within a direction), and advances tau.
void sweep(IpepsState& state, const TrotterGate& gate);

/// <op> on one site from the simple-update environment (sqrt(lambda) on
/// every dangling bond); self-normalizing.
Complex expect_local(const IpepsState& state, const Tensor& op, const Site& site);

/// <op> on the two sites of `bond`; op slots ordered (base, base + e_dir).
Complex expect_local(const IpepsState& state, const Tensor& op, const Bond& bond);

/// Two-site overload taking the sites explicitly; they must be adjacent.
/// op slots follow the given site order. With both orientations adjacent
/// (cells of extent 2) the bond based at s0 is used.
Complex expect_local(const IpepsState& state, const Tensor& op, const Site& s0,
                     const Site& s1);

/// Sum of prefactor * expect_local over the terms; repeated (sites, op)
/// pairs are evaluated once.
Complex evaluate_commutator(const IpepsState& state,
                            std::span<const CommutatorTerm> terms);

/// Simple-update estimate of the energy per site (bond terms summed over
/// the cell).
double energy_per_site(const IpepsState& state, const TfimParams& p);

/// Checkpoint I/O; the JSON round-trip is bit-exact.
void save_state(const IpepsState& state, const std::string& path);
IpepsState load_state(const std::string& path);

}  // namespace pepsdisp
