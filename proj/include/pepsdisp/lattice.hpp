#pragma once

#include <array>
#include <string>
#include <vector>

#include "pepsdisp/tensor.hpp"

namespace pepsdisp {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Integer lattice coordinate inside a unit cell; unused trailing axes stay 0.
using Site = std::array<int, 3>;

// Directed nearest-neighbor bond: connects `site` to site + e_dir, with
// periodic wrap-around. dir: 0 = x, 1 = y, 2 = z.
struct Bond {
  Site site{0, 0, 0};
  int dir = 0;
  bool operator==(const Bond&) const = default;
};

/// Periodic L_x × L_y (× L_z) unit cell with deterministic site and bond
/// enumeration (site-major; directions ascending within a site).
class UnitCell {
 public:
  UnitCell() = default;
  explicit UnitCell(std::vector<int> dims);

  int ndim() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int num_sites() const { return num_sites_; }
  const std::vector<Site>& sites() const { return sites_; }
  const std::vector<Bond>& bonds() const { return bonds_; }

  int site_index(const Site& s) const;
  int bond_index(const Bond& b) const;
  Site wrap(Site s) const;
  Site neighbor(const Site& s, int dir, int step = 1) const;

  bool operator==(const UnitCell&) const = default;

 private:
  std::vector<int> dims_;
  int num_sites_ = 0;
  std::vector<Site> sites_;
  std::vector<Bond> bonds_;
};

struct Momentum {
  std::vector<double> components;  // radians per lattice unit, each in [0, 2pi)
  std::string label;               // one of "G","X","M","S","R", or empty

  int ndim() const { return static_cast<int>(components.size()); }
};

/// Canonicalizes components into [0, 2pi) and attaches a label.
Momentum make_momentum(std::vector<double> components, std::string label = "");

bool same_momentum(const Momentum& a, const Momentum& b, double tol = 1e-12);

/// True iff every component equals 2*pi*n_i/L_i for integer n_i.
bool commensurate(const Momentum& k, const UnitCell& cell);

/// All commensurate momenta of the cell, n_i in {0..L_i-1}, site-major order.
std::vector<Momentum> momentum_grid(const UnitCell& cell);

/// High-symmetry momentum path: X,M,S,G,X,S for 2D; G,X,M,R,G for 3D.
std::vector<Momentum> high_symmetry_path(int dimensionality);

/// e^{i k·r}.
Complex phase(const Momentum& k, const Site& r);

/// Smallest cell (each axis padded to at least 2 sites) on which k is
/// commensurate.
UnitCell minimal_cell_for(const Momentum& k);

/// Symmetry-point label for k if it matches one, otherwise "".
std::string label_for(const Momentum& k);

}  // namespace pepsdisp
