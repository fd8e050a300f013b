#include "pepsdisp/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace pepsdisp {

namespace {

constexpr double kPi = kTwoPi / 2.0;
constexpr int kMaxMinimalCell = 64;

double wrap_two_pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (kTwoPi - y < 1e-12) y = 0.0;  // -pi and pi name the same momentum
  return y;
}

}  // namespace

UnitCell::UnitCell(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.size() != 2 && dims_.size() != 3)
    throw std::invalid_argument("unit cell must be 2- or 3-dimensional");
  num_sites_ = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("unit cell dimensions must be >= 1");
    num_sites_ *= d;
  }
  const int lx = dims_[0], ly = dims_[1], lz = ndim() == 3 ? dims_[2] : 1;
  for (int z = 0; z < lz; ++z)
    for (int y = 0; y < ly; ++y)
      for (int x = 0; x < lx; ++x) sites_.push_back(Site{x, y, z});
  for (const Site& s : sites_)
    for (int dir = 0; dir < ndim(); ++dir) bonds_.push_back(Bond{s, dir});
}

int UnitCell::site_index(const Site& s) const {
  const Site w = wrap(s);
  int idx = w[0];
  int stride = dims_[0];
  for (int ax = 1; ax < ndim(); ++ax) {
    idx += w[ax] * stride;
    stride *= dims_[ax];
  }
  return idx;
}

int UnitCell::bond_index(const Bond& b) const {
  if (b.dir < 0 || b.dir >= ndim())
    throw std::invalid_argument("bond direction out of range");
  return site_index(b.site) * ndim() + b.dir;
}

Site UnitCell::wrap(Site s) const {
  for (int ax = 0; ax < ndim(); ++ax) {
    int v = s[ax] % dims_[ax];
    if (v < 0) v += dims_[ax];
    s[ax] = v;
  }
  for (int ax = ndim(); ax < 3; ++ax) s[ax] = 0;
  return s;
}

Site UnitCell::neighbor(const Site& s, int dir, int step) const {
  if (dir < 0 || dir >= ndim())
    throw std::invalid_argument("neighbor direction out of range");
  Site n = s;
  n[dir] += step;
  return wrap(n);
}

Momentum make_momentum(std::vector<double> components, std::string label) {
  if (components.size() != 2 && components.size() != 3)
    throw std::invalid_argument("momentum must have 2 or 3 components");
  for (double& c : components) c = wrap_two_pi(c);
  return Momentum{std::move(components), std::move(label)};
}

bool same_momentum(const Momentum& a, const Momentum& b, double tol) {
  if (a.ndim() != b.ndim()) return false;
  for (int i = 0; i < a.ndim(); ++i) {
    double d = std::fabs(a.components[i] - b.components[i]);
    d = std::min(d, kTwoPi - d);
    if (d > tol) return false;
  }
  return true;
}

bool commensurate(const Momentum& k, const UnitCell& cell) {
  if (k.ndim() != cell.ndim()) return false;
  for (int i = 0; i < k.ndim(); ++i) {
    const double n = k.components[i] * cell.dims()[i] / kTwoPi;
    if (std::fabs(n - std::round(n)) > 1e-9) return false;
  }
  return true;
}

std::vector<Momentum> momentum_grid(const UnitCell& cell) {
  std::vector<Momentum> out;
  out.reserve(cell.num_sites());
  for (const Site& s : cell.sites()) {
    std::vector<double> comps(cell.ndim());
    for (int i = 0; i < cell.ndim(); ++i)
      comps[i] = kTwoPi * s[static_cast<std::size_t>(i)] / cell.dims()[i];
    Momentum k = make_momentum(std::move(comps));
    k.label = label_for(k);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<Momentum> high_symmetry_path(int dimensionality) {
  if (dimensionality == 2) {
    const Momentum g = make_momentum({0.0, 0.0}, "G");
    const Momentum x = make_momentum({kPi, 0.0}, "X");
    const Momentum m = make_momentum({kPi, kPi}, "M");
    const Momentum s = make_momentum({kPi / 2.0, kPi / 2.0}, "S");
    return {x, m, s, g, x, s};
  }
  if (dimensionality == 3) {
    const Momentum g = make_momentum({0.0, 0.0, 0.0}, "G");
    const Momentum x = make_momentum({kPi, 0.0, 0.0}, "X");
    const Momentum m = make_momentum({kPi, kPi, 0.0}, "M");
    const Momentum r = make_momentum({kPi, kPi, kPi}, "R");
    return {g, x, m, r, g};
  }
  throw std::invalid_argument("high_symmetry_path supports dimensionality 2 or 3");
}

Complex phase(const Momentum& k, const Site& r) {
  double dot = 0.0;
  for (int i = 0; i < k.ndim(); ++i) dot += k.components[i] * r[static_cast<std::size_t>(i)];
  return std::polar(1.0, dot);
}

UnitCell minimal_cell_for(const Momentum& k) {
  std::vector<int> dims(k.components.size());
  for (std::size_t i = 0; i < k.components.size(); ++i) {
    int found = 0;
    for (int l = 1; l <= kMaxMinimalCell; ++l) {
      const double n = k.components[i] * l / kTwoPi;
      if (std::fabs(n - std::round(n)) < 1e-9) {
        found = l;
        break;
      }
    }
    if (found == 0)
      throw std::invalid_argument(
          "momentum component is not a rational multiple of 2*pi (denominator <= 64)");
    dims[i] = std::max(found, 2);  // checkerboard gates need >= 2 sites per axis
  }
  return UnitCell(dims);
}

std::string label_for(const Momentum& k) {
  const auto matches = [&](std::initializer_list<double> ref) {
    if (k.ndim() != static_cast<int>(ref.size())) return false;
    std::size_t i = 0;
    for (double r : ref) {
      double d = std::fabs(k.components[i++] - wrap_two_pi(r));
      d = std::min(d, kTwoPi - d);
      if (d > 1e-9) return false;
    }
    return true;
  };
  if (k.ndim() == 2) {
    if (matches({0.0, 0.0})) return "G";
    if (matches({kPi, 0.0}) || matches({0.0, kPi})) return "X";
    if (matches({kPi, kPi})) return "M";
    if (matches({kPi / 2, kPi / 2})) return "S";
  } else if (k.ndim() == 3) {
    if (matches({0.0, 0.0, 0.0})) return "G";
    if (matches({kPi, 0.0, 0.0}) || matches({0.0, kPi, 0.0}) || matches({0.0, 0.0, kPi}))
      return "X";
    if (matches({kPi, kPi, 0.0}) || matches({kPi, 0.0, kPi}) || matches({0.0, kPi, kPi}))
      return "M";
    if (matches({kPi, kPi, kPi})) return "R";
  }
  return "";
}

}  // namespace pepsdisp
