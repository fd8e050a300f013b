#include "pepsdisp/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "pepsdisp/kernels.hpp"

namespace pepsdisp {

namespace {

using MatC = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr std::size_t kParallelWork = std::size_t{1} << 18;

std::size_t checked_total(const std::vector<std::size_t>& shape) {
  std::size_t total = 1;
  for (std::size_t d : shape) {
    if (d == 0) throw ShapeError("tensor dimensions must be positive");
    total *= d;
  }
  return total;
}

std::vector<std::size_t> row_major_strides(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t ax = shape.size(); ax-- > 1;)
    strides[ax - 1] = strides[ax] * shape[ax];
  return strides;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  data_.assign(checked_total(shape_), Complex{0.0, 0.0});
}

Tensor Tensor::scalar(Complex value) {
  Tensor t{std::vector<std::size_t>{}};
  t.data_[0] = value;
  return t;
}

std::size_t Tensor::flat_index(std::initializer_list<std::size_t> idx) const {
  if (idx.size() != shape_.size())
    throw ShapeError("index rank does not match tensor rank");
  std::size_t flat = 0;
  std::size_t ax = 0;
  for (std::size_t i : idx) {
    if (i >= shape_[ax]) throw ShapeError("index out of range");
    flat = flat * shape_[ax] + i;
    ++ax;
  }
  return flat;
}

Complex& Tensor::at(std::initializer_list<std::size_t> idx) {
  return data_[flat_index(idx)];
}

const Complex& Tensor::at(std::initializer_list<std::size_t> idx) const {
  return data_[flat_index(idx)];
}

bool Tensor::all_finite() const {
  for (const Complex& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double Tensor::max_abs() const {
  double m = 0.0;
  for (const Complex& v : data_) m = std::max(m, std::abs(v));
  return m;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw ShapeError("tensor shapes differ in addition");
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw ShapeError("tensor shapes differ in subtraction");
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Tensor operator*(Complex s, const Tensor& a) {
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= s;
  return out;
}

Tensor conj(const Tensor& a) {
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(out[i]);
  return out;
}

Tensor permute(const Tensor& a, const std::vector<std::size_t>& order,
               ExecPolicy policy) {
  const std::size_t rank = a.rank();
  if (order.size() != rank)
    throw ShapeError("permutation length does not match tensor rank");
  std::vector<bool> seen(rank, false);
  for (std::size_t ax : order) {
    if (ax >= rank || seen[ax]) throw ShapeError("invalid axis permutation");
    seen[ax] = true;
  }
  std::vector<std::size_t> out_shape(rank);
  for (std::size_t i = 0; i < rank; ++i) out_shape[i] = a.shape()[order[i]];
  Tensor out(out_shape);
  if (rank == 0) {
    out[0] = a[0];
    return out;
  }
  const std::vector<std::size_t> src_strides = row_major_strides(a.shape());
  std::vector<std::size_t> gather_strides(rank);
  for (std::size_t i = 0; i < rank; ++i) gather_strides[i] = src_strides[order[i]];
  const bool parallel =
      policy == ExecPolicy::Parallel ||
      (policy == ExecPolicy::Auto && out.size() >= kParallelWork);
  if (parallel)
    kernels::permute_gather_parallel(a.data(), out.data(), out_shape.data(),
                                     gather_strides.data(), rank, out.size());
  else
    kernels::permute_gather_serial(a.data(), out.data(), out_shape.data(),
                                   gather_strides.data(), rank, out.size());
  return out;
}

Tensor reshape(const Tensor& a, std::vector<std::size_t> new_shape) {
  if (checked_total(new_shape) != a.size())
    throw ShapeError("reshape changes total element count");
  Tensor out(std::move(new_shape));
  std::copy(a.data(), a.data() + a.size(), out.data());
  return out;
}

Tensor contract(const Tensor& a, const std::vector<std::size_t>& axes_a,
                const Tensor& b, const std::vector<std::size_t>& axes_b,
                ExecPolicy policy) {
  if (axes_a.size() != axes_b.size())
    throw ShapeError("contract: axis lists have different lengths");
  auto check_axes = [](const Tensor& t, const std::vector<std::size_t>& axes,
                       const char* name) {
    std::vector<bool> seen(t.rank(), false);
    for (std::size_t ax : axes) {
      if (ax >= t.rank())
        throw ShapeError(std::string("contract: axis ") + std::to_string(ax) +
                         " out of range for tensor " + name);
      if (seen[ax])
        throw ShapeError(std::string("contract: duplicate axis ") +
                         std::to_string(ax) + " for tensor " + name);
      seen[ax] = true;
    }
  };
  check_axes(a, axes_a, "A");
  check_axes(b, axes_b, "B");
  for (std::size_t i = 0; i < axes_a.size(); ++i) {
    if (a.shape()[axes_a[i]] != b.shape()[axes_b[i]])
      throw ShapeError("contract: dimension mismatch between axis " +
                       std::to_string(axes_a[i]) + " of A (dim " +
                       std::to_string(a.shape()[axes_a[i]]) + ") and axis " +
                       std::to_string(axes_b[i]) + " of B (dim " +
                       std::to_string(b.shape()[axes_b[i]]) + ")");
  }

  std::vector<std::size_t> free_a, free_b;
  {
    std::vector<bool> used_a(a.rank(), false), used_b(b.rank(), false);
    for (std::size_t ax : axes_a) used_a[ax] = true;
    for (std::size_t ax : axes_b) used_b[ax] = true;
    for (std::size_t ax = 0; ax < a.rank(); ++ax)
      if (!used_a[ax]) free_a.push_back(ax);
    for (std::size_t ax = 0; ax < b.rank(); ++ax)
      if (!used_b[ax]) free_b.push_back(ax);
  }

  std::vector<std::size_t> perm_a = free_a;
  perm_a.insert(perm_a.end(), axes_a.begin(), axes_a.end());
  std::vector<std::size_t> perm_b = axes_b;
  perm_b.insert(perm_b.end(), free_b.begin(), free_b.end());

  const Tensor ap = permute(a, perm_a, policy);
  const Tensor bp = permute(b, perm_b, policy);

  std::size_t m = 1, k = 1, n = 1;
  for (std::size_t ax : free_a) m *= a.shape()[ax];
  for (std::size_t ax : axes_a) k *= a.shape()[ax];
  for (std::size_t ax : free_b) n *= b.shape()[ax];

  std::vector<std::size_t> out_shape;
  for (std::size_t ax : free_a) out_shape.push_back(a.shape()[ax]);
  for (std::size_t ax : free_b) out_shape.push_back(b.shape()[ax]);
  Tensor out(out_shape);

  const bool parallel =
      policy == ExecPolicy::Parallel ||
      (policy == ExecPolicy::Auto && m * k * n >= kParallelWork);
  if (parallel)
    kernels::gemm_parallel(ap.data(), bp.data(), out.data(), m, k, n);
  else
    kernels::gemm_serial(ap.data(), bp.data(), out.data(), m, k, n);

  if (!out.all_finite())
    throw DecompositionError("contract produced non-finite entries");
  return out;
}

SvdResult svd_truncate(const Tensor& m, std::size_t d_max) {
  if (m.rank() != 2) throw ShapeError("svd_truncate requires a rank-2 tensor");
  if (d_max == 0) throw ShapeError("svd_truncate requires d_max >= 1");
  if (!m.all_finite())
    throw DecompositionError("svd_truncate: input has non-finite entries");

  const std::size_t rows = m.shape()[0], cols = m.shape()[1];
  Eigen::Map<const MatC> mm(m.data(), static_cast<Eigen::Index>(rows),
                            static_cast<Eigen::Index>(cols));

  Eigen::VectorXd sv;
  MatC u, v;
  if (std::min(rows, cols) <= 96) {
    Eigen::JacobiSVD<MatC> svd(mm, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
      throw DecompositionError("singular value decomposition did not converge");
    sv = svd.singularValues();
    u = svd.matrixU();
    v = svd.matrixV();
  } else {
    Eigen::BDCSVD<MatC> svd(mm, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
      throw DecompositionError("singular value decomposition did not converge");
    sv = svd.singularValues();
    u = svd.matrixU();
    v = svd.matrixV();
  }

  const std::size_t full = static_cast<std::size_t>(sv.size());
  const std::size_t keep = std::min(d_max, full);

  double total = 0.0, discarded = 0.0;
  for (std::size_t i = 0; i < full; ++i) {
    const double s2 = sv[static_cast<Eigen::Index>(i)] * sv[static_cast<Eigen::Index>(i)];
    total += s2;
    if (i >= keep) discarded += s2;
  }

  SvdResult out;
  out.truncation_error = total > 0.0 ? std::sqrt(discarded / total) : 0.0;
  out.singular_values.resize(keep);
  for (std::size_t i = 0; i < keep; ++i)
    out.singular_values[i] = sv[static_cast<Eigen::Index>(i)];

  out.left = Tensor({rows, keep});
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < keep; ++j)
      out.left[i * keep + j] = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));

  out.right = Tensor({keep, cols});
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out.right[i * cols + j] =
          std::conj(v(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)));

  return out;
}

std::pair<Tensor, Tensor> qr(const Tensor& m) {
  if (m.rank() != 2) throw ShapeError("qr requires a rank-2 tensor");
  const std::size_t rows = m.shape()[0], cols = m.shape()[1];
  const std::size_t r = std::min(rows, cols);
  Eigen::Map<const MatC> mm(m.data(), static_cast<Eigen::Index>(rows),
                            static_cast<Eigen::Index>(cols));
  Eigen::HouseholderQR<MatC> decomp(mm);
  MatC thin = MatC::Identity(static_cast<Eigen::Index>(rows),
                             static_cast<Eigen::Index>(r));
  thin = decomp.householderQ() * thin;
  MatC rr = decomp.matrixQR()
                .topRows(static_cast<Eigen::Index>(r))
                .template triangularView<Eigen::Upper>();

  Tensor q({rows, r}), rmat({r, cols});
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j)
      q[i * r + j] = thin(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      rmat[i * cols + j] = rr(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return {std::move(q), std::move(rmat)};
}

Tensor kron(const Tensor& a, const Tensor& b) {
  if (a.rank() != 2 || b.rank() != 2)
    throw ShapeError("kron requires rank-2 tensors");
  const std::size_t ra = a.shape()[0], ca = a.shape()[1];
  const std::size_t rb = b.shape()[0], cb = b.shape()[1];
  Tensor out({ra * rb, ca * cb});
  for (std::size_t i1 = 0; i1 < ra; ++i1)
    for (std::size_t j1 = 0; j1 < ca; ++j1)
      for (std::size_t i2 = 0; i2 < rb; ++i2)
        for (std::size_t j2 = 0; j2 < cb; ++j2)
          out[(i1 * rb + i2) * ca * cb + (j1 * cb + j2)] =
              a[i1 * ca + j1] * b[i2 * cb + j2];
  return out;
}

}  // namespace pepsdisp
