#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pepsdisp {

using Complex = std::complex<double>;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a matrix factorization fails to converge; distinct from
// precondition violations on shapes.
struct DecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Kernel selection for contraction/permutation. Auto switches to the
// OpenMP kernels above a fixed work threshold; both paths are bit-identical.
enum class ExecPolicy { Auto, Serial, Parallel };

/// Dense complex tensor with row-major flat storage.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);
  static Tensor scalar(Complex value);

  std::size_t rank() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
  std::size_t size() const { return data_.size(); }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }

  Complex& operator[](std::size_t flat) { return data_[flat]; }
  const Complex& operator[](std::size_t flat) const { return data_[flat]; }

  Complex& at(std::initializer_list<std::size_t> idx);
  const Complex& at(std::initializer_list<std::size_t> idx) const;

  bool all_finite() const;
  double max_abs() const;

  bool operator==(const Tensor&) const = default;

 private:
  std::size_t flat_index(std::initializer_list<std::size_t> idx) const;

  std::vector<std::size_t> shape_;
  std::vector<Complex> data_;
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(Complex s, const Tensor& a);
Tensor conj(const Tensor& a);

/// Reorders axes: entry at new index i equals entry at old index i∘order.
Tensor permute(const Tensor& a, const std::vector<std::size_t>& order,
               ExecPolicy policy = ExecPolicy::Auto);

/// Same data, new shape; total size must match.
Tensor reshape(const Tensor& a, std::vector<std::size_t> new_shape);

/// Tensor-dot of a and b over the paired axes. Free axes of a come first,
/// then free axes of b. Internally permute+reshape reduce the contraction
/// to a single matrix product.
Tensor contract(const Tensor& a, const std::vector<std::size_t>& axes_a,
                const Tensor& b, const std::vector<std::size_t>& axes_b,
                ExecPolicy policy = ExecPolicy::Auto);

struct SvdResult {
  Tensor left;                          // isometry, shape (rows, kept)
  std::vector<double> singular_values;  // descending, >= 0
  Tensor right;                         // isometry, shape (kept, cols)
  double truncation_error = 0.0;        // sqrt(discarded s^2 / total s^2)
};

/// Thin SVD of a rank-2 tensor keeping the min(d_max, min(rows, cols))
/// largest singular values.
SvdResult svd_truncate(const Tensor& m, std::size_t d_max);

/// Thin QR of a rank-2 tensor: returns (Q, R) with Q (rows x r) an isometry
/// and R (r x cols), r = min(rows, cols).
std::pair<Tensor, Tensor> qr(const Tensor& m);

/// Kronecker product of two rank-2 tensors (matrix convention).
Tensor kron(const Tensor& a, const Tensor& b);

}  // namespace pepsdisp
