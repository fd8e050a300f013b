#include "pepsdisp/kernels.hpp"

#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pepsdisp::kernels {

namespace {

// One output row of the product: c_row[j] = sum_k a_row[k] * b[k, j].
// k ascends for every j, so the accumulation order is fixed.
inline void gemm_row(const Complex* a_row, const Complex* b, Complex* c_row,
                     std::size_t k, std::size_t n) {
  std::memset(c_row, 0, n * sizeof(Complex));
  for (std::size_t kk = 0; kk < k; ++kk) {
    const Complex aik = a_row[kk];
    if (aik == Complex{0.0, 0.0}) continue;
    const Complex* b_row = b + kk * n;
    for (std::size_t j = 0; j < n; ++j) c_row[j] += aik * b_row[j];
  }
}

inline std::size_t gather_source_index(std::size_t flat,
                                       const std::size_t* dst_shape,
                                       const std::size_t* src_strides,
                                       std::size_t rank) {
  std::size_t src = 0;
  for (std::size_t ax = rank; ax-- > 0;) {
    const std::size_t d = dst_shape[ax];
    src += (flat % d) * src_strides[ax];
    flat /= d;
  }
  return src;
}

}  // namespace

void gemm_serial(const Complex* a, const Complex* b, Complex* c,
                 std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) gemm_row(a + i * k, b, c + i * n, k, n);
}

void gemm_parallel(const Complex* a, const Complex* b, Complex* c,
                   std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i)
    gemm_row(a + i * k, b, c + i * n, k, n);
}

void permute_gather_serial(const Complex* src, Complex* dst,
                           const std::size_t* dst_shape,
                           const std::size_t* src_strides,
                           std::size_t rank, std::size_t total) {
  for (std::size_t i = 0; i < total; ++i)
    dst[i] = src[gather_source_index(i, dst_shape, src_strides, rank)];
}

void permute_gather_parallel(const Complex* src, Complex* dst,
                             const std::size_t* dst_shape,
                             const std::size_t* src_strides,
                             std::size_t rank, std::size_t total) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i)
    dst[i] = src[gather_source_index(static_cast<std::size_t>(i), dst_shape,
                                     src_strides, rank)];
}

}  // namespace pepsdisp::kernels
