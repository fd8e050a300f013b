#pragma once

#include <complex>
#include <cstddef>

// Low-level dense kernels. Each has a serial reference variant and an
// OpenMP variant; the parallel variants keep the per-element accumulation
// order of the serial ones, so results are bit-identical for any thread
// count. bench/ compares their throughput.

namespace pepsdisp::kernels {

using Complex = std::complex<double>;

// C[m x n] = A[m x k] * B[k x n], row-major, C overwritten.
void gemm_serial(const Complex* a, const Complex* b, Complex* c,
                 std::size_t m, std::size_t k, std::size_t n);
void gemm_parallel(const Complex* a, const Complex* b, Complex* c,
                   std::size_t m, std::size_t k, std::size_t n);

// Gather copy dst[i] = src[map(i)] where map is given by precomputed
// source strides per destination axis (row-major destination).
void permute_gather_serial(const Complex* src, Complex* dst,
                           const std::size_t* dst_shape,
                           const std::size_t* src_strides,
                           std::size_t rank, std::size_t total);
void permute_gather_parallel(const Complex* src, Complex* dst,
                             const std::size_t* dst_shape,
                             const std::size_t* src_strides,
                             std::size_t rank, std::size_t total);

}  // namespace pepsdisp::kernels
