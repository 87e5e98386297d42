#pragma once

#include <cstddef>
#include <cstdint>

namespace structreg::kernels {

// The inner loops of the library live here in two variants with identical
// signatures and identical per-element arithmetic order: `serial` is the
// reference, `parallel` distributes independent output elements over OpenMP
// threads. Because every output element is produced by the same serial
// accumulation in both variants, results are bit-identical regardless of
// thread count; tests/test_kernels.cpp holds that property, and
// bench/bench_kernels.cpp compares their throughput.
//
// The dispatch functions (kernels::matmul_nn etc.) pick the parallel variant
// when it is enabled for the calling thread and the problem is large enough
// to amortize the fork/join.

/// Per-thread switch; worker pools running many independent runs turn this
/// off to avoid oversubscription.
bool parallel_enabled() noexcept;
void set_parallel_enabled(bool on) noexcept;

struct ParallelGuard {
    explicit ParallelGuard(bool on) : prev_(parallel_enabled()) { set_parallel_enabled(on); }
    ~ParallelGuard() { set_parallel_enabled(prev_); }
    ParallelGuard(const ParallelGuard&) = delete;
    ParallelGuard& operator=(const ParallelGuard&) = delete;

private:
    bool prev_;
};

namespace serial {

// out(m×n) = a(m×k) · b(k×n); accumulates into out when acc is set
void matmul_nn(const double* a, const double* b, double* out,
               std::size_t m, std::size_t k, std::size_t n, bool acc = false);
// out(m×n) = a(m×t) · b(n×t)ᵀ
void matmul_nt(const double* a, const double* b, double* out,
               std::size_t m, std::size_t t, std::size_t n, bool acc = false);
// out(k×n) = a(m×k)ᵀ · b(m×n)
void matmul_tn(const double* a, const double* b, double* out,
               std::size_t m, std::size_t k, std::size_t n, bool acc = false);

void add(const double* a, const double* b, double* out, std::size_t n);
void sub(const double* a, const double* b, double* out, std::size_t n);
void mul(const double* a, const double* b, double* out, std::size_t n);
void relu(const double* a, double* out, std::size_t n);
void exp(const double* a, double* out, std::size_t n);
void log(const double* a, double* out, std::size_t n);
void clamp(const double* a, double* out, std::size_t n, double lo, double hi);

// out += a ⊙ b (the shape gradient accumulation takes everywhere)
void mul_add(const double* a, const double* b, double* out, std::size_t n);
void add_inplace(const double* a, double* out, std::size_t n);
void scale_add(double s, const double* a, double* out, std::size_t n);

/// Row-stable softmax: max subtraction, rows sum to 1.
void softmax_rows(const double* z, double* out, std::size_t m, std::size_t c);
/// dz += y ⊙ (g − <g, y>_row) given y = softmax(z) and upstream g.
void softmax_rows_backward(const double* y, const double* g, double* dz,
                           std::size_t m, std::size_t c);

/// out[j] += Σ_i a[i][j] (bias gradients)
void colsum_add(const double* a, double* out, std::size_t m, std::size_t n);

/// out[i] = ‖x[i] − x[perm[i]]‖₂ over rows of x (m×d)
void pair_distances(const double* x, const std::uint32_t* perm, double* out,
                    std::size_t m, std::size_t d);
/// out[i] = λ[i]·x[i] + (1−λ[i])·x[perm[i]] rowwise
void mix_rows(const double* x, const std::uint32_t* perm, const double* lam,
              double* out, std::size_t m, std::size_t d);

} // namespace serial

namespace parallel {

void matmul_nn(const double* a, const double* b, double* out,
               std::size_t m, std::size_t k, std::size_t n, bool acc = false);
void matmul_nt(const double* a, const double* b, double* out,
               std::size_t m, std::size_t t, std::size_t n, bool acc = false);
void matmul_tn(const double* a, const double* b, double* out,
               std::size_t m, std::size_t k, std::size_t n, bool acc = false);

void add(const double* a, const double* b, double* out, std::size_t n);
void sub(const double* a, const double* b, double* out, std::size_t n);
void mul(const double* a, const double* b, double* out, std::size_t n);
void relu(const double* a, double* out, std::size_t n);
void exp(const double* a, double* out, std::size_t n);
void log(const double* a, double* out, std::size_t n);
void clamp(const double* a, double* out, std::size_t n, double lo, double hi);

void mul_add(const double* a, const double* b, double* out, std::size_t n);
void add_inplace(const double* a, double* out, std::size_t n);
void scale_add(double s, const double* a, double* out, std::size_t n);

void softmax_rows(const double* z, double* out, std::size_t m, std::size_t c);
void softmax_rows_backward(const double* y, const double* g, double* dz,
                           std::size_t m, std::size_t c);

void colsum_add(const double* a, double* out, std::size_t m, std::size_t n);

void pair_distances(const double* x, const std::uint32_t* perm, double* out,
                    std::size_t m, std::size_t d);
void mix_rows(const double* x, const std::uint32_t* perm, const double* lam,
              double* out, std::size_t m, std::size_t d);

} // namespace parallel

// Dispatchers. Work thresholds below which the serial variant is used even
// when parallelism is enabled.
inline constexpr std::size_t kMinParallelFlops = 32768;
inline constexpr std::size_t kMinParallelElems = 16384;

void matmul_nn(const double* a, const double* b, double* out,
               std::size_t m, std::size_t k, std::size_t n, bool acc = false);
void matmul_nt(const double* a, const double* b, double* out,
               std::size_t m, std::size_t t, std::size_t n, bool acc = false);
void matmul_tn(const double* a, const double* b, double* out,
               std::size_t m, std::size_t k, std::size_t n, bool acc = false);
void add(const double* a, const double* b, double* out, std::size_t n);
void sub(const double* a, const double* b, double* out, std::size_t n);
void mul(const double* a, const double* b, double* out, std::size_t n);
void relu(const double* a, double* out, std::size_t n);
void exp(const double* a, double* out, std::size_t n);
void log(const double* a, double* out, std::size_t n);
void clamp(const double* a, double* out, std::size_t n, double lo, double hi);
void mul_add(const double* a, const double* b, double* out, std::size_t n);
void add_inplace(const double* a, double* out, std::size_t n);
void scale_add(double s, const double* a, double* out, std::size_t n);
void softmax_rows(const double* z, double* out, std::size_t m, std::size_t c);
void softmax_rows_backward(const double* y, const double* g, double* dz,
                           std::size_t m, std::size_t c);
void colsum_add(const double* a, double* out, std::size_t m, std::size_t n);
void pair_distances(const double* x, const std::uint32_t* perm, double* out,
                    std::size_t m, std::size_t d);
void mix_rows(const double* x, const std::uint32_t* perm, const double* lam,
              double* out, std::size_t m, std::size_t d);

} // namespace structreg::kernels
