#pragma once

// Data-parallel inner loops shared by the covariance builders, the dense
// factorizations and the monitoring statistics. Every kernel has a scalar
// reference implementation; wider variants are selected at runtime from the
// instruction sets the CPU reports and are tested for equivalence against it.

#include <cstddef>
#include <string_view>

namespace bladewatch::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True when the kernels for `isa` were compiled in and the CPU supports them.
bool isa_supported(Isa isa);

/// Widest supported instruction set.
Isa best_isa();

/// Instruction set used by `active()`. Defaults to `best_isa()`, or to the
/// value of the BLADEWATCH_ISA environment variable (`scalar`, `avx2`).
Isa active_isa();

/// Throws ValidationError when `isa` is unsupported.
void set_active_isa(Isa isa);

/// Squared-exponential plus linear covariance of one point against many.
///
/// out[q] = signal_var * exp(neg_half_inv_len2 * sum_k (columns[k][q] - point[k])^2)
///        + linear_var * sum_k columns[k][q] * point[k]
///
/// `columns` holds the `count` points in structure-of-arrays layout.
struct CovRowParams {
  const double* const* columns;
  std::size_t dim;
  const double* point;
  std::size_t count;
  double signal_var;
  double neg_half_inv_len2;
  double linear_var;
};

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// acc[i] += x[i]^2
  void (*add_squares)(const double* x, double* acc, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  /// sum_i (x[i] - center)^2
  double (*sum_sq_dev)(const double* x, std::size_t n, double center);
  /// out[i] = exp(x[i]); arguments below -708 flush to zero.
  void (*exp)(const double* x, double* out, std::size_t n);
  void (*cov_row)(const CovRowParams& p, double* out);
  /// Row-major C[m x n] += alpha * A[m x k] * B[k x n].
  void (*gemm_acc)(std::size_t m, std::size_t n, std::size_t k, double alpha, const double* a,
                   std::size_t lda, const double* b, std::size_t ldb, double* c,
                   std::size_t ldc);
};

/// Throws ValidationError when `isa` is unsupported.
const KernelTable& table(Isa isa);

const KernelTable& active();

/// Switches the active instruction set for the lifetime of the guard.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

namespace detail {
const KernelTable& scalar_table();
/// nullptr when not built for x86-64.
const KernelTable* avx2_table();
}  // namespace detail

}  // namespace bladewatch::simd
