#pragma once

#include <complex>
#include <cstddef>

// Low-level complex-double array kernels. Every operation has a scalar
// reference implementation and, on x86-64, an AVX2+FMA variant; the active
// backend is selected at runtime (cpuid, overridable via the IRSBF_SIMD
// environment variable or kernels::use()). Backends are equivalence-tested
// against each other; results may differ in the last ulps because the AVX2
// paths use FMA and two-way partial sums.

namespace irsbf::kernels {

using Complex = std::complex<double>;

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
// Throws std::invalid_argument if the backend is not supported on this CPU.
void use_backend(Backend b);
// Best supported backend, honoring IRSBF_SIMD=scalar|avx2 if set.
void use_auto_backend();

// sum_i x[i] * y[i]
Complex dot(const Complex* x, const Complex* y, std::size_t n);
// sum_i conj(x[i]) * y[i]
Complex dotc(const Complex* x, const Complex* y, std::size_t n);
// sum_i |x[i]|^2
double norm_sq(const Complex* x, std::size_t n);
// y[i] += a * x[i]
void axpy(Complex a, const Complex* x, Complex* y, std::size_t n);
// y[i] = a * x[i]
void scaled_copy(Complex a, const Complex* x, Complex* y, std::size_t n);
// x[i] *= a
void scale(Complex a, Complex* x, std::size_t n);
// z[i] = x[i] * y[i]
void hadamard(const Complex* x, const Complex* y, Complex* z, std::size_t n);
// y = A x for column-major A (rows x cols, contiguous columns); y is overwritten
void gemv(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y);
// y = A^H x
void gemv_adj(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y);

} // namespace irsbf::kernels
