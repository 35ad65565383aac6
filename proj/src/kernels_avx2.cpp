// AVX2+FMA variants. Two complex doubles per 256-bit lane, interleaved
// [re0, im0, re1, im1]. Compiled with -mavx2 -mfma on x86-64 only; callers
// must gate on runtime CPU support.

#if defined(__x86_64__) || defined(_M_X64)

#include "irsbf/kernels.hpp"

#include <immintrin.h>

namespace irsbf::kernels::detail {

namespace {

// [xr*yr - xi*yi, xr*yi + xi*yr] per complex pair
inline __m256d cmul(__m256d x, __m256d y) {
    const __m256d xre = _mm256_movedup_pd(x);
    const __m256d xim = _mm256_permute_pd(x, 0xF);
    const __m256d ysw = _mm256_permute_pd(y, 0x5);
    return _mm256_fmaddsub_pd(xre, y, _mm256_mul_pd(xim, ysw));
}

// conj(x) * y: [xr*yr + xi*yi, xr*yi - xi*yr]
inline __m256d cmulc(__m256d x, __m256d y) {
    const __m256d xre = _mm256_movedup_pd(x);
    const __m256d xim = _mm256_permute_pd(x, 0xF);
    const __m256d ysw = _mm256_permute_pd(y, 0x5);
    return _mm256_fmsubadd_pd(xre, y, _mm256_mul_pd(xim, ysw));
}

inline Complex reduce_pairs(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

inline const double* dptr(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* dptr(Complex* p) { return reinterpret_cast<double*>(p); }

Complex dot_scalar_tail(const Complex* x, const Complex* y, std::size_t n, bool conj_x) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = conj_x ? -x[i].imag() : x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr - xi * yi;
        im += xr * yi + xi * yr;
    }
    return {re, im};
}

} // namespace

Complex dot_avx2(const Complex* x, const Complex* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(dptr(x + i));
        const __m256d vy = _mm256_loadu_pd(dptr(y + i));
        acc = _mm256_add_pd(acc, cmul(vx, vy));
    }
    return reduce_pairs(acc) + dot_scalar_tail(x + i, y + i, n - i, false);
}

Complex dotc_avx2(const Complex* x, const Complex* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(dptr(x + i));
        const __m256d vy = _mm256_loadu_pd(dptr(y + i));
        acc = _mm256_add_pd(acc, cmulc(vx, vy));
    }
    return reduce_pairs(acc) + dot_scalar_tail(x + i, y + i, n - i, true);
}

double norm_sq_avx2(const Complex* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(dptr(x + i));
        acc = _mm256_fmadd_pd(vx, vx, acc);
    }
    const Complex pair = reduce_pairs(acc);
    double s = pair.real() + pair.imag();
    for (; i < n; ++i)
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void axpy_avx2(Complex a, const Complex* x, Complex* y, std::size_t n) {
    const __m256d are = _mm256_set1_pd(a.real());
    const __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(dptr(x + i));
        const __m256d xsw = _mm256_permute_pd(vx, 0x5);
        const __m256d p = _mm256_fmaddsub_pd(are, vx, _mm256_mul_pd(aim, xsw));
        const __m256d vy = _mm256_loadu_pd(dptr(y + i));
        _mm256_storeu_pd(dptr(y + i), _mm256_add_pd(vy, p));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += Complex{a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr};
    }
}

void scaled_copy_avx2(Complex a, const Complex* x, Complex* y, std::size_t n) {
    const __m256d are = _mm256_set1_pd(a.real());
    const __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(dptr(x + i));
        const __m256d xsw = _mm256_permute_pd(vx, 0x5);
        _mm256_storeu_pd(dptr(y + i), _mm256_fmaddsub_pd(are, vx, _mm256_mul_pd(aim, xsw)));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = Complex{a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr};
    }
}

void scale_avx2(Complex a, Complex* x, std::size_t n) {
    scaled_copy_avx2(a, x, x, n);
}

void hadamard_avx2(const Complex* x, const Complex* y, Complex* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(dptr(x + i));
        const __m256d vy = _mm256_loadu_pd(dptr(y + i));
        _mm256_storeu_pd(dptr(z + i), cmul(vx, vy));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        z[i] = Complex{xr * yr - xi * yi, xr * yi + xi * yr};
    }
}

namespace {

// acc += a * col pair, with (are, aim) broadcast from the scalar a
inline __m256d fma_bcast(__m256d acc, __m256d are, __m256d aim, const double* p) {
    const __m256d v = _mm256_loadu_pd(p);
    const __m256d vs = _mm256_permute_pd(v, 0x5);
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(are, v, _mm256_mul_pd(aim, vs)));
}

} // namespace

void gemv_avx2(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x,
               Complex* y) {
    std::size_t r = 0;
    // row panels of 8 complex held in four accumulators across all columns
    for (; r + 8 <= rows; r += 8) {
        __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
        __m256d acc2 = _mm256_setzero_pd(), acc3 = _mm256_setzero_pd();
        for (std::size_t c = 0; c < cols; ++c) {
            const __m256d are = _mm256_set1_pd(x[c].real());
            const __m256d aim = _mm256_set1_pd(x[c].imag());
            const double* col = dptr(a + c * rows + r);
            acc0 = fma_bcast(acc0, are, aim, col);
            acc1 = fma_bcast(acc1, are, aim, col + 4);
            acc2 = fma_bcast(acc2, are, aim, col + 8);
            acc3 = fma_bcast(acc3, are, aim, col + 12);
        }
        _mm256_storeu_pd(dptr(y + r), acc0);
        _mm256_storeu_pd(dptr(y + r + 2), acc1);
        _mm256_storeu_pd(dptr(y + r + 4), acc2);
        _mm256_storeu_pd(dptr(y + r + 6), acc3);
    }
    for (; r + 2 <= rows; r += 2) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t c = 0; c < cols; ++c) {
            const __m256d are = _mm256_set1_pd(x[c].real());
            const __m256d aim = _mm256_set1_pd(x[c].imag());
            acc = fma_bcast(acc, are, aim, dptr(a + c * rows + r));
        }
        _mm256_storeu_pd(dptr(y + r), acc);
    }
    if (r < rows) {
        double re = 0.0, im = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            const Complex v = a[c * rows + r];
            re += x[c].real() * v.real() - x[c].imag() * v.imag();
            im += x[c].real() * v.imag() + x[c].imag() * v.real();
        }
        y[r] = Complex{re, im};
    }
}

void gemv_adj_avx2(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x,
                   Complex* y) {
    for (std::size_t c = 0; c < cols; ++c)
        y[c] = dotc_avx2(a + c * rows, x, rows);
}

} // namespace irsbf::kernels::detail

#endif // x86-64
