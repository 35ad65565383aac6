#include "irsbf/kernels.hpp"

namespace irsbf::kernels::detail {

Complex dot_scalar(const Complex* x, const Complex* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr - xi * yi;
        im += xr * yi + xi * yr;
    }
    return {re, im};
}

Complex dotc_scalar(const Complex* x, const Complex* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

double norm_sq_scalar(const Complex* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void axpy_scalar(Complex a, const Complex* x, Complex* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += Complex{ar * xr - ai * xi, ar * xi + ai * xr};
    }
}

void scaled_copy_scalar(Complex a, const Complex* x, Complex* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = Complex{ar * xr - ai * xi, ar * xi + ai * xr};
    }
}

void scale_scalar(Complex a, Complex* x, std::size_t n) {
    scaled_copy_scalar(a, x, x, n);
}

void hadamard_scalar(const Complex* x, const Complex* y, Complex* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        z[i] = Complex{xr * yr - xi * yi, xr * yi + xi * yr};
    }
}

void gemv_scalar(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x,
                 Complex* y) {
    for (std::size_t r = 0; r < rows; ++r)
        y[r] = Complex{};
    for (std::size_t c = 0; c < cols; ++c)
        axpy_scalar(x[c], a + c * rows, y, rows);
}

void gemv_adj_scalar(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x,
                     Complex* y) {
    for (std::size_t c = 0; c < cols; ++c)
        y[c] = dotc_scalar(a + c * rows, x, rows);
}

} // namespace irsbf::kernels::detail
