#include "irsbf/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace irsbf::kernels {

namespace detail {

Complex dot_scalar(const Complex*, const Complex*, std::size_t);
Complex dotc_scalar(const Complex*, const Complex*, std::size_t);
double norm_sq_scalar(const Complex*, std::size_t);
void axpy_scalar(Complex, const Complex*, Complex*, std::size_t);
void scaled_copy_scalar(Complex, const Complex*, Complex*, std::size_t);
void scale_scalar(Complex, Complex*, std::size_t);
void hadamard_scalar(const Complex*, const Complex*, Complex*, std::size_t);
void gemv_scalar(const Complex*, std::size_t, std::size_t, const Complex*, Complex*);
void gemv_adj_scalar(const Complex*, std::size_t, std::size_t, const Complex*, Complex*);

#if defined(IRSBF_HAVE_AVX2_TU)
Complex dot_avx2(const Complex*, const Complex*, std::size_t);
Complex dotc_avx2(const Complex*, const Complex*, std::size_t);
double norm_sq_avx2(const Complex*, std::size_t);
void axpy_avx2(Complex, const Complex*, Complex*, std::size_t);
void scaled_copy_avx2(Complex, const Complex*, Complex*, std::size_t);
void scale_avx2(Complex, Complex*, std::size_t);
void hadamard_avx2(const Complex*, const Complex*, Complex*, std::size_t);
void gemv_avx2(const Complex*, std::size_t, std::size_t, const Complex*, Complex*);
void gemv_adj_avx2(const Complex*, std::size_t, std::size_t, const Complex*, Complex*);
#endif

} // namespace detail

namespace {

struct OpTable {
    Complex (*dot)(const Complex*, const Complex*, std::size_t);
    Complex (*dotc)(const Complex*, const Complex*, std::size_t);
    double (*norm_sq)(const Complex*, std::size_t);
    void (*axpy)(Complex, const Complex*, Complex*, std::size_t);
    void (*scaled_copy)(Complex, const Complex*, Complex*, std::size_t);
    void (*scale)(Complex, Complex*, std::size_t);
    void (*hadamard)(const Complex*, const Complex*, Complex*, std::size_t);
    void (*gemv)(const Complex*, std::size_t, std::size_t, const Complex*, Complex*);
    void (*gemv_adj)(const Complex*, std::size_t, std::size_t, const Complex*, Complex*);
};

constexpr OpTable kScalarTable{detail::dot_scalar,   detail::dotc_scalar,
                               detail::norm_sq_scalar, detail::axpy_scalar,
                               detail::scaled_copy_scalar, detail::scale_scalar,
                               detail::hadamard_scalar, detail::gemv_scalar,
                               detail::gemv_adj_scalar};

#if defined(IRSBF_HAVE_AVX2_TU)
constexpr OpTable kAvx2Table{detail::dot_avx2,   detail::dotc_avx2,
                             detail::norm_sq_avx2, detail::axpy_avx2,
                             detail::scaled_copy_avx2, detail::scale_avx2,
                             detail::hadamard_avx2, detail::gemv_avx2,
                             detail::gemv_adj_avx2};
#endif

bool cpu_has_avx2() {
#if defined(IRSBF_HAVE_AVX2_TU)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct State {
    Backend backend;
    const OpTable* table;
};

State detect_initial() {
    Backend want = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
    if (const char* env = std::getenv("IRSBF_SIMD")) {
        const std::string s(env);
        if (s == "scalar")
            want = Backend::scalar;
        else if (s == "avx2" && backend_supported(Backend::avx2))
            want = Backend::avx2;
        // "auto" or anything else keeps the detected backend
    }
#if defined(IRSBF_HAVE_AVX2_TU)
    if (want == Backend::avx2)
        return {Backend::avx2, &kAvx2Table};
#endif
    return {Backend::scalar, &kScalarTable};
}

State& state() {
    static State s = detect_initial();
    return s;
}

} // namespace

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend b) {
    return b == Backend::scalar || cpu_has_avx2();
}

Backend active_backend() { return state().backend; }

void use_backend(Backend b) {
    if (!backend_supported(b))
        throw std::invalid_argument(std::string("kernel backend not supported on this CPU: ") +
                                    backend_name(b));
#if defined(IRSBF_HAVE_AVX2_TU)
    if (b == Backend::avx2) {
        state() = {Backend::avx2, &kAvx2Table};
        return;
    }
#endif
    state() = {Backend::scalar, &kScalarTable};
}

void use_auto_backend() { state() = detect_initial(); }

Complex dot(const Complex* x, const Complex* y, std::size_t n) { return state().table->dot(x, y, n); }
Complex dotc(const Complex* x, const Complex* y, std::size_t n) { return state().table->dotc(x, y, n); }
double norm_sq(const Complex* x, std::size_t n) { return state().table->norm_sq(x, n); }
void axpy(Complex a, const Complex* x, Complex* y, std::size_t n) { state().table->axpy(a, x, y, n); }
void scaled_copy(Complex a, const Complex* x, Complex* y, std::size_t n) { state().table->scaled_copy(a, x, y, n); }
void scale(Complex a, Complex* x, std::size_t n) { state().table->scale(a, x, n); }
void hadamard(const Complex* x, const Complex* y, Complex* z, std::size_t n) { state().table->hadamard(x, y, z, n); }
void gemv(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y) { state().table->gemv(a, rows, cols, x, y); }
void gemv_adj(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y) { state().table->gemv_adj(a, rows, cols, x, y); }

} // namespace irsbf::kernels
