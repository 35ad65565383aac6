#include "irsbf/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace irsbf {

namespace k = kernels;

CMat::CMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("CMat: dimensions must be positive");
    data_.assign(static_cast<std::size_t>(rows) * cols, Complex{});
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ac = 0; ac < a.cols(); ++ac) {
        for (int bc = 0; bc < b.cols(); ++bc) {
            Complex* dst = out.col(ac * b.cols() + bc);
            for (int ar = 0; ar < a.rows(); ++ar)
                k::scaled_copy(a(ar, ac), b.col(bc), dst + static_cast<std::size_t>(ar) * b.rows(),
                               b.rows());
        }
    }
    return out;
}

CVec kron(const CVec& a, const CVec& b) {
    CVec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        k::scaled_copy(a[i], b.data(), out.data() + i * b.size(), b.size());
    return out;
}

CMat khatri_rao(const CMat& a, const CMat& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("khatri_rao: column counts differ");
    CMat out(a.rows() * b.rows(), a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        Complex* dst = out.col(c);
        for (int ar = 0; ar < a.rows(); ++ar)
            k::scaled_copy(a(ar, c), b.col(c), dst + static_cast<std::size_t>(ar) * b.rows(),
                           b.rows());
    }
    return out;
}

CVec hadamard(const CVec& a, const CVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hadamard: lengths differ");
    CVec out(a.size());
    k::hadamard(a.data(), b.data(), out.data(), a.size());
    return out;
}

CVec matvec(const CMat& a, const CVec& x) {
    if (static_cast<std::size_t>(a.cols()) != x.size())
        throw std::invalid_argument("matvec: dimension mismatch");
    CVec y(a.rows());
    k::gemv(a.data(), a.rows(), a.cols(), x.data(), y.data());
    return y;
}

CVec matvec_adjoint(const CMat& a, const CVec& x) {
    if (static_cast<std::size_t>(a.rows()) != x.size())
        throw std::invalid_argument("matvec_adjoint: dimension mismatch");
    CVec y(a.cols());
    k::gemv_adj(a.data(), a.rows(), a.cols(), x.data(), y.data());
    return y;
}

CVec matvec_transpose(const CMat& a, const CVec& x) {
    if (static_cast<std::size_t>(a.rows()) != x.size())
        throw std::invalid_argument("matvec_transpose: dimension mismatch");
    CVec y(a.cols());
    for (int c = 0; c < a.cols(); ++c)
        y[c] = k::dot(a.col(c), x.data(), a.rows());
    return y;
}

CMat matmul(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: dimension mismatch");
    CMat out(a.rows(), b.cols());
    for (int c = 0; c < b.cols(); ++c)
        for (int i = 0; i < a.cols(); ++i)
            k::axpy(b(i, c), a.col(i), out.col(c), a.rows());
    return out;
}

CMat transpose(const CMat& a) {
    CMat out(a.cols(), a.rows());
    for (int c = 0; c < a.cols(); ++c)
        for (int r = 0; r < a.rows(); ++r)
            out(c, r) = a(r, c);
    return out;
}

CMat conjugate(const CMat& a) {
    CMat out(a.rows(), a.cols());
    for (int c = 0; c < a.cols(); ++c)
        for (int r = 0; r < a.rows(); ++r)
            out(r, c) = std::conj(a(r, c));
    return out;
}

void add_outer(CMat& m, Complex a, const CVec& u, const CVec& v) {
    if (m.rows() != static_cast<int>(u.size()) || m.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("add_outer: dimension mismatch");
    for (int c = 0; c < m.cols(); ++c)
        k::axpy(a * v[c], u.data(), m.col(c), u.size());
}

void add_scaled(CMat& dst, Complex a, const CMat& src) {
    if (dst.rows() != src.rows() || dst.cols() != src.cols())
        throw std::invalid_argument("add_scaled: dimension mismatch");
    k::axpy(a, src.data(), dst.data(), src.size());
}

CVec conjugate(const CVec& v) {
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = std::conj(v[i]);
    return out;
}

double norm_sq(const CVec& v) { return k::norm_sq(v.data(), v.size()); }
double norm(const CVec& v) { return std::sqrt(norm_sq(v)); }
double frobenius_norm(const CMat& a) { return std::sqrt(k::norm_sq(a.data(), a.size())); }

CVec normalized(const CVec& v) {
    const double n = norm(v);
    if (n == 0.0)
        throw std::invalid_argument("normalized: zero vector");
    CVec out(v.size());
    k::scaled_copy(Complex{1.0 / n, 0.0}, v.data(), out.data(), v.size());
    return out;
}

Complex dot(const CVec& a, const CVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: lengths differ");
    return k::dot(a.data(), b.data(), a.size());
}

Complex dotc(const CVec& a, const CVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dotc: lengths differ");
    return k::dotc(a.data(), b.data(), a.size());
}

bool all_finite(const CVec& v) {
    for (const Complex& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

bool all_finite(const CMat& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag()))
            return false;
    return true;
}

} // namespace irsbf
