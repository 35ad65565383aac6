#include "irsbf/tensor.hpp"

#include "irsbf/svd.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace irsbf {

Tensor3::Tensor3(int i, int j, int k) : dims_{i, j, k} {
    if (i <= 0 || j <= 0 || k <= 0)
        throw std::invalid_argument("Tensor3: dimensions must be positive");
    data_.assign(static_cast<std::size_t>(i) * j * k, Complex{});
}

Tensor3 fold_to_tensor(const CMat& f, int k_dim, int m_dim, int n_dim) {
    if (f.rows() != k_dim * m_dim || f.cols() != n_dim)
        throw std::invalid_argument("fold_to_tensor: dimension mismatch");
    Tensor3 t(k_dim, m_dim, n_dim);
    std::memcpy(t.data(), f.data(), f.size() * sizeof(Complex));
    return t;
}

CMat unfold(const Tensor3& t, int mode) {
    const int i_dim = t.dim(1), j_dim = t.dim(2), k_dim = t.dim(3);
    switch (mode) {
    case 1: {
        CMat out(i_dim, j_dim * k_dim);
        // storage already has i fastest, (j,k) in column order
        std::memcpy(out.data(), t.data(), t.size() * sizeof(Complex));
        return out;
    }
    case 2: {
        CMat out(j_dim, k_dim * i_dim);
        for (int i = 0; i < i_dim; ++i)
            for (int k = 0; k < k_dim; ++k)
                for (int j = 0; j < j_dim; ++j)
                    out(j, i * k_dim + k) = t(i, j, k);
        return out;
    }
    case 3: {
        CMat out(k_dim, i_dim * j_dim);
        for (int j = 0; j < j_dim; ++j)
            for (int i = 0; i < i_dim; ++i)
                for (int k = 0; k < k_dim; ++k)
                    out(k, j * i_dim + i) = t(i, j, k);
        return out;
    }
    default:
        throw std::invalid_argument("unfold: mode must be 1, 2 or 3");
    }
}

Tensor3 fold_from_unfolding(const CMat& m, int mode, int i_dim, int j_dim, int k_dim) {
    Tensor3 t(i_dim, j_dim, k_dim);
    switch (mode) {
    case 1:
        if (m.rows() != i_dim || m.cols() != j_dim * k_dim)
            throw std::invalid_argument("fold_from_unfolding: dimension mismatch");
        std::memcpy(t.data(), m.data(), t.size() * sizeof(Complex));
        return t;
    case 2:
        if (m.rows() != j_dim || m.cols() != k_dim * i_dim)
            throw std::invalid_argument("fold_from_unfolding: dimension mismatch");
        for (int i = 0; i < i_dim; ++i)
            for (int k = 0; k < k_dim; ++k)
                for (int j = 0; j < j_dim; ++j)
                    t(i, j, k) = m(j, i * k_dim + k);
        return t;
    case 3:
        if (m.rows() != k_dim || m.cols() != i_dim * j_dim)
            throw std::invalid_argument("fold_from_unfolding: dimension mismatch");
        for (int j = 0; j < j_dim; ++j)
            for (int i = 0; i < i_dim; ++i)
                for (int k = 0; k < k_dim; ++k)
                    t(i, j, k) = m(k, j * i_dim + i);
        return t;
    default:
        throw std::invalid_argument("fold_from_unfolding: mode must be 1, 2 or 3");
    }
}

Tensor3 n_mode_product(const Tensor3& t, const CMat& a, int mode) {
    if (mode < 1 || mode > 3)
        throw std::invalid_argument("n_mode_product: mode must be 1, 2 or 3");
    if (a.cols() != t.dim(mode))
        throw std::invalid_argument("n_mode_product: dimension mismatch");

    const int i_dim = t.dim(1), j_dim = t.dim(2), k_dim = t.dim(3);
    switch (mode) {
    case 1: {
        Tensor3 out(a.rows(), j_dim, k_dim);
        for (int k = 0; k < k_dim; ++k)
            for (int j = 0; j < j_dim; ++j)
                for (int i = 0; i < i_dim; ++i)
                    kernels::axpy(t(i, j, k), a.col(i), &out(0, j, k), a.rows());
        return out;
    }
    case 2: {
        Tensor3 out(i_dim, a.rows(), k_dim);
        for (int k = 0; k < k_dim; ++k)
            for (int j = 0; j < j_dim; ++j)
                for (int r = 0; r < a.rows(); ++r) {
                    const Complex w = a(r, j);
                    kernels::axpy(w, &t(0, j, k), &out(0, r, k), static_cast<std::size_t>(i_dim));
                }
        return out;
    }
    default: {
        Tensor3 out(i_dim, j_dim, a.rows());
        const std::size_t slab = static_cast<std::size_t>(i_dim) * j_dim;
        for (int k = 0; k < k_dim; ++k)
            for (int r = 0; r < a.rows(); ++r)
                kernels::axpy(a(r, k), t.data() + slab * k, out.data() + slab * r, slab);
        return out;
    }
    }
}

HosvdRankOne hosvd_rank_one(const Tensor3& t) {
    if (kernels::norm_sq(t.data(), t.size()) == 0.0)
        throw std::invalid_argument("hosvd_rank_one: zero tensor");
    HosvdRankOne out;
    out.u1 = rank_one_svd(unfold(t, 1)).u;
    out.u2 = rank_one_svd(unfold(t, 2)).u;
    out.u3 = rank_one_svd(unfold(t, 3)).u;
    return out;
}

double frobenius_norm(const Tensor3& t) {
    return std::sqrt(kernels::norm_sq(t.data(), t.size()));
}

} // namespace irsbf
