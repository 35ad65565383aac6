#pragma once

#include "irsbf/linalg.hpp"

#include <array>

namespace irsbf {

// Dense third-order complex tensor. Storage has the first index fastest, then
// the second, then the third — the same linear order as a column-major
// (dim1*dim2) x dim3 matrix, which makes fold_to_tensor a plain copy.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int i, int j, int k);

    int dim(int mode) const { return dims_[mode - 1]; }
    std::array<int, 3> dims() const { return dims_; }
    std::size_t size() const { return data_.size(); }

    Complex& operator()(int i, int j, int k) { return data_[idx(i, j, k)]; }
    const Complex& operator()(int i, int j, int k) const { return data_[idx(i, j, k)]; }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }

    bool operator==(const Tensor3& other) const = default;

private:
    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(dims_[0]) * (static_cast<std::size_t>(j) +
                                                     static_cast<std::size_t>(dims_[1]) * k);
    }

    std::array<int, 3> dims_{0, 0, 0};
    std::vector<Complex> data_;
};

// T(k, m, n) = F((m)*K + k, n) for a (K*M) x N matrix F (0-based), i.e. each
// column of F is read down with the first tensor index fastest.
Tensor3 fold_to_tensor(const CMat& f, int k_dim, int m_dim, int n_dim);

// Mode-n unfolding with cyclic column ordering (0-based column indices):
//   mode 1: I x (J*K), column k*J + j
//   mode 2: J x (K*I), column i*K + k
//   mode 3: K x (I*J), column j*I + i
CMat unfold(const Tensor3& t, int mode);
// Inverse of unfold for given target dims.
Tensor3 fold_from_unfolding(const CMat& m, int mode, int i_dim, int j_dim, int k_dim);

// Contraction of mode `mode` with the rows of `a`; satisfies
// unfold(result, mode) == a * unfold(t, mode).
Tensor3 n_mode_product(const Tensor3& t, const CMat& a, int mode);

// Dominant left singular vectors of the three unfoldings, each unit-norm and
// phase-normalized. Throws on the zero tensor.
struct HosvdRankOne {
    CVec u1, u2, u3;
};
HosvdRankOne hosvd_rank_one(const Tensor3& t);

double frobenius_norm(const Tensor3& t);

} // namespace irsbf
