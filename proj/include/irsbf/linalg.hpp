#pragma once

#include "irsbf/kernels.hpp"

#include <complex>
#include <vector>

namespace irsbf {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Dense complex matrix, column-major storage (entries grouped by column).
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    Complex& operator()(int r, int c) { return data_[idx(r, c)]; }
    const Complex& operator()(int r, int c) const { return data_[idx(r, c)]; }

    Complex* col(int c) { return data_.data() + static_cast<std::size_t>(c) * rows_; }
    const Complex* col(int c) const { return data_.data() + static_cast<std::size_t>(c) * rows_; }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }

    bool operator==(const CMat& other) const = default;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(c) * rows_ + static_cast<std::size_t>(r);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

// Kronecker product; entry ((ar-1)*B.rows+br, (ac-1)*B.cols+bc) = A(ar,ac)*B(br,bc).
CMat kron(const CMat& a, const CMat& b);
CVec kron(const CVec& a, const CVec& b);
// Column-wise Kronecker product; requires equal column counts.
CMat khatri_rao(const CMat& a, const CMat& b);
// Elementwise product; requires equal lengths.
CVec hadamard(const CVec& a, const CVec& b);

CVec matvec(const CMat& a, const CVec& x);            // A x
CVec matvec_adjoint(const CMat& a, const CVec& x);    // A^H x
CVec matvec_transpose(const CMat& a, const CVec& x);  // A^T x
CMat matmul(const CMat& a, const CMat& b);
CMat transpose(const CMat& a);
CMat conjugate(const CMat& a);

// a * u v^T added into m (column j gets a*v[j]*u)
void add_outer(CMat& m, Complex a, const CVec& u, const CVec& v);
void add_scaled(CMat& dst, Complex a, const CMat& src);

CVec conjugate(const CVec& v);
double norm(const CVec& v);
double norm_sq(const CVec& v);
double frobenius_norm(const CMat& a);
// v / ||v||; throws on the zero vector.
CVec normalized(const CVec& v);
Complex dot(const CVec& a, const CVec& b);            // sum a_i b_i
Complex dotc(const CVec& a, const CVec& b);           // sum conj(a_i) b_i

bool all_finite(const CMat& a);
bool all_finite(const CVec& v);

} // namespace irsbf
