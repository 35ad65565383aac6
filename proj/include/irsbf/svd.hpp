#pragma once

#include "irsbf/linalg.hpp"

namespace irsbf {

// Dominant singular triple (sigma, u, v) with A ~= sigma * u * v^H.
// u and v are unit-norm; the first nonzero entry of u is real and
// nonnegative, with the compensating phase folded into v.
struct RankOneSVD {
    double sigma = 0.0;
    CVec u;
    CVec v;
};

// Best rank-one approximation via power iteration on A^H A with a fixed
// deterministic start (all-ones perturbed by e_1), so repeated calls on
// identical input are identical. Stops when successive sigma estimates differ
// by < 1e-12 relative (cap 10000 iterations), an O(rows*cols) step per
// iteration. Throws std::invalid_argument for the zero matrix.
//
// When the top two singular values are equal the limit of the iteration is
// not unique; the triple returned is whichever the fixed start converges to.
RankOneSVD rank_one_svd(const CMat& a);

} // namespace irsbf
