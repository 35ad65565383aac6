#include "irsbf/svd.hpp"

#include <cmath>
#include <stdexcept>

namespace irsbf {

namespace {

constexpr double kSigmaRelTol = 1e-12;
constexpr int kMaxIterations = 10000;

// Start vector: all-ones perturbed by e_1, normalized. Falls back to the
// canonical basis if the start happens to lie in the null space.
CVec start_vector(const CMat& a, int attempt) {
    CVec v(static_cast<std::size_t>(a.cols()), Complex{});
    if (attempt == 0) {
        for (Complex& z : v)
            z = Complex{1.0, 0.0};
        v[0] += Complex{1.0, 0.0};
    } else {
        v[(attempt - 1) % a.cols()] = Complex{1.0, 0.0};
    }
    return normalized(v);
}

} // namespace

RankOneSVD rank_one_svd(const CMat& a) {
    if (kernels::norm_sq(a.data(), a.size()) == 0.0)
        throw std::invalid_argument("rank_one_svd: zero matrix");

    CVec v;
    CVec av;
    double sigma = 0.0;
    for (int attempt = 0; attempt <= a.cols(); ++attempt) {
        v = start_vector(a, attempt);
        av = matvec(a, v);
        sigma = norm(av);
        if (sigma > 0.0)
            break;
    }
    if (sigma == 0.0)
        throw std::invalid_argument("rank_one_svd: could not find a nonzero start");

    for (int it = 0; it < kMaxIterations; ++it) {
        v = normalized(matvec_adjoint(a, av));
        av = matvec(a, v);
        const double next = norm(av);
        const bool converged = std::abs(next - sigma) <= kSigmaRelTol * next;
        sigma = next;
        if (converged)
            break;
    }

    RankOneSVD out;
    out.sigma = sigma;
    out.u = CVec(av.size());
    kernels::scaled_copy(Complex{1.0 / sigma, 0.0}, av.data(), out.u.data(), av.size());
    out.v = std::move(v);

    // Phase-normalize: first nonzero entry of u real-nonnegative, compensating
    // phase folded into v so sigma*u*v^H is unchanged.
    for (const Complex& z : out.u) {
        if (z != Complex{}) {
            const double mag = std::abs(z);
            const Complex phase = std::conj(z) / mag;
            kernels::scale(phase, out.u.data(), out.u.size());
            kernels::scale(phase, out.v.data(), out.v.size());
            break;
        }
    }
    return out;
}

} // namespace irsbf
