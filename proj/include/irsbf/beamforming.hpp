#pragma once

#include "irsbf/linalg.hpp"
#include "irsbf/tensor.hpp"

#include <optional>

namespace irsbf {

enum class Method { baseline, kf, tot };

const char* method_name(Method m);

// Per-domain factors of a Kronecker-structured design; the full vectors are
// exactly the Kronecker products of these (q_y/q_z are stored after any
// conjugation, so w = kron(w_y, w_z), q = kron(q_y, q_z),
// theta = kron(theta_y, theta_z) hold verbatim).
struct DomainFactors {
    CVec w_y, w_z;
    CVec q_y, q_z;
    CVec theta_y, theta_z;
};

// Combiner w (unit norm), precoder q (unit norm), IRS phases theta
// (unit modulus per entry).
struct BeamformingSolution {
    CVec w;
    CVec q;
    CVec theta;
    std::optional<DomainFactors> factors;
    Method method = Method::baseline;
};

// out_n = e^{-j angle(v_n)}; zero entries map to 1.
CVec project_unit_modulus(const CVec& v);

// Full-channel SVD design: q and w are the dominant right/left singular
// vectors of H (N x M) and G (K x N); theta aligns the phases of the
// dominant-mode cascade, theta_n = e^{-j angle(conj(v_G[n]) u_H[n])}.
BeamformingSolution baseline_full(const CMat& h, const CMat& g);

// Per-domain SVD design on the factorized channels: rank-one SVDs of all four
// factors, w_t = u_{g_t}, q_t = v_{h_t},
// theta_t = e^{-j angle(conj(v_{g_t}) hadamard u_{h_t})}, combined with
// Kronecker products.
BeamformingSolution kf_design(const CMat& h_y, const CMat& h_z, const CMat& g_y, const CMat& g_z);

// Rank-one HOSVD design on the per-domain combined channel tensors
// (K_t x M_t x N_t): w_t, q_t, theta_t come from the 1-, 2- and 3-mode
// dominant left singular vectors, with the precoder conjugated and the phases
// projected to unit modulus.
BeamformingSolution tot_design(const Tensor3& f_y, const Tensor3& f_z);

} // namespace irsbf
