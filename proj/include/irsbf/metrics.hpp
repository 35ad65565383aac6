#pragma once

#include "irsbf/beamforming.hpp"
#include "irsbf/linalg.hpp"

namespace irsbf {

struct LinkBudget {
    double tx_power = 1.0;
    double noise_power = 1.0;
};

// s = w^H G diag(theta) H q, evaluated as the cascade.
Complex effective_gain(const BeamformingSolution& sol, const CMat& h, const CMat& g);

// log2(1 + |gain|^2 * tx_power / noise_power), bits/s/Hz.
double spectral_efficiency(Complex gain, const LinkBudget& budget);

// SE of the factorized received signal s = s_y * s_z, with the per-domain SNR
// split (snr_y * snr_z equals the overall SNR).
struct FactorizedSe {
    double se_bits = 0.0;
    double snr_y = 0.0;
    double snr_z = 0.0;
};

FactorizedSe factorized_se(Complex s_y, Complex s_z, const LinkBudget& budget);

// Operation-count model (unit constants): baseline N(M+K),
// per-domain SVD design N_y(M_y+K_y) + N_z(M_z+K_z),
// tensor design 3(K_y M_y N_y + K_z M_z N_z). The IRS split may be
// non-integer (N_y = N_z = sqrt(N)) — this is a formula evaluation, not an
// array layout.
struct ComplexityDims {
    int m_y = 1, m_z = 1;
    int k_y = 1, k_z = 1;
    double n_y = 1.0, n_z = 1.0;
};

struct ComplexityReport {
    Method method = Method::baseline;
    double ops = 0.0; // exact formula value
    ComplexityDims dims;
    long long op_count() const; // rounded to nearest integer
};

ComplexityReport complexity_count(Method method, const ComplexityDims& dims);

} // namespace irsbf
