#pragma once

#include "irsbf/linalg.hpp"
#include "irsbf/rng.hpp"

#include <utility>
#include <vector>

namespace irsbf {

// Uniform rectangular array, half-wavelength spacing.
struct ArrayGeometry {
    int n_y = 1; // horizontal elements
    int n_z = 1; // vertical elements
    int total() const { return n_y * n_z; }
};

// mu = pi sin(elev) sin(az), psi = pi cos(elev); both in [-pi, pi].
struct SpatialFrequencies {
    double mu = 0.0;
    double psi = 0.0;
};

SpatialFrequencies spatial_frequencies(double elev_rad, double az_rad);

// Array response split into horizontal/vertical factors; full = kron(y, z),
// i.e. element (m_y, m_z) sits at index m_z + m_y * n_z and carries phase
// e^{-j(m_y mu + m_z psi)}.
struct SteeringVector {
    CVec full, y, z;
};

SteeringVector steering_vector(const SpatialFrequencies& sf, const ArrayGeometry& geom);

struct PathParams {
    Complex gain;
    double elev_dep = 0.0, az_dep = 0.0; // transmit side, radians
    double elev_arr = 0.0, az_arr = 0.0; // receive side, radians
};

// Per-path complex gain law: CN(0, variance).
struct GainLaw {
    double variance = 1.0;
};

// L i.i.d. paths; elevations U[90-delta, 90+delta] degrees, azimuths
// U[az_lo, az_hi] degrees, independent across paths and across the two sides.
// Draw order per path: gain, elev_dep, az_dep, elev_arr, az_arr.
std::vector<PathParams> draw_paths(int count, double elev_spread_deg, double az_lo_deg,
                                   double az_hi_deg, const GainLaw& law, Rng& rng);

// Geometric channel for one link, rx_total x tx_total, with its per-path
// horizontal/vertical Kronecker factors and the separable approximation.
struct GeometricChannel {
    CMat full;                              // sum_l kron(per_path_y[l], per_path_z[l])
    std::vector<CMat> per_path_y;           // gain folded into the horizontal factor
    std::vector<CMat> per_path_z;           // unit-gain vertical factors
    CMat approx_y;                          // sum of per_path_y
    CMat approx_z;                          // |gain|-weighted mean of per_path_z
};

GeometricChannel synth_channel(const std::vector<PathParams>& paths, const ArrayGeometry& tx,
                               const ArrayGeometry& rx);

// F = khatri_rao(H^T, G): column n is kron(n-th row of H, n-th column of G),
// so w^H G diag(theta) H q == (q^T kron w^H) F theta.
CMat combined_channel(const CMat& h, const CMat& g);

// F + Z with i.i.d. CN(0, sigma_z_sq) entries; column-major draw order.
CMat add_estimation_noise(const CMat& f, double sigma_z_sq, Rng& rng);

// Least-squares Khatri-Rao factorization of a (K*M) x N matrix: each column is
// reshaped to the K x M matrix g h^T (first index fastest) and rank-one
// truncated. Convention: g_n unit-norm, magnitude and phase absorbed into h_n;
// the per-column scaling ambiguity is left uncorrected.
struct KhatriRaoFactors {
    CMat h; // N x M (rows are h_n^T)
    CMat g; // K x N (columns are g_n)
};

KhatriRaoFactors lskrf(const CMat& f_hat, int k_dim, int m_dim);

// Nearest Kronecker product: minimizes ||A - kron(top, bot)||_F via the block
// rearrangement + rank-one SVD. top is r1 x c1, bot is r2 x c2.
std::pair<CMat, CMat> nearest_kron_factor(const CMat& a, std::pair<int, int> top_dims,
                                          std::pair<int, int> bot_dims);

struct DomainDims {
    int k_y = 1, k_z = 1;
    int m_y = 1, m_z = 1;
    int n_y = 1, n_z = 1;
};

// Row permutation that maps the combined channel F = H^T khatri-rao G (with
// H = H_y kron H_z, G = G_y kron G_z) onto kron(F_y, F_z); perm[target] = source.
std::vector<int> domain_row_permutation(const DomainDims& d);

// Per-domain combined channels recovered from a (noisy) full combined channel:
// fixed row permutation, then nearest Kronecker factorization. Returns
// (F_y: K_y*M_y x N_y, F_z: K_z*M_z x N_z) up to a reciprocal scalar pair.
std::pair<CMat, CMat> extract_domain_combined(const CMat& f_hat, const DomainDims& d);

} // namespace irsbf
