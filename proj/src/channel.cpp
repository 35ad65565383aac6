#include "irsbf/channel.hpp"

#include "irsbf/svd.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace irsbf {

namespace {

constexpr double kPi = std::numbers::pi;

double deg2rad(double deg) { return deg * kPi / 180.0; }

CVec phase_ramp(double freq, int n) {
    CVec v(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        v[p] = std::polar(1.0, -freq * p);
    return v;
}

CMat outer(Complex a, const CVec& u, const CVec& v) {
    CMat m(static_cast<int>(u.size()), static_cast<int>(v.size()));
    add_outer(m, a, u, v);
    return m;
}

} // namespace

SpatialFrequencies spatial_frequencies(double elev_rad, double az_rad) {
    return {kPi * std::sin(elev_rad) * std::sin(az_rad), kPi * std::cos(elev_rad)};
}

SteeringVector steering_vector(const SpatialFrequencies& sf, const ArrayGeometry& geom) {
    SteeringVector s;
    s.y = phase_ramp(sf.mu, geom.n_y);
    s.z = phase_ramp(sf.psi, geom.n_z);
    s.full = kron(s.y, s.z);
    return s;
}

std::vector<PathParams> draw_paths(int count, double elev_spread_deg, double az_lo_deg,
                                   double az_hi_deg, const GainLaw& law, Rng& rng) {
    if (count < 1)
        throw std::invalid_argument("draw_paths: need at least one path");
    if (elev_spread_deg < 0.0)
        throw std::invalid_argument("draw_paths: negative elevation spread");
    if (az_lo_deg > az_hi_deg)
        throw std::invalid_argument("draw_paths: empty azimuth range");
    if (law.variance < 0.0)
        throw std::invalid_argument("draw_paths: negative gain variance");

    const double amp = std::sqrt(law.variance);
    std::vector<PathParams> paths(static_cast<std::size_t>(count));
    for (PathParams& p : paths) {
        p.gain = amp * rng.cgaussian();
        p.elev_dep = deg2rad(rng.uniform(90.0 - elev_spread_deg, 90.0 + elev_spread_deg));
        p.az_dep = deg2rad(rng.uniform(az_lo_deg, az_hi_deg));
        p.elev_arr = deg2rad(rng.uniform(90.0 - elev_spread_deg, 90.0 + elev_spread_deg));
        p.az_arr = deg2rad(rng.uniform(az_lo_deg, az_hi_deg));
    }
    return paths;
}

GeometricChannel synth_channel(const std::vector<PathParams>& paths, const ArrayGeometry& tx,
                               const ArrayGeometry& rx) {
    if (paths.empty())
        throw std::invalid_argument("synth_channel: no paths");

    GeometricChannel ch;
    ch.per_path_y.reserve(paths.size());
    ch.per_path_z.reserve(paths.size());

    for (const PathParams& p : paths) {
        const SteeringVector a = steering_vector(spatial_frequencies(p.elev_dep, p.az_dep), tx);
        const SteeringVector b = steering_vector(spatial_frequencies(p.elev_arr, p.az_arr), rx);
        ch.per_path_y.push_back(outer(p.gain, b.y, a.y));
        ch.per_path_z.push_back(outer(Complex{1.0, 0.0}, b.z, a.z));
    }

    ch.full = kron(ch.per_path_y[0], ch.per_path_z[0]);
    for (std::size_t l = 1; l < paths.size(); ++l)
        add_scaled(ch.full, Complex{1.0, 0.0}, kron(ch.per_path_y[l], ch.per_path_z[l]));

    ch.approx_y = ch.per_path_y[0];
    for (std::size_t l = 1; l < paths.size(); ++l)
        add_scaled(ch.approx_y, Complex{1.0, 0.0}, ch.per_path_y[l]);

    // Common vertical factor: |gain|-weighted mean of the per-path factors
    // (uniform mean if all gains vanish). Exact whenever the factors coincide.
    double total = 0.0;
    for (const PathParams& p : paths)
        total += std::abs(p.gain);
    ch.approx_z = CMat(rx.n_z, tx.n_z);
    for (std::size_t l = 0; l < paths.size(); ++l) {
        const double w = total > 0.0 ? std::abs(paths[l].gain) / total
                                     : 1.0 / static_cast<double>(paths.size());
        add_scaled(ch.approx_z, Complex{w, 0.0}, ch.per_path_z[l]);
    }
    return ch;
}

CMat combined_channel(const CMat& h, const CMat& g) {
    if (h.rows() != g.cols())
        throw std::invalid_argument("combined_channel: H rows must equal G cols");
    return khatri_rao(transpose(h), g);
}

CMat add_estimation_noise(const CMat& f, double sigma_z_sq, Rng& rng) {
    if (sigma_z_sq < 0.0)
        throw std::invalid_argument("add_estimation_noise: negative variance");
    CMat out = f;
    if (sigma_z_sq == 0.0)
        return out;
    const double amp = std::sqrt(sigma_z_sq);
    Complex* p = out.data();
    for (std::size_t i = 0; i < out.size(); ++i)
        p[i] += amp * rng.cgaussian();
    return out;
}

KhatriRaoFactors lskrf(const CMat& f_hat, int k_dim, int m_dim) {
    if (f_hat.rows() != k_dim * m_dim)
        throw std::invalid_argument("lskrf: row count is not K*M");

    const int n_cols = f_hat.cols();
    KhatriRaoFactors out{CMat(n_cols, m_dim), CMat(k_dim, n_cols)};
    CMat r(k_dim, m_dim);
    for (int n = 0; n < n_cols; ++n) {
        // column n reshaped with the k index fastest: r = g_n h_n^T
        std::memcpy(r.data(), f_hat.col(n), static_cast<std::size_t>(k_dim) * m_dim * sizeof(Complex));
        const RankOneSVD svd = rank_one_svd(r);
        for (int k = 0; k < k_dim; ++k)
            out.g(k, n) = svd.u[k];
        for (int m = 0; m < m_dim; ++m)
            out.h(n, m) = svd.sigma * std::conj(svd.v[m]);
    }
    return out;
}

std::pair<CMat, CMat> nearest_kron_factor(const CMat& a, std::pair<int, int> top_dims,
                                          std::pair<int, int> bot_dims) {
    const auto [r1, c1] = top_dims;
    const auto [r2, c2] = bot_dims;
    if (a.rows() != r1 * r2 || a.cols() != c1 * c2)
        throw std::invalid_argument("nearest_kron_factor: dimension mismatch");

    // Van Loan rearrangement: row (j1*r1 + i1) of R is vec of the (i1, j1)
    // block, so A = kron(T, B) iff R = vec(T) vec(B)^T.
    CMat r(r1 * c1, r2 * c2);
    for (int j1 = 0; j1 < c1; ++j1)
        for (int i1 = 0; i1 < r1; ++i1)
            for (int j2 = 0; j2 < c2; ++j2)
                for (int i2 = 0; i2 < r2; ++i2)
                    r(j1 * r1 + i1, j2 * r2 + i2) = a(i1 * r2 + i2, j1 * c2 + j2);

    const RankOneSVD svd = rank_one_svd(r);
    const double s = std::sqrt(svd.sigma);
    CMat top(r1, c1), bot(r2, c2);
    for (int j1 = 0; j1 < c1; ++j1)
        for (int i1 = 0; i1 < r1; ++i1)
            top(i1, j1) = s * svd.u[static_cast<std::size_t>(j1) * r1 + i1];
    for (int j2 = 0; j2 < c2; ++j2)
        for (int i2 = 0; i2 < r2; ++i2)
            bot(i2, j2) = s * std::conj(svd.v[static_cast<std::size_t>(j2) * r2 + i2]);
    return {std::move(top), std::move(bot)};
}

std::vector<int> domain_row_permutation(const DomainDims& d) {
    const int k_total = d.k_y * d.k_z;
    std::vector<int> perm(static_cast<std::size_t>(k_total) * d.m_y * d.m_z);
    for (int my = 0; my < d.m_y; ++my)
        for (int mz = 0; mz < d.m_z; ++mz)
            for (int ky = 0; ky < d.k_y; ++ky)
                for (int kz = 0; kz < d.k_z; ++kz) {
                    const int src = (my * d.m_z + mz) * k_total + (ky * d.k_z + kz);
                    const int dst = (my * d.k_y + ky) * (d.k_z * d.m_z) + (mz * d.k_z + kz);
                    perm[static_cast<std::size_t>(dst)] = src;
                }
    return perm;
}

std::pair<CMat, CMat> extract_domain_combined(const CMat& f_hat, const DomainDims& d) {
    const int rows = d.k_y * d.k_z * d.m_y * d.m_z;
    const int cols = d.n_y * d.n_z;
    if (f_hat.rows() != rows || f_hat.cols() != cols)
        throw std::invalid_argument("extract_domain_combined: dimension mismatch");

    const std::vector<int> perm = domain_row_permutation(d);
    CMat p(rows, cols);
    for (int c = 0; c < cols; ++c) {
        const Complex* src = f_hat.col(c);
        Complex* dst = p.col(c);
        for (int rr = 0; rr < rows; ++rr)
            dst[rr] = src[perm[static_cast<std::size_t>(rr)]];
    }
    return nearest_kron_factor(p, {d.k_y * d.m_y, d.n_y}, {d.k_z * d.m_z, d.n_z});
}

} // namespace irsbf
