#include "irsbf/beamforming.hpp"

#include "irsbf/svd.hpp"

#include <cmath>

namespace irsbf {

const char* method_name(Method m) {
    switch (m) {
    case Method::baseline: return "baseline";
    case Method::kf: return "kf";
    case Method::tot: return "tot";
    }
    return "?";
}

CVec project_unit_modulus(const CVec& v) {
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        out[i] = mag == 0.0 ? Complex{1.0, 0.0} : std::conj(v[i]) / mag;
    }
    return out;
}

namespace {

CVec align_phases(const CVec& v_g, const CVec& u_h) {
    return project_unit_modulus(hadamard(conjugate(v_g), u_h));
}

} // namespace

BeamformingSolution baseline_full(const CMat& h, const CMat& g) {
    const RankOneSVD sh = rank_one_svd(h);
    const RankOneSVD sg = rank_one_svd(g);

    BeamformingSolution sol;
    sol.method = Method::baseline;
    sol.w = sg.u;
    sol.q = sh.v;
    sol.theta = align_phases(sg.v, sh.u);
    return sol;
}

BeamformingSolution kf_design(const CMat& h_y, const CMat& h_z, const CMat& g_y,
                              const CMat& g_z) {
    const RankOneSVD shy = rank_one_svd(h_y);
    const RankOneSVD shz = rank_one_svd(h_z);
    const RankOneSVD sgy = rank_one_svd(g_y);
    const RankOneSVD sgz = rank_one_svd(g_z);

    DomainFactors f;
    f.w_y = sgy.u;
    f.w_z = sgz.u;
    f.q_y = shy.v;
    f.q_z = shz.v;
    f.theta_y = align_phases(sgy.v, shy.u);
    f.theta_z = align_phases(sgz.v, shz.u);

    BeamformingSolution sol;
    sol.method = Method::kf;
    sol.w = kron(f.w_y, f.w_z);
    sol.q = kron(f.q_y, f.q_z);
    sol.theta = kron(f.theta_y, f.theta_z);
    sol.factors = std::move(f);
    return sol;
}

BeamformingSolution tot_design(const Tensor3& f_y, const Tensor3& f_z) {
    const HosvdRankOne hy = hosvd_rank_one(f_y);
    const HosvdRankOne hz = hosvd_rank_one(f_z);

    DomainFactors f;
    f.w_y = hy.u1;
    f.w_z = hz.u1;
    f.q_y = conjugate(hy.u2);
    f.q_z = conjugate(hz.u2);
    f.theta_y = project_unit_modulus(hy.u3);
    f.theta_z = project_unit_modulus(hz.u3);

    BeamformingSolution sol;
    sol.method = Method::tot;
    sol.w = kron(f.w_y, f.w_z);
    sol.q = kron(f.q_y, f.q_z);
    sol.theta = kron(f.theta_y, f.theta_z);
    sol.factors = std::move(f);
    return sol;
}

} // namespace irsbf
