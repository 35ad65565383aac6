#include "irsbf/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace irsbf {

Complex effective_gain(const BeamformingSolution& sol, const CMat& h, const CMat& g) {
    const CVec hq = matvec(h, sol.q);
    const CVec reflected = hadamard(sol.theta, hq);
    const CVec received = matvec(g, reflected);
    return dotc(sol.w, received);
}

double spectral_efficiency(Complex gain, const LinkBudget& budget) {
    if (budget.tx_power <= 0.0 || budget.noise_power <= 0.0)
        throw std::invalid_argument("spectral_efficiency: powers must be positive");
    return std::log2(1.0 + std::norm(gain) * budget.tx_power / budget.noise_power);
}

FactorizedSe factorized_se(Complex s_y, Complex s_z, const LinkBudget& budget) {
    FactorizedSe out;
    out.se_bits = spectral_efficiency(s_y * s_z, budget);
    const double ratio = std::sqrt(budget.tx_power / budget.noise_power);
    out.snr_y = std::norm(s_y) * ratio;
    out.snr_z = std::norm(s_z) * ratio;
    return out;
}

long long ComplexityReport::op_count() const { return std::llround(ops); }

ComplexityReport complexity_count(Method method, const ComplexityDims& dims) {
    if (dims.m_y < 1 || dims.m_z < 1 || dims.k_y < 1 || dims.k_z < 1 || dims.n_y <= 0.0 ||
        dims.n_z <= 0.0)
        throw std::invalid_argument("complexity_count: invalid dimensions");

    const double m = static_cast<double>(dims.m_y) * dims.m_z;
    const double k = static_cast<double>(dims.k_y) * dims.k_z;
    const double n = dims.n_y * dims.n_z;

    ComplexityReport report;
    report.method = method;
    report.dims = dims;
    switch (method) {
    case Method::baseline:
        report.ops = n * (m + k);
        break;
    case Method::kf:
        report.ops = dims.n_y * (dims.m_y + dims.k_y) + dims.n_z * (dims.m_z + dims.k_z);
        break;
    case Method::tot:
        report.ops = 3.0 * (static_cast<double>(dims.k_y) * dims.m_y * dims.n_y +
                            static_cast<double>(dims.k_z) * dims.m_z * dims.n_z);
        break;
    }
    return report;
}

} // namespace irsbf
