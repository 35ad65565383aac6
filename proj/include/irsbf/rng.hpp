#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace irsbf {

// Deterministic random source. Gaussian and uniform variates are generated
// from raw 64-bit draws with explicit transforms (no std::*_distribution), so
// a given seed yields the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

    // Independent substream for (seed, stream, index); used to give each
    // Monte-Carlo trial (and each noise grid point within a trial) its own
    // generator so results do not depend on scheduling or method selection.
    static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

    // Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi);

    // Circularly-symmetric complex Gaussian, unit variance (E|z|^2 = 1).
    std::complex<double> cgaussian();

private:
    static std::uint64_t mix(std::uint64_t x);

    std::mt19937_64 eng_;
};

} // namespace irsbf
