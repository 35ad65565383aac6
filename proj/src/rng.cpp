#include "irsbf/rng.hpp"

#include <cmath>
#include <numbers>

namespace irsbf {

std::uint64_t Rng::mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return Rng(mix(mix(seed) ^ mix(stream * 0x9E3779B97F4A7C15ull + index)));
}

double Rng::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::complex<double> Rng::cgaussian() {
    // Polar form: |z|^2 ~ Exp(1), phase uniform. The +1 keeps the log argument
    // strictly positive.
    const double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

} // namespace irsbf
