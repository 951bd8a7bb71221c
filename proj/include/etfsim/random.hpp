#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace etfsim {

/// Seeded Gaussian source with a fully pinned-down algorithm
/// (mt19937_64 + Box-Muller), so identical seeds give bit-identical
/// streams on every platform. std::normal_distribution is not used
/// because its algorithm is implementation-defined.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in (0, 1].
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform draw in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal draw (one per call; the Box-Muller twin is discarded
    /// to keep the stream position a simple function of the call count).
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace etfsim
