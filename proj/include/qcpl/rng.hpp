#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace qcpl {

// SplitMix64 generator. Randomness in this library goes through this class
// rather than <random> distributions, whose output is implementation-defined;
// with a fixed seed every sequence is reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    Eigen::VectorXd gaussian_vector(int d) {
        Eigen::VectorXd v(d);
        for (int i = 0; i < d; ++i) v[i] = gaussian();
        return v;
    }

    // Uniform direction on the unit sphere of R^d.
    Eigen::VectorXd unit_vector(int d) {
        Eigen::VectorXd v = gaussian_vector(d);
        double n = v.norm();
        while (n < 1e-12) {
            v = gaussian_vector(d);
            n = v.norm();
        }
        return v / n;
    }

    // Uniform point in the unit ball of R^d.
    Eigen::VectorXd ball_point(int d) {
        Eigen::VectorXd u = unit_vector(d);
        double r = std::pow(uniform(), 1.0 / d);
        return r * u;
    }

    // Decorrelated substream for (seed, index) pairs. Grid experiments seed one
    // stream per cell so results do not depend on execution order.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next_u64();
        return Rng(mix.next_u64());
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace qcpl
