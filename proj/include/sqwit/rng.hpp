#pragma once

#include <cmath>
#include <cstdint>

namespace sqwit {

/// Counter-based generator: output depends only on (seed, stream, counter),
/// so samplers are reproducible and streams can be split freely across
/// replicas without sharing state.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(mix(stream ^ 0x9e3779b97f4a7c15ull)), counter_(0) {}

    Rng split(std::uint64_t substream) const {
        Rng r(seed_, 0);
        r.stream_ = mix(stream_ ^ mix(substream + 0x6a09e667f3bcc909ull));
        return r;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + stream_ + 0x9e3779b97f4a7c15ull * ++counter_;
        return mix(z);
    }

    /// uniform in [0,1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// uniform in (0,1) — safe for log()
    double uniform_pos() {
        double u;
        do { u = uniform(); } while (u == 0.0);
        return u;
    }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Marsaglia–Tsang for shape >= 1, boost trick for shape < 1.
    double gamma(double shape) {
        if (shape < 1.0) {
            double u = uniform_pos();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double beta(double a, double b) {
        double x = gamma(a);
        double y = gamma(b);
        return x / (x + y);
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_pos(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    long poisson(double lambda) {
        if (lambda < 30.0) {
            double l = std::exp(-lambda), p = 1.0;
            long k = 0;
            do {
                ++k;
                p *= uniform();
            } while (p > l);
            return k - 1;
        }
        // split recursively to keep the product method stable
        long m = static_cast<long>(lambda / 2.0);
        double g = gamma(static_cast<double>(m));
        if (g > lambda) return binomial_from_uniforms(m - 1, lambda / g);
        return m + poisson(lambda - g);
    }

private:
    long binomial_from_uniforms(long n, double p) {
        long c = 0;
        for (long i = 0; i < n; ++i)
            if (uniform() < p) ++c;
        return c;
    }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace sqwit
