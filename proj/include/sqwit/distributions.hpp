#pragma once

#include <cmath>
#include <limits>
#include <variant>
#include <vector>

#include "sqwit/qseries.hpp"
#include "sqwit/rng.hpp"

namespace sqwit {

inline constexpr long kInfSupport = -1; // m = +infinity marker

/// q-beta-binomial weight phi_{q,mu,nu}(j | m). The mu^j (nu/mu;q)_j factor
/// is expanded as prod_{i<j}(mu - nu q^i) so that mu = 0 stays well-defined.
/// m = kInfSupport gives the infinite-support law (float backend only there).
template <class T>
T phi_qbb(const T& q, const T& mu, const T& nu, long j, long m) {
    if (j < 0) return T(0);
    if (m != kInfSupport && j > m) return T(0);
    T head(1), qi(1);
    for (long i = 0; i < j; ++i) {
        head *= (mu - nu * qi);
        qi *= q;
    }
    if (m == kInfSupport) {
        if constexpr (num::is_exact_v<T>) {
            throw UnsupportedBackend("phi_qbb: infinite support needs the float backend");
        } else {
            return head / q_pochhammer(q, q, j) * q_pochhammer_inf(mu, q) / q_pochhammer_inf(nu, q);
        }
    }
    T result = head * q_pochhammer(mu, q, m - j) / q_pochhammer(nu, q, m);
    result *= q_pochhammer(q, q, m) / (q_pochhammer(q, q, j) * q_pochhammer(q, q, m - j));
    return result;
}

/// q-hypergeometric weight psi_{q,a,b,c}(n); normalized by Heine's summation.
inline double psi_qhyp(double q, double a, double b, double c, long n) {
    if (n < 0) return 0.0;
    double z = c / (a * b);
    double value = std::pow(z, static_cast<double>(n));
    value *= q_pochhammer(a, q, n) * q_pochhammer(b, q, n);
    value /= q_pochhammer(c, q, n) * q_pochhammer(q, q, n);
    value *= q_pochhammer_inf(c, q) * q_pochhammer_inf(z, q);
    value /= q_pochhammer_inf(c / a, q) * q_pochhammer_inf(c / b, q);
    return value;
}

struct QBetaBinomial {
    double q, mu, nu;
    long m; // kInfSupport for infinite support
};
struct QHypergeometric {
    double q, a, b, c;
};
struct BetaDist {
    double m, n;
};
struct NegBinomial {
    double r, p;
};
struct NBBDist {
    double r, p, m, n;
};
struct InverseGamma {
    double alpha;
};
struct BernoulliDist {
    double p;
};

using DistSpec = std::variant<QBetaBinomial, QHypergeometric, BetaDist, NegBinomial, NBBDist,
                              InverseGamma, BernoulliDist>;

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

} // namespace detail

/// pmf for the discrete members, density for the continuous ones.
inline double dist_pmf(const DistSpec& spec, double outcome) {
    return std::visit(
        [&](const auto& d) -> double {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, QBetaBinomial>) {
                detail::require(d.mu >= 0.0 && d.mu <= 1.0 && d.nu <= d.mu, "phi: need 0<=mu<=1, nu<=mu");
                return phi_qbb<double>(d.q, d.mu, d.nu, static_cast<long>(outcome), d.m);
            } else if constexpr (std::is_same_v<D, QHypergeometric>) {
                return psi_qhyp(d.q, d.a, d.b, d.c, static_cast<long>(outcome));
            } else if constexpr (std::is_same_v<D, BetaDist>) {
                detail::require(d.m > 0.0 && d.n > 0.0, "beta: parameters must be positive");
                if (outcome <= 0.0 || outcome >= 1.0) return 0.0;
                return std::pow(outcome, d.m - 1.0) * std::pow(1.0 - outcome, d.n - 1.0) /
                       (std::tgamma(d.m) * std::tgamma(d.n) / std::tgamma(d.m + d.n));
            } else if constexpr (std::is_same_v<D, NegBinomial>) {
                detail::require(d.r > 0.0 && d.p >= 0.0 && d.p < 1.0, "negbinomial: need r>0, 0<=p<1");
                long k = static_cast<long>(outcome);
                if (k < 0) return 0.0;
                double logw = d.r * std::log(1.0 - d.p) + k * std::log(d.p) +
                              std::lgamma(k + d.r) - std::lgamma(d.r) - std::lgamma(k + 1.0);
                return d.p == 0.0 ? (k == 0 ? 1.0 : 0.0) : std::exp(logw);
            } else if constexpr (std::is_same_v<D, NBBDist>) {
                detail::require(d.r > 0.0 && d.p >= 0.0 && d.p < 1.0 && d.m > 0.0 && d.n > 0.0,
                                "nbb: parameter out of range");
                if (outcome <= 0.0 || outcome >= 1.0) return 0.0;
                double x = outcome;
                double base = std::pow(1.0 - d.p, d.r) * std::pow(x, d.m - 1.0) *
                              std::pow(1.0 - x, d.n - 1.0) /
                              (std::tgamma(d.n) * std::tgamma(d.m) / std::tgamma(d.n + d.m));
                return base * gauss_2f1<double>(d.r, d.n + d.m, d.n, d.p * (1.0 - x));
            } else if constexpr (std::is_same_v<D, InverseGamma>) {
                detail::require(d.alpha > 0.0, "inverse gamma: alpha must be positive");
                if (outcome <= 0.0) return 0.0;
                return std::pow(outcome, -1.0 - d.alpha) * std::exp(-1.0 / outcome) /
                       std::tgamma(d.alpha);
            } else {
                detail::require(d.p >= 0.0 && d.p <= 1.0, "bernoulli: p outside [0,1]");
                if (outcome == 1.0) return d.p;
                if (outcome == 0.0) return 1.0 - d.p;
                return 0.0;
            }
        },
        spec);
}

/// Inverse-CDF for the discrete laws, standard transforms for the continuous
/// ones; NBB is sampled compositionally through Beta(m, n+k), k ~ NB(r,p).
inline double dist_sample(const DistSpec& spec, Rng& rng) {
    return std::visit(
        [&](const auto& d) -> double {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, QBetaBinomial>) {
                double u = rng.uniform();
                double cum = 0.0;
                long cap = d.m == kInfSupport ? 100000 : d.m;
                for (long j = 0; j <= cap; ++j) {
                    cum += dist_pmf(spec, static_cast<double>(j));
                    if (u < cum) return static_cast<double>(j);
                }
                if (d.m != kInfSupport) return static_cast<double>(d.m);
                throw DomainError("phi sampler: cdf walk exhausted");
            } else if constexpr (std::is_same_v<D, QHypergeometric>) {
                double u = rng.uniform();
                double cum = 0.0;
                for (long n = 0; n <= 100000; ++n) {
                    cum += dist_pmf(spec, static_cast<double>(n));
                    if (u < cum) return static_cast<double>(n);
                }
                throw DomainError("psi sampler: cdf walk exhausted");
            } else if constexpr (std::is_same_v<D, BetaDist>) {
                detail::require(d.m > 0.0 && d.n > 0.0, "beta: parameters must be positive");
                return rng.beta(d.m, d.n);
            } else if constexpr (std::is_same_v<D, NegBinomial>) {
                detail::require(d.r > 0.0 && d.p >= 0.0 && d.p < 1.0, "negbinomial: need r>0, 0<=p<1");
                if (d.p == 0.0) return 0.0;
                double lambda = rng.gamma(d.r) * d.p / (1.0 - d.p);
                return static_cast<double>(rng.poisson(lambda));
            } else if constexpr (std::is_same_v<D, NBBDist>) {
                detail::require(d.r > 0.0 && d.p >= 0.0 && d.p < 1.0 && d.m > 0.0 && d.n > 0.0,
                                "nbb: parameter out of range");
                long k = static_cast<long>(dist_sample(DistSpec(NegBinomial{d.r, d.p}), rng));
                return rng.beta(d.m, d.n + static_cast<double>(k));
            } else if constexpr (std::is_same_v<D, InverseGamma>) {
                detail::require(d.alpha > 0.0, "inverse gamma: alpha must be positive");
                return 1.0 / rng.gamma(d.alpha);
            } else {
                detail::require(d.p >= 0.0 && d.p <= 1.0, "bernoulli: p outside [0,1]");
                return rng.bernoulli(d.p) ? 1.0 : 0.0;
            }
        },
        spec);
}

} // namespace sqwit
