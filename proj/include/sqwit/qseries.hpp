#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "sqwit/rational.hpp"

namespace sqwit {

inline constexpr long kPochInf = -1; // sentinel for k = infinity in CLI paths

/// (a;q)_k = (1-a)(1-aq)...(1-aq^{k-1}); exact on rationals for any k,
/// including negative k via (a;q)_{-n} = 1/((a q^{-n};q)_n).
template <class T>
T q_pochhammer(const T& a, const T& q, long k) {
    if (k >= 0) {
        T result(1), aq = a;
        for (long n = 0; n < k; ++n) {
            result *= (T(1) - aq);
            aq *= q;
        }
        return result;
    }
    T shifted = a * num::pow_int(q, k); // a q^{-n}
    T denom = q_pochhammer(shifted, q, -k);
    if (denom == T(0)) throw PoleError("q_pochhammer: negative index hits a zero factor");
    return T(1) / denom;
}

/// Product (a1,...,am;q)_k of several Pochhammers at the same index.
template <class T>
T q_pochhammer(std::initializer_list<T> as, const T& q, long k) {
    T result(1);
    for (const T& a : as) result *= q_pochhammer(a, q, k);
    return result;
}

struct InfProduct {
    double value;
    double tail_bound; // bound on the relative truncation error
};

/// (a;q)_inf with a rigorous geometric tail bound folded into the metadata.
inline InfProduct q_pochhammer_inf_meta(double a, double q, double eps = 1e-17) {
    if (!(std::fabs(q) < 1.0)) throw DomainError("q_pochhammer_inf: |q| >= 1");
    double value = 1.0, aq = a;
    for (int n = 0; n < 100000; ++n) {
        if (std::fabs(aq) < 1.0) {
            // |log prod_{m>=n}(1-aq^m)| <= |aq^n| / ((1-|q|)(1-|aq^n|))
            double bound = std::fabs(aq) / ((1.0 - std::fabs(q)) * (1.0 - std::fabs(aq)));
            if (bound < eps) return {value, bound};
        }
        value *= (1.0 - aq);
        aq *= q;
    }
    throw DomainError("q_pochhammer_inf: no convergence");
}

inline double q_pochhammer_inf(double a, double q) { return q_pochhammer_inf_meta(a, q).value; }

inline double q_pochhammer_inf(std::initializer_list<double> as, double q) {
    double result = 1.0;
    for (double a : as) result *= q_pochhammer_inf(a, q);
    return result;
}

/// Gamma_q(X) = (q;q)_inf / (q^X;q)_inf * (1-q)^{1-X}, X > 0.
inline double q_gamma(double X, double q) {
    if (!(X > 0.0)) throw DomainError("q_gamma: X <= 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q_gamma: q outside (0,1)");
    return q_pochhammer_inf(q, q) / q_pochhammer_inf(std::pow(q, X), q) * std::pow(1.0 - q, 1.0 - X);
}

inline double q_beta(double X, double Y, double q) {
    return q_gamma(X, q) * q_gamma(Y, q) / q_gamma(X + Y, q);
}

namespace detail {

inline bool is_nonpositive_integer(const Rational& x, long& n) {
    if (x > 0) return false;
    if (x.get_den() != 1) return false;
    n = -static_cast<long>(x.get_num().get_si());
    return true;
}

inline bool is_nonpositive_integer(double x, long& n) {
    if (x > 0) return false;
    double r = std::round(x);
    if (std::fabs(x - r) > 1e-12) return false;
    n = static_cast<long>(-r);
    return true;
}

} // namespace detail

/// Gauss 2F1. Terminating cases (a or b a nonpositive integer) are summed
/// exactly and work on both backends; otherwise the series needs |z| < 1,
/// with z < 0 routed through the Pfaff transform z -> z/(z-1).
template <class T>
T gauss_2f1(const T& a, const T& b, const T& c, const T& z) {
    long na = 0, nb = 0;
    bool terma = detail::is_nonpositive_integer(a, na);
    bool termb = detail::is_nonpositive_integer(b, nb);
    long nc = 0;
    bool polec = detail::is_nonpositive_integer(c, nc);
    if (terma || termb) {
        long n = terma && termb ? std::min(na, nb) : (terma ? na : nb);
        if (polec && nc < n)
            throw PoleError("gauss_2f1: c a nonpositive integer above truncation");
        T sum(0), term(1);
        for (long k = 0; k <= n; ++k) {
            sum += term;
            T ck = c + T(k);
            if (ck == T(0)) throw PoleError("gauss_2f1: pole in c");
            term *= (a + T(k)) * (b + T(k)) / (ck * T(k + 1)) * z;
        }
        return sum;
    }
    if (polec) throw PoleError("gauss_2f1: c a nonpositive integer, non-terminating");
    if constexpr (num::is_exact_v<T>) {
        throw UnsupportedBackend("gauss_2f1: non-terminating series needs the float backend");
    } else {
        if (z < 0.0) {
            // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
            double w = z / (z - 1.0);
            return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, w);
        }
        if (!(z < 1.0)) throw DomainError("gauss_2f1: z >= 1 outside supported region");
        if (z > 0.8) {
            // connection at z = 1 (generic non-integer c-a-b)
            double cab = c - a - b;
            if (std::fabs(cab - std::round(cab)) > 1e-8) {
                double first = std::tgamma(c) * std::tgamma(cab) /
                               (std::tgamma(c - a) * std::tgamma(c - b)) *
                               gauss_2f1(a, b, 1.0 - cab, 1.0 - z);
                double second = std::pow(1.0 - z, cab) * std::tgamma(c) * std::tgamma(-cab) /
                                (std::tgamma(a) * std::tgamma(b)) *
                                gauss_2f1(c - a, c - b, 1.0 + cab, 1.0 - z);
                return first + second;
            }
        }
        double sum = 0.0, term = 1.0;
        for (long k = 0; k < 400000; ++k) {
            sum += term;
            term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
            if (std::fabs(term) < 1e-18 * (std::fabs(sum) + 1.0)) return sum + term;
        }
        throw DomainError("gauss_2f1: series failed to converge");
    }
}

/// Regularized terminating 4phi3:
///   sum_{j=0}^n z^j (q^{-n};q)_j/(q;q)_j (a1,a2,a3;q)_j (q^j b1, q^j b2, q^j b3;q)_{n-j}.
/// A finite sum, exact on rationals, defined for all parameter values.
template <class T>
T reg_4phi3(long n, const T& a1, const T& a2, const T& a3, const T& b1, const T& b2,
            const T& b3, const T& q, const T& z) {
    if (n < 0) throw DomainError("reg_4phi3: negative truncation index");
    T qmn = num::pow_int(q, -n);
    T sum(0);
    for (long j = 0; j <= n; ++j) {
        T qj = num::pow_int(q, j);
        T term = num::pow_int(z, j) * q_pochhammer(qmn, q, j) / q_pochhammer(q, q, j);
        term *= q_pochhammer({a1, a2, a3}, q, j);
        term *= q_pochhammer({T(qj * b1), T(qj * b2), T(qj * b3)}, q, n - j);
        sum += term;
    }
    return sum;
}

/// Unregularized terminating 4phi3 with upper parameter q^{-n}; throws if a
/// lower parameter makes a denominator vanish before the series terminates.
template <class T>
T term_4phi3(long n, const T& a1, const T& a2, const T& a3, const T& b1, const T& b2,
             const T& b3, const T& q, const T& z) {
    T qmn = num::pow_int(q, -n);
    T sum(0);
    for (long j = 0; j <= n; ++j) {
        T denom = q_pochhammer({b1, b2, b3, q}, q, j);
        if (denom == T(0)) throw PoleError("term_4phi3: lower parameter hits q^{-m}, m < n");
        sum += num::pow_int(z, j) * q_pochhammer({qmn, a1, a2, a3}, q, j) / denom;
    }
    return sum;
}

/// 2phi1 series (float), |z| < 1.
inline double phi21(double a, double b, double c, double q, double z) {
    if (!(std::fabs(z) < 1.0)) throw DomainError("phi21: |z| >= 1");
    double sum = 0.0, term = 1.0;
    for (long n = 0; n < 200000; ++n) {
        sum += term;
        double qn = std::pow(q, static_cast<double>(n));
        term *= (1.0 - a * qn) * (1.0 - b * qn) / ((1.0 - c * qn) * (1.0 - q * qn)) * z;
        if (std::fabs(term) < 1e-18 * (std::fabs(sum) + 1.0)) return sum + term;
    }
    throw DomainError("phi21: series failed to converge");
}

} // namespace sqwit
