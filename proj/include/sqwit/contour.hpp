#pragma once

#include <complex>
#include <functional>

#include "sqwit/symfunc.hpp"

namespace sqwit {

using Cplx = std::complex<double>;

struct ContourSpec {
    Cplx center;
    double radius;
};

/// (1/2pi i) * contour integral over a positively oriented circle, trapezoid
/// rule with node doubling until two refinements agree.
inline Cplx contour_integral(const std::function<Cplx(Cplx)>& f, const ContourSpec& spec,
                             double tol = 1e-12, int max_doublings = 14) {
    if (!(spec.radius > 0)) throw ContourError("contour_integral: radius must be positive");
    int n = 64;
    Cplx prev(0.0, 0.0);
    bool have_prev = false;
    for (int round = 0; round <= max_doublings; ++round, n *= 2) {
        Cplx acc(0.0, 0.0);
        for (int k = 0; k < n; ++k) {
            double theta = 2.0 * M_PI * k / n;
            Cplx offset = std::polar(spec.radius, theta);
            acc += f(spec.center + offset) * offset;
        }
        acc /= static_cast<double>(n);
        if (have_prev && std::abs(acc - prev) < tol * (1.0 + std::abs(acc))) return acc;
        prev = acc;
        have_prev = true;
    }
    return prev;
}

// --------------------------------------------------------------------------
// q-moment oracles for the stochastic vertex models (Section 6 formulas)

namespace detail {

template <class T>
T hs6v_moment_integrand_no_pole(const std::vector<T>& xs, const std::vector<T>& vs, const T& q,
                                const T& s, long i, long j, const T& z, long skip_v) {
    // integrand * z(1+sz), with the (1 + v_skip z) factor removed when
    // skip_v >= 0 (for residue extraction)
    T value(1);
    for (long a = 0; a < i; ++a) value *= xs[a] * (T(1) + s * z) / (xs[a] - z);
    for (long a = 0; a < j; ++a) {
        value *= (T(1) + q * vs[a] * z);
        if (a != skip_v) value /= (T(1) + vs[a] * z);
    }
    return value;
}

} // namespace detail

/// E q^{H_HS^{ur}(i,j)} via exact residues at z = 0 and z = -1/v_a (l = 1).
template <class T>
T qmoment_hs6v_l1(const std::vector<T>& xs, const std::vector<T>& vs, const T& q, const T& s,
                  long i, long j) {
    if (i <= 0 || static_cast<std::size_t>(i) > xs.size() || j < 0 ||
        static_cast<std::size_t>(j) > vs.size())
        throw DomainError("qmoment_hs6v_l1: indices out of range");
    for (long a = 0; a < j; ++a)
        for (long b = a + 1; b < j; ++b)
            if (vs[a] == vs[b]) throw SingularInput("qmoment_hs6v_l1: coincident v parameters");
    // residue at z = 0 of integrand/(z(1+sz)) is the no-pole part at z = 0
    T total = detail::hs6v_moment_integrand_no_pole(xs, vs, q, s, i, j, T(0), -1);
    for (long b = 0; b < j; ++b) {
        T z = T(-1) / vs[b];
        T rest = detail::hs6v_moment_integrand_no_pole(xs, vs, q, s, i, j, z, b);
        // Res = rest * (1 + q v_b z) ... the q-factor is already inside rest;
        // d/dz (1 + v_b z) = v_b, and the 1/(z(1+sz)) factor evaluates at z
        total += rest / (z * (T(1) + s * z) * vs[b]);
    }
    return total;
}

/// E q^{H_qHahn^{ur}(i,j)} via exact residues at w = -s x_a (l = 1).
template <class T>
T qmoment_qhahn_l1(const std::vector<T>& xs, const std::vector<T>& ys, const T& q, const T& s,
                   long i, long j) {
    if (i <= 0 || static_cast<std::size_t>(i) > xs.size() || j < 0 ||
        static_cast<std::size_t>(j) > ys.size())
        throw DomainError("qmoment_qhahn_l1: indices out of range");
    for (long a = 0; a < i; ++a)
        for (long b = a + 1; b < i; ++b)
            if (xs[a] == xs[b]) throw SingularInput("qmoment_qhahn_l1: coincident x parameters");
    T total(0);
    for (long b = 0; b < i; ++b) {
        T w = -s * xs[b];
        T value = T(1) / (w * (T(1) - w));
        for (long a = 0; a < i; ++a) {
            value *= (T(1) - w);
            if (a != b) value /= (T(1) + w / (s * xs[a]));
        }
        for (long a = 0; a < j; ++a) value *= (T(1) + w * ys[a] / s) / (T(1) - w);
        // 1 + w/(s x_b) = (w + s x_b)/(s x_b): residue brings a factor s x_b
        total += value * (s * xs[b]);
    }
    return -total;
}

/// Same moments through adaptive circle quadrature (cross-check of the
/// residue path). The contour encircles -s x_a and excludes 0 and 1.
inline double qmoment_qhahn_l1_quadrature(const std::vector<double>& xs,
                                          const std::vector<double>& ys, double q, double s,
                                          long i, long j) {
    double lo = 1e300, hi = -1e300;
    for (long a = 0; a < i; ++a) {
        lo = std::min(lo, -s * xs[a]);
        hi = std::max(hi, -s * xs[a]);
    }
    double center = 0.5 * (lo + hi);
    double radius = 0.5 * (hi - lo) + 0.3 * std::min(center, 1.0 - hi);
    if (!(radius > 0) || center - radius <= 0.0 || center + radius >= 1.0)
        throw ContourError("qmoment_qhahn_l1_quadrature: cannot nest the contour");
    auto f = [&](Cplx w) {
        Cplx value = 1.0 / (w * (1.0 - w));
        for (long a = 0; a < i; ++a) value *= (1.0 - w) / (1.0 + w / (s * xs[a]));
        for (long a = 0; a < j; ++a) value *= (1.0 + w * ys[a] / s) / (1.0 - w);
        return value;
    };
    return -contour_integral(f, {Cplx(center, 0.0), radius}).real();
}

/// l = 2 joint q-moment E q^{H(i1,j)+H(i2,j)} for the q-Hahn model via
/// nested circle quadrature (q-nested contours around -s x_a).
inline double qmoment_qhahn_l2_quadrature(const std::vector<double>& xs,
                                          const std::vector<double>& ys, double q, double s,
                                          long i1, long i2, long j) {
    if (i1 < i2) throw DomainError("qmoment_qhahn_l2_quadrature: need i1 >= i2");
    double lo = 1e300, hi = -1e300;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        lo = std::min(lo, -s * xs[a]);
        hi = std::max(hi, -s * xs[a]);
    }
    double center = 0.5 * (lo + hi);
    // q-nesting: q*gamma_2 (circle with center q c, radius q r2) must sit
    // inside gamma_1, i.e. (1-q) c + q r2 < r1; both circles exclude 0 and 1
    double r1 = 0.5 * (hi - lo) + 0.5 * std::min(center, 1.0 - hi);
    double r2 = 0.5 * (hi - lo) + 0.125 * std::min(center, 1.0 - hi);
    if ((1.0 - q) * center + q * r2 >= r1 || center - r1 <= 0.0 || center + r1 >= 1.0)
        throw ContourError("qmoment_qhahn_l2_quadrature: q-nesting failed for these parameters");
    auto factor = [&](Cplx w, long ik) {
        Cplx value = 1.0 / (w * (1.0 - w));
        for (long a = 0; a < ik; ++a) value *= (1.0 - w) / (1.0 + w / (s * xs[a]));
        for (long a = 0; a < j; ++a) value *= (1.0 + w * ys[a] / s) / (1.0 - w);
        return value;
    };
    auto outer = [&](Cplx w1) {
        auto inner = [&](Cplx w2) {
            return (w1 - w2) / (w1 - q * w2) * factor(w1, i1) * factor(w2, i2);
        };
        return contour_integral(inner, {Cplx(center, 0.0), r2}, 1e-11);
    };
    Cplx total = contour_integral(outer, {Cplx(center, 0.0), r1}, 1e-11);
    return (q * total).real();
}

// --------------------------------------------------------------------------
// torus integrals

struct OrthogonalityReport {
    Cplx integral;
    double expected;
    double residual() const { return std::abs(integral - expected); }
};

/// Prop-style sHL orthogonality on k-fold circles of radius 1:
///   (1/k!) (prod dz_i/(2pi i z_i)) prod_{i != j} (z_i - z_j)/(z_i - q z_j)
///     F*_lambda(z) F*_mu(1/z)  =  C(lambda) 1_{lambda = mu}.
/// k <= 2 at desk scale.
OrthogonalityReport check_shl_orthogonality(const Signature& lam, const Signature& mu, int k,
                                            long n_cols, double q, double s);

/// Conjectural sqW torus orthogonality; informational only.
OrthogonalityReport explore_torus_conjecture(const Signature& lam, const Signature& mu, int n_vars,
                                             double q, double s);

/// norm constant C(lambda) of the sHL orthogonality at k variables
double shl_orthogonality_norm(const Signature& lam, long n_cols, int k, double q, double s);

/// conjectural norm c_lambda of the sqW torus orthogonality
double sqw_torus_norm(const Signature& lam, double q, double s);

} // namespace sqwit
