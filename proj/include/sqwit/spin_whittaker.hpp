#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "sqwit/quadrature.hpp"
#include "sqwit/rng.hpp"
#include "sqwit/symfunc.hpp"

namespace sqwit {

/// Ordered chamber point L_N <= ... <= L_1, all >= 1 (stored largest first).
struct ChamberPoint {
    std::vector<double> values; // values[0] = L_{N,1} >= values[1] >= ... >= 1

    explicit ChamberPoint(std::vector<double> v) : values(std::move(v)) {
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            if (values[i] < values[i + 1]) throw DomainError("chamber point not ordered");
        if (!values.empty() && values.back() < 1.0) throw DomainError("chamber point below 1");
    }
    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

struct SpinParams {
    double S;
    std::vector<double> X;

    SpinParams(double S_, std::vector<double> X_) : S(S_), X(std::move(X_)) {
        if (!(S > 0.0)) throw DomainError("spin parameter S must be positive");
        for (double x : X)
            if (!(std::fabs(x) < S)) throw DomainError("need |X_i| < S");
    }
};

/// Beta-type interlacing kernel A_{S,X}(u,v,z), 1 <= u < v < z.
double a_kernel(double S, double X, double u, double v, double z);

/// Spin Whittaker function f_{X_1..X_N}(L); closed forms for N <= 2, nested
/// Gauss-Jacobi recursion above (N <= 4 at desk scale).
double spin_whittaker(const SpinParams& p, const ChamberPoint& L, int nodes = 48);

/// N = 2 closed form through the Gauss hypergeometric function.
double spin_whittaker_two(double S, double X, double Y, double u, double z);

/// N = 2 by explicit Gauss-Jacobi quadrature (independent of the 2F1 route).
double spin_whittaker_quadrature_n2(double S, double X, double Y, double u, double z,
                                    int nodes = 48);

/// One-variable dual branching weight g_Y(Lt; L) for equal-length interlacing
/// Lt < L (different lengths via the (1, Lt) convention).
double spin_whittaker_dual_branch(double S, double Y, const std::vector<double>& lt,
                                  const std::vector<double>& l);

/// integral of f_X(L) g_Y(Lt; L) over L > Lt in W_1 (the N = 1 skew Cauchy
/// left side), computed by quadrature
double sw_skew_cauchy_n1_lhs(double S, double X, double Y, double lt, int nodes = 64);

/// full Cauchy integral int f_X(L_N) g_{Y_1..Y_M}(L_N) dL/L for
/// (N, M) in {(1,1), (1,2), (2,2)}
double sw_full_cauchy_lhs(double S, const std::vector<double>& Xs, const std::vector<double>& Ys,
                          int nodes = 48);

/// right side of the full Cauchy identity: Gamma-ratio products
double sw_full_cauchy_rhs(double S, const std::vector<double>& Xs, const std::vector<double>& Ys);

/// restricted integral of the continuous quasi-Cauchy identity at N = 2:
///   int_{L >= 1} f_{X1,X2}(1, L) (1 - 1/L)^{2S-1} dL / L^{1+S}
double sw_quasi_cauchy_n2_lhs(double S, double X1, double X2, int nodes = 64);

/// shift operators in the index variables: D1 (forward) and D1-bar (backward)
double apply_sw_shift(const std::function<double(const std::vector<double>&)>& f,
                      const std::vector<double>& Xs, double S, bool bar);

struct TodaReport {
    double h1_residual;           // |H1 f + sum X f| / |f|
    double h2_residual;           // |H2 f + 1/2 sum X^2 f| / |f|
};

/// Finite-difference residuals of the deformed Toda eigenrelations at an
/// interior chamber point in additive coordinates (Richardson-extrapolated
/// second-order central differences).
TodaReport toda_residual(const SpinParams& p, const std::vector<double>& u, double h,
                         int nodes = 48);

/// Structural S -> infinity reduction of the deformed Hamiltonian: for each
/// pair i < j and operator piece, the exponent of S in its coefficient.
/// The limit keeps exactly the nearest-neighbor identity piece.
struct TodaCoefficient {
    int i, j;        // 1-based pair, i < j
    int piece;       // 0: Id, 1: directional derivative, 2: mixed second
    int s_exponent;  // coefficient ~ S^{s_exponent} e^{u_j - u_i}
};
std::vector<TodaCoefficient> deformed_toda_coefficients(int n);

// --------------------------------------------------------------------------
// refined Pieri operators (label-variable difference operators)

template <class T>
using LabelFun = std::function<T(const Signature&)>;

/// H_1 f(mu) = h_00 f(mu) + sum_{0<=k<l<=N} h_{k,l} f(mu + e_{k+1..l});
/// border conventions mu_0 = +inf, mu_{N+1} = -inf.
template <class T>
T refined_pieri_h1(const LabelFun<T>& f, const Signature& mu, const T& q, const T& s) {
    const long n = static_cast<long>(mu.size());
    auto qgap = [&](long a, long b) { // q^{mu_a - mu_b} with border conventions
        if (a <= 0 || b > n) return T(0);
        return num::pow_int(q, mu[a - 1] - mu[b - 1]);
    };
    T value(0);
    T h00(0);
    for (long j = 1; j < n; ++j) h00 += qgap(j, j + 1);
    value += T(-s) * h00 * f(mu);
    for (long k = 0; k < n; ++k)
        for (long l = k + 1; l <= n; ++l) {
            if (k >= 1 && mu[k - 1] == mu[k]) continue; // (1 - q^0) = 0
            std::vector<long> parts = mu.parts();
            for (long r = k; r < l; ++r) parts[r] += 1;
            T coeff = (T(1) - qgap(k, k + 1)) * num::pow_int(T(-s), l - k - 1);
            coeff *= k + 1 <= n && l <= n ? num::pow_int(q, mu[k] - mu[l - 1]) : T(1);
            if (l < n)
                coeff *= (T(1) - s * s * num::pow_int(q, mu[l - 1] - mu[l]));
            value += coeff * f(Signature(parts));
        }
    return value;
}

/// H_N = product of all shifts: f(mu + 1^N).
template <class T>
T refined_pieri_hn(const LabelFun<T>& f, const Signature& mu) {
    std::vector<long> parts = mu.parts();
    for (long& p : parts) ++p;
    return f(Signature(parts));
}

struct PieriScalingReport {
    std::vector<double> eps;
    std::vector<double> h1_error; // |(H_1 - N)/eps F - H1_toda F| at the point
};

/// (H_1 - N)/eps applied to a smooth test function under the Toda scaling;
/// the error against sum_i dF/du_i decays at first order in eps.
PieriScalingReport verify_pieri_to_toda_scaling(int n, double S,
                                                const std::vector<double>& u_point,
                                                const std::vector<double>& eps_grid);

// --------------------------------------------------------------------------
// triangular sums (the six summation identities behind the Pieri scaling)

struct TriangularReport {
    bool all_hold;
    int first_failure; // 1..6, or 0
};

TriangularReport verify_triangular_sums(int n, Rng& rng);

// --------------------------------------------------------------------------
// q -> 1 scaling bridge

/// Delta_q(l3, l2, l1): measure of the interval where floor(log_q(1/.)) is
/// constant at l2 inside [l3, l1]; the four-case formula.
double delta_q(double q, double l3, double l2, double l1);

/// rescaled one- and two-variable sqW functions under the q -> 1 scaling
double sw_prelimit_n1(double q, double X, double L);
double sw_prelimit_n2(double q, double S, double X1, double X2, double L1, double L2);

/// q-deformation of the A kernel (used as a pointwise convergence check)
double a_kernel_prelimit(double q, double S, double X, double l3, double l2, double l1);

} // namespace sqwit
