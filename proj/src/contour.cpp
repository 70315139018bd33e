#include "sqwit/contour.hpp"

namespace sqwit {

namespace {

// torus quadrature: z_i on unit circles, uniform nodes with doubling
template <class F>
Cplx torus_integral(int dims, F&& integrand, double tol, int max_doublings = 9) {
    int n = 48;
    Cplx prev(0.0, 0.0);
    bool have_prev = false;
    for (int round = 0; round <= max_doublings; ++round, n *= 2) {
        Cplx acc(0.0, 0.0);
        std::vector<int> idx(dims, 0);
        for (;;) {
            std::vector<Cplx> zs(dims);
            for (int d = 0; d < dims; ++d) zs[d] = std::polar(1.0, 2.0 * M_PI * idx[d] / n);
            acc += integrand(zs);
            int d = 0;
            while (d < dims && ++idx[d] == n) idx[d++] = 0;
            if (d == dims) break;
        }
        acc /= std::pow(static_cast<double>(n), dims);
        if (have_prev && std::abs(acc - prev) < tol * (1.0 + std::abs(acc))) return acc;
        prev = acc;
        have_prev = true;
    }
    return prev;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

double shl_orthogonality_norm(const Signature& lam, long n_cols, int k, double q, double s) {
    // matches the lattice normalization of shl_dual (see decisions on the
    // symmetrization constant)
    double value = std::pow(1.0 - q, k) / q_pochhammer(q, q, k - static_cast<long>(lam.positive_parts()));
    for (long val = 1; val < n_cols; ++val) {
        long m = lam.multiplicity(val);
        value *= q_pochhammer(s * s, q, m) / q_pochhammer(q, q, m);
    }
    value /= q_pochhammer(q, q, lam.multiplicity(n_cols));
    return value;
}

OrthogonalityReport check_shl_orthogonality(const Signature& lam, const Signature& mu, int k,
                                            long n_cols, double q, double s) {
    if (k < 1 || k > 2) throw DomainError("check_shl_orthogonality: k <= 2 at desk scale");
    // circle radius 1 encloses 0 and q^j s (|s| < 1) and not 1/s
    auto integrand = [&](const std::vector<Cplx>& zs) {
        Cplx value(1.0, 0.0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                value *= (zs[i] - zs[j]) / (zs[i] - q * zs[j]);
            }
        std::vector<Cplx> inv(zs.size());
        for (std::size_t i = 0; i < zs.size(); ++i) inv[i] = 1.0 / zs[i];
        value *= shl_dual(Cplx(q), Cplx(s), lam, n_cols, zs);
        value *= shl_dual(Cplx(q), Cplx(s), mu, n_cols, inv);
        return value;
    };
    Cplx integral = torus_integral(k, integrand, 1e-11) / factorial(k);
    double expected = lam == mu ? shl_orthogonality_norm(lam, n_cols, k, q, s) : 0.0;
    return {integral, expected};
}

double sqw_torus_norm(const Signature& lam, double q, double s) {
    double value = 1.0;
    for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
        long gap = lam[i] - lam[i + 1];
        value *= q_pochhammer_inf(s * s, q) / q_pochhammer_inf(q, q) * q_pochhammer(q, q, gap) /
                 q_pochhammer(s * s, q, gap);
    }
    return value;
}

OrthogonalityReport explore_torus_conjecture(const Signature& lam, const Signature& mu, int n_vars,
                                             double q, double s) {
    if (n_vars < 1 || n_vars > 2) throw DomainError("explore_torus_conjecture: N <= 2 at desk scale");
    if (lam.size() != static_cast<std::size_t>(n_vars) || mu.size() != lam.size())
        throw ShapeError("explore_torus_conjecture: labels must have N parts");
    auto integrand = [&](const std::vector<Cplx>& zs) {
        Cplx weight(1.0, 0.0);
        for (int i = 0; i < n_vars; ++i)
            for (int j = 0; j < n_vars; ++j) {
                if (i == j) continue;
                Cplx zi = zs[i], zj = zs[j];
                Cplx num(1.0, 0.0), den(1.0, 0.0);
                Cplx qs(1.0, 0.0);
                // (s^2;q)_inf (z_i/z_j;q)_inf / ((-s z_i;q)_inf (-s/z_i;q)_inf)
                double qq = 1.0;
                for (int n2 = 0; n2 < 200 && qq > 1e-18; ++n2, qq *= q) {
                    num *= (1.0 - s * s * qq) * (1.0 - zi / zj * qq);
                    den *= (1.0 + s * zi * qq) * (1.0 + s / zi * qq);
                }
                weight *= num / den;
            }
        std::vector<Cplx> xs(zs.begin(), zs.end()), inv(zs.size());
        for (std::size_t i = 0; i < zs.size(); ++i) inv[i] = 1.0 / zs[i];
        Cplx value = weight * sqw(Cplx(q), Cplx(s), lam, xs) * sqw(Cplx(q), Cplx(s), mu, inv);
        return value;
    };
    Cplx integral = torus_integral(n_vars, integrand, 1e-11) / factorial(n_vars);
    double expected = lam == mu ? sqw_torus_norm(lam, q, s) : 0.0;
    return {integral, expected};
}

} // namespace sqwit
