#include "sqwit/spin_whittaker.hpp"

#include <numeric>

#include "sqwit/qseries.hpp"

namespace sqwit {

namespace {

double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

} // namespace

double a_kernel(double S, double X, double u, double v, double z) {
    if (!(1.0 <= u && u < v && v < z)) throw DomainError("a_kernel: need 1 <= u < v < z");
    if (!(std::fabs(X) < S)) throw DomainError("a_kernel: need |X| < S");
    return std::pow(1.0 - v / z, S - X - 1.0) * std::pow(1.0 - u / v, S + X - 1.0) *
           std::pow(1.0 - u / z, 1.0 - 2.0 * S) / beta_fn(S + X, S - X);
}

double spin_whittaker_two(double S, double X, double Y, double u, double z) {
    if (!(1.0 <= u && u <= z)) throw DomainError("spin_whittaker_two: point outside the chamber");
    return std::pow(z / u, S) * std::pow(u, -X - Y) *
           gauss_2f1<double>(S + X, S + Y, 2.0 * S, 1.0 - z / u);
}

namespace {

// one recursion layer: in each slot v_i ranges over (L_{i+1}, L_i) with the
// Jacobi substitution v = u + (z-u) t; the layer prefactor collapses to
// z^{S+X}/B(S+X, S-X) per slot.
double sw_recursive(double S, const std::vector<double>& Xs, std::size_t n,
                    const std::vector<double>& L, int nodes) {
    if (n == 1) return std::pow(L[0], -Xs[0]);
    if (n == 2) return spin_whittaker_two(S, Xs[0], Xs[1], L[1], L[0]);
    const double X = Xs[n - 1];
    JacobiRule rule = gauss_jacobi_01(nodes, S - X - 1.0, S + X - 1.0);
    const double b = beta_fn(S + X, S - X);
    double prefactor = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) prefactor *= std::pow(L[i], S + X) / b;
    for (std::size_t i = 0; i < n; ++i) prefactor *= std::pow(L[i], -X);

    std::vector<double> v(n - 1);
    double total = 0.0;
    std::function<double(std::size_t)> sweep = [&](std::size_t slot) -> double {
        if (slot == n - 1) {
            double inner = sw_recursive(S, Xs, n - 1, v, nodes);
            for (std::size_t i = 0; i < n - 1; ++i) inner *= std::pow(v[i], -S);
            return inner;
        }
        double z = L[slot], u = L[slot + 1];
        double acc = 0.0;
        for (int t = 0; t < nodes; ++t) {
            v[slot] = u + (z - u) * rule.nodes[t];
            acc += rule.weights[t] * sweep(slot + 1);
        }
        return acc;
    };
    total = sweep(0);
    return prefactor * total;
}

} // namespace

double spin_whittaker_quadrature_n2(double S, double X, double Y, double u, double z, int nodes) {
    // one Gauss-Jacobi layer over f_{X}; used to cross-check the closed form
    JacobiRule rule = gauss_jacobi_01(nodes, S - Y - 1.0, S + Y - 1.0);
    double prefactor = std::pow(z, S + Y) / beta_fn(S + Y, S - Y) * std::pow(u * z, -Y);
    double acc = 0.0;
    for (int t = 0; t < nodes; ++t) {
        double v = u + (z - u) * rule.nodes[t];
        acc += rule.weights[t] * std::pow(v, -S) * std::pow(v, -X);
    }
    return prefactor * acc;
}

double spin_whittaker(const SpinParams& p, const ChamberPoint& L, int nodes) {
    if (p.X.size() != L.size()) throw ShapeError("spin_whittaker: N mismatch");
    if (L.size() == 0) return 1.0;
    if (L.size() > 4) throw DomainError("spin_whittaker: N <= 4 at desk scale");
    return sw_recursive(p.S, p.X, p.X.size(), L.values, nodes);
}

double spin_whittaker_dual_branch(double S, double Y, const std::vector<double>& lt,
                                  const std::vector<double>& l) {
    if (!(std::fabs(Y) < S)) throw DomainError("spin_whittaker_dual_branch: need |Y| < S");
    std::vector<double> tilde = lt;
    if (tilde.size() + 1 == l.size()) tilde.push_back(1.0);
    if (tilde.size() != l.size()) throw ShapeError("spin_whittaker_dual_branch: size mismatch");
    const std::size_t k = l.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (l[i] < tilde[i]) return 0.0;
        if (i + 1 < k && tilde[i] < l[i + 1]) return 0.0;
    }
    double ratio = 1.0;
    for (std::size_t i = 0; i < k; ++i) ratio *= tilde[i] / l[i];
    double value = std::pow(ratio, Y) / std::tgamma(S - Y);
    value *= std::pow(1.0 - tilde[0] / l[0], S - Y - 1.0);
    for (std::size_t i = 1; i < k; ++i)
        value *= a_kernel(S, -Y, tilde[i], l[i], tilde[i - 1]);
    return value;
}

double sw_skew_cauchy_n1_lhs(double S, double X, double Y, double lt, int nodes) {
    // substitute w = lt/L in int_{lt}^inf L^{-X} g_Y(lt; L) dL/L
    JacobiRule rule = gauss_jacobi_01(nodes, S - Y - 1.0, X + Y - 1.0);
    double acc = 0.0;
    for (int t = 0; t < nodes; ++t) acc += rule.weights[t];
    return acc * std::pow(lt, -X) / std::tgamma(S - Y);
}

double sw_full_cauchy_rhs(double S, const std::vector<double>& Xs, const std::vector<double>& Ys) {
    double value = 1.0;
    for (double y : Ys) {
        value *= std::tgamma(Xs[0] + y) / std::tgamma(S + Xs[0]);
        for (std::size_t i = 1; i < Xs.size(); ++i)
            value *= std::tgamma(Xs[i] + y) * std::tgamma(2.0 * S) /
                     (std::tgamma(S + Xs[i]) * std::tgamma(S + y));
    }
    return value;
}

namespace {

// g_{Y}(L) for a single coordinate, the M = N = 1 branching closed form
double g_one(double S, double Y, double L) {
    return std::pow(L, -Y) * std::pow(1.0 - 1.0 / L, S - Y - 1.0) / std::tgamma(S - Y);
}

double sw_full_cauchy_11(double S, double X, double Y, int nodes) {
    JacobiRule rule = gauss_jacobi_01(nodes, S - Y - 1.0, X + Y - 1.0);
    double acc = 0.0;
    for (int t = 0; t < nodes; ++t) acc += rule.weights[t];
    return acc / std::tgamma(S - Y);
}

double sw_full_cauchy_12(double S, double X, double Y1, double Y2, int nodes) {
    // outer over Lt (the M-recursion intermediate), inner over L >= Lt:
    //   int g_{Y1}(Lt) [ int L^{-X} g_{Y2}(Lt; L) dL/L ] dLt/Lt
    // inner via w = Lt/L, outer via wt = 1/Lt
    JacobiRule inner = gauss_jacobi_01(nodes, S - Y2 - 1.0, X + Y2 - 1.0);
    double inner_sum = 0.0;
    for (int t = 0; t < nodes; ++t) inner_sum += inner.weights[t];
    inner_sum /= std::tgamma(S - Y2);
    JacobiRule outer = gauss_jacobi_01(nodes, S - Y1 - 1.0, X + Y1 - 1.0);
    double outer_sum = 0.0;
    for (int t = 0; t < nodes; ++t) outer_sum += outer.weights[t];
    outer_sum /= std::tgamma(S - Y1);
    return inner_sum * outer_sum;
}

double sw_full_cauchy_22(double S, double X1, double X2, double Y1, double Y2, int nodes) {
    // Collapsing every power of the inner variable, the integrand over
    // (l21, l22, Lt) with 1 <= l22 <= Lt <= l21 reads
    //   f2(l22, l21) (Lt-1)^{-S-Y1} (l21-Lt)^{S-Y2-1} (Lt-l22)^{S+Y2-1}
    //     (1-1/l22)^{S-Y2-1} l21^{-(S-Y2-1)} (l21 l22)^{-Y2} / (l21 l22)
    //     / (Gamma(S-Y1) Gamma(S-Y2) B(S-Y2, S+Y2)).
    // Integrating in the order Lt (outermost), l22 = 1 + (Lt-1) sigma,
    // l21 = Lt/w1 gives Jacobi-matched endpoints in every variable.
    const double K = 1.0 / (std::tgamma(S - Y1) * std::tgamma(S - Y2) * beta_fn(S - Y2, S + Y2));
    const double xmin = std::min(X1, X2);
    JacobiRule outer = gauss_jacobi_01(nodes, 2.0 * S - Y1 - Y2 - 1.0, X1 + X2 + Y1 + Y2 - 1.0);
    JacobiRule middle = gauss_jacobi_01(nodes, S + Y2 - 1.0, S - Y2 - 1.0);
    JacobiRule inner = gauss_jacobi_01(nodes, S - Y2 - 1.0, xmin + Y2 - 1.0);
    double total = 0.0;
    for (int a = 0; a < nodes; ++a) {
        double wt = outer.nodes[a];
        double lt = 1.0 / wt;
        // strip the outer rule's weight: the true integrand carries the
        // composite factors reconstructed inside
        double acc_mid = 0.0;
        for (int b = 0; b < nodes; ++b) {
            double sigma = middle.nodes[b];
            double l22 = 1.0 + (lt - 1.0) * sigma;
            double acc_in = 0.0;
            for (int c = 0; c < nodes; ++c) {
                double w1 = inner.nodes[c];
                double l21 = lt / w1;
                double f = spin_whittaker_two(S, X1, X2, l22, l21);
                double smooth = f * std::pow(l21, -(S - Y2 - 1.0)) *
                                std::pow(l21 * l22, -Y2) / (l21 * l22);
                // (l21 - lt)^{S-Y2-1} = (lt (1-w1)/w1)^{S-Y2-1}: the (1-w1)
                // part sits in the rule, keep the rest
                smooth *= std::pow(lt / w1, S - Y2 - 1.0);
                // strip the heuristic decay weight and add the Jacobian
                // dl21 = lt dw1 / w1^2
                smooth *= std::pow(w1, -(xmin + Y2 - 1.0)) * lt / (w1 * w1);
                acc_in += inner.weights[c] * smooth;
            }
            // (Tt - l22)^{S+Y2-1} = ((lt-1)(1-sigma))^{S+Y2-1}: (1-sigma) in rule
            // (1 - 1/l22)^{S-Y2-1} = ((lt-1) sigma / l22)^{S-Y2-1}: sigma in rule
            double mid_smooth = std::pow(lt - 1.0, S + Y2 - 1.0) *
                                std::pow((lt - 1.0) / l22, S - Y2 - 1.0) * (lt - 1.0);
            acc_mid += middle.weights[b] * acc_in * mid_smooth;
        }
        // outer factors: (lt-1)^{-S-Y1}, Jacobian dLt = dwt/wt^2, and the
        // stripped rule weights (1-wt)^{2S-Y1-Y2-1} wt^{X1+X2+Y1+Y2-1}
        double out_smooth = std::pow(lt - 1.0, -S - Y1) / (wt * wt);
        out_smooth /= std::pow(1.0 - wt, 2.0 * S - Y1 - Y2 - 1.0) *
                      std::pow(wt, X1 + X2 + Y1 + Y2 - 1.0);
        total += outer.weights[a] * acc_mid * out_smooth;
    }
    return K * total;
}

} // namespace

double sw_full_cauchy_lhs(double S, const std::vector<double>& Xs, const std::vector<double>& Ys,
                          int nodes) {
    for (double x : Xs)
        for (double y : Ys)
            if (!(x + y > 0.0)) throw DomainError("sw_full_cauchy: need X_i + Y_j > 0");
    if (Xs.size() == 1 && Ys.size() == 1) return sw_full_cauchy_11(S, Xs[0], Ys[0], nodes);
    if (Xs.size() == 1 && Ys.size() == 2) return sw_full_cauchy_12(S, Xs[0], Ys[0], Ys[1], nodes);
    if (Xs.size() == 2 && Ys.size() == 2)
        return sw_full_cauchy_22(S, Xs[0], Xs[1], Ys[0], Ys[1], nodes);
    throw DomainError("sw_full_cauchy: (N, M) not in {(1,1), (1,2), (2,2)}");
}

double sw_quasi_cauchy_n2_lhs(double S, double X1, double X2, int nodes) {
    // int_{L>=1} f_{X1,X2}(1, L) (1-1/L)^{2S-1} dL/L^{1+S} with w = 1/L;
    // f2(1, 1/w) ~ w^{min(X1,X2)} at w -> 0, folded into the rule weight
    double xmin = std::min(X1, X2);
    JacobiRule rule = gauss_jacobi_01(nodes, 2.0 * S - 1.0, S - 1.0 + xmin);
    double total = 0.0;
    for (int t = 0; t < nodes; ++t) {
        double w = rule.nodes[t];
        total += rule.weights[t] * spin_whittaker_two(S, X1, X2, 1.0, 1.0 / w) * std::pow(w, -xmin);
    }
    return total;
}

double apply_sw_shift(const std::function<double(const std::vector<double>&)>& f,
                      const std::vector<double>& Xs, double S, bool bar) {
    for (std::size_t i = 0; i < Xs.size(); ++i)
        for (std::size_t j = i + 1; j < Xs.size(); ++j)
            if (Xs[i] == Xs[j]) throw SingularInput("apply_sw_shift: coincident X");
    double total = 0.0;
    for (std::size_t i = 0; i < Xs.size(); ++i) {
        double shifted = Xs[i] + (bar ? -1.0 : 1.0);
        if (!(std::fabs(shifted) < S))
            throw DomainError("apply_sw_shift: shifted index leaves |X| < S");
        double coeff = 1.0;
        for (std::size_t j = 0; j < Xs.size(); ++j) {
            if (j == i) continue;
            coeff *= (Xs[i] + (bar ? -S : S)) / (Xs[i] - Xs[j]);
        }
        std::vector<double> moved = Xs;
        moved[i] = shifted;
        total += coeff * f(moved);
    }
    return total;
}

namespace {

std::vector<double> chamber_from_u(double S, const std::vector<double>& u) {
    const int n = static_cast<int>(u.size());
    std::vector<double> L(n);
    for (int i = 1; i <= n; ++i) L[i - 1] = std::pow(S, n + 1 - 2 * i) * std::exp(u[i - 1]);
    return L;
}

} // namespace

TodaReport toda_residual(const SpinParams& p, const std::vector<double>& u, double h, int nodes) {
    const int n = static_cast<int>(u.size());
    auto eval = [&](const std::vector<double>& uu) {
        std::vector<double> L = chamber_from_u(p.S, uu);
        for (int i = 0; i + 1 < n; ++i)
            if (!(L[i] > L[i + 1])) throw DomainError("toda_residual: stencil leaves the chamber");
        if (!(L[n - 1] > 1.0)) throw DomainError("toda_residual: stencil leaves the chamber");
        return spin_whittaker(p, ChamberPoint(L), nodes);
    };
    auto op_residuals = [&](double step) {
        std::vector<double> uu = u;
        double f0 = eval(uu);
        std::vector<double> d1(n), d2(n);
        for (int i = 0; i < n; ++i) {
            uu[i] = u[i] + step;
            double fp = eval(uu);
            uu[i] = u[i] - step;
            double fm = eval(uu);
            uu[i] = u[i];
            d1[i] = (fp - fm) / (2.0 * step);
            d2[i] = (fp - 2.0 * f0 + fm) / (step * step);
        }
        double h1 = std::accumulate(d1.begin(), d1.end(), 0.0);
        double h2 = 0.0;
        for (int i = 0; i < n; ++i) h2 -= 0.5 * d2[i];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                // mixed derivative by the 4-point stencil
                std::vector<double> us = u;
                us[i] += step; us[j] += step;
                double fpp = eval(us);
                us[j] = u[j] - step;
                double fpm = eval(us);
                us[i] = u[i] - step; us[j] = u[j] + step;
                double fmp = eval(us);
                us[j] = u[j] - step;
                double fmm = eval(us);
                double dij = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
                double coupling = std::pow(p.S, -2.0 * (j - i)) * std::exp(u[j] - u[i]);
                h2 += coupling * (p.S * p.S * f0 + p.S * (d1[j] - d1[i]) - dij);
            }
        return std::tuple<double, double, double>{h1, h2, f0};
    };
    auto [h1a, h2a, f0] = op_residuals(h);
    auto [h1b, h2b, f0b] = op_residuals(h / 2.0);
    (void)f0b;
    double h1 = (4.0 * h1b - h1a) / 3.0;
    double h2 = (4.0 * h2b - h2a) / 3.0;
    double sum_x = std::accumulate(p.X.begin(), p.X.end(), 0.0);
    double sum_x2 = 0.0;
    for (double x : p.X) sum_x2 += x * x;
    TodaReport rep;
    rep.h1_residual = std::fabs(h1 + sum_x * f0) / std::fabs(f0);
    rep.h2_residual = std::fabs(h2 + 0.5 * sum_x2 * f0) / std::fabs(f0);
    return rep;
}

std::vector<TodaCoefficient> deformed_toda_coefficients(int n) {
    std::vector<TodaCoefficient> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back({i, j, 0, 2 - 2 * (j - i)});
            out.push_back({i, j, 1, 1 - 2 * (j - i)});
            out.push_back({i, j, 2, -2 * (j - i)});
        }
    return out;
}

PieriScalingReport verify_pieri_to_toda_scaling(int n, double S,
                                                const std::vector<double>& u_point,
                                                const std::vector<double>& eps_grid) {
    PieriScalingReport rep;
    std::vector<double> c = {0.37, -0.21, 0.11, 0.05};
    c.resize(n);
    for (double eps : eps_grid) {
        double q = std::exp(-eps);
        double s = -std::exp(-eps * S);
        std::vector<long> lam(n);
        std::vector<double> u_lattice(n);
        for (int i = 1; i <= n; ++i) {
            double target = (u_point[i - 1] + (n + 1 - 2 * i) * std::log(S)) / eps;
            lam[i - 1] = std::lround(target);
            if (lam[i - 1] < 0) throw DomainError("pieri scaling: lattice point below zero");
            u_lattice[i - 1] = eps * lam[i - 1] - (n + 1 - 2 * i) * std::log(S);
        }
        Signature mu(lam);
        LabelFun<double> F = [&](const Signature& sig) {
            double acc = 0.0;
            for (int i = 1; i <= n; ++i)
                acc += c[i - 1] * (eps * sig[i - 1] - (n + 1 - 2 * i) * std::log(S));
            return std::exp(acc);
        };
        double lhs = (refined_pieri_h1(F, mu, q, s) - n * F(mu)) / eps;
        double rhs = 0.0;
        for (int i = 0; i < n; ++i) rhs += c[i];
        rhs *= F(mu);
        rep.eps.push_back(eps);
        rep.h1_error.push_back(std::fabs(lhs - rhs) / std::fabs(F(mu)));
    }
    return rep;
}

TriangularReport verify_triangular_sums(int n, Rng& rng) {
    // a_{k,l} with a_{0,l} = a_{k,N+1} = 0, a_{k,k} = 1, random otherwise
    std::vector<std::vector<Rational>> a(n + 2, std::vector<Rational>(n + 2, rat(0)));
    auto rnd = [&]() { return rat(static_cast<long>(rng.next_u64() % 2000) - 1000, 997); };
    for (int k = 1; k <= n; ++k)
        for (int l = k; l <= n; ++l) a[k][l] = k == l ? rat(1) : rnd();
    std::vector<Rational> b(n + 1);
    for (int i = 1; i <= n; ++i) b[i] = rnd();

    auto A = [&](int k, int l) -> Rational {
        if (k < 0 || l < 0 || k > n + 1 || l > n + 1) return rat(0);
        if (k == 0 || l == n + 1) return rat(0);
        if (k == l) return rat(1);
        if (k > l) return rat(0);
        return a[k][l];
    };

    Rational s1(0), s2(0), s3(0), s4(0), s5(0), s6(0);
    for (int k = 0; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            Rational d1 = A(k + 1, l) - A(k, l) - A(k + 1, l + 1) + A(k, l + 1);
            Rational d2 = Rational((l - k + 1) * (A(k + 1, l + 1) - A(k, l + 1)) -
                                   (l - k - 1) * (A(k + 1, l) - A(k, l)));
            Rational bsum(0), bsq(0);
            for (int al = k + 1; al <= l; ++al) bsum += b[al];
            for (int al = k + 1; al <= l; ++al)
                for (int be = k + 1; be <= l; ++be) bsq += b[al] * b[be];
            s1 += d1;
            s2 += d2;
            s3 += d1 * bsum;
            s4 += Rational((l - k - 1) * (l - k - 1) * (A(k + 1, l) - A(k, l)) -
                           (l - k + 1) * (l - k + 1) * (A(k + 1, l + 1) - A(k, l + 1)));
            s5 += d1 * bsq;
            s6 += d2 * bsum;
        }
    Rational off_diag(0), r1(0), r3(0), r4(0), r5(0), r6(0);
    for (int j = 1; j <= n - 1; ++j) off_diag += A(j, j + 1);
    r1 = Rational(Rational(n) - off_diag);
    for (int al = 1; al <= n; ++al) r3 += b[al];
    Rational r2 = off_diag;
    r4 = -off_diag;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) r4 -= rat(2) * A(k, l);
    for (int al = 1; al <= n; ++al) r5 += b[al] * b[al];
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            r5 += rat(2) * A(k, l) * b[k] * b[l];
            r6 += A(k, l) * (b[k] - b[l]);
        }
    TriangularReport rep{true, 0};
    auto check = [&](int idx, const Rational& lhs, const Rational& rhs) {
        if (rep.all_hold && lhs != rhs) {
            rep.all_hold = false;
            rep.first_failure = idx;
        }
    };
    check(1, s1, r1);
    check(2, s2, r2);
    check(3, s3, r3);
    check(4, s4, r4);
    check(5, s5, r5);
    check(6, s6, r6);
    return rep;
}

double delta_q(double q, double l3, double l2, double l1) {
    if (!(l3 <= l2 && l2 <= l1)) throw DomainError("delta_q: need l3 <= l2 <= l1");
    auto level = [&](double l) { return std::floor(std::log(l) / -std::log(q)); };
    double n3 = level(l3), n2 = level(l2), n1 = level(l1);
    if (n3 < n2 && n2 < n1) return -std::log(q);
    if (n3 < n2 && n2 == n1) return std::log(std::pow(q, n1) * l1);
    if (n3 == n2 && n2 < n1) return -std::log(std::pow(q, n3 + 1) * l3);
    return std::log(l1 / l3);
}

double sw_prelimit_n1(double q, double X, double L) {
    double lam = std::floor(std::log(L) / -std::log(q));
    return std::pow(q, X * lam);
}

double sw_prelimit_n2(double q, double S, double X1, double X2, double L1, double L2) {
    auto level = [&](double l) { return static_cast<long>(std::floor(std::log(l) / -std::log(q))); };
    Signature lam{std::max(level(L1), level(L2)), std::min(level(L1), level(L2))};
    double s = -std::pow(q, S);
    return sqw<double>(q, s, lam, {std::pow(q, X1), std::pow(q, X2)});
}

double a_kernel_prelimit(double q, double S, double X, double l3, double l2, double l1) {
    auto level = [&](double l) { return static_cast<long>(std::floor(std::log(l) / -std::log(q))); };
    long n1 = level(l1), n2 = level(l2), n3 = level(l3);
    double value = 1.0 / delta_q(q, l3, l2, l1);
    value *= q_pochhammer(std::pow(q, S - X), q, n1 - n2) / q_pochhammer(q, q, n1 - n2);
    value *= q_pochhammer(std::pow(q, S + X), q, n2 - n3) / q_pochhammer(q, q, n2 - n3);
    value *= q_pochhammer(q, q, n1 - n3) / q_pochhammer(std::pow(q, 2.0 * S), q, n1 - n3);
    return value;
}

} // namespace sqwit
