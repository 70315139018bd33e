#pragma once

#include <map>
#include <optional>

#include "sqwit/signatures.hpp"
#include "sqwit/weights.hpp"

namespace sqwit {

// --------------------------------------------------------------------------
// spin q-Whittaker polynomials F_{lambda/mu}

/// One-variable skew polynomial; zero unless mu < lambda. Safe at x = 0.
template <class T>
T sqw_skew_one(const T& q, const T& s, const Signature& lam, const Signature& mu, const T& x) {
    if (lam.size() != mu.size() + 1) throw ShapeError("sqw_skew_one: need |lambda| = |mu| + 1");
    if (!interlaces(mu, lam)) return T(0);
    const std::size_t k = mu.size();
    T value = num::pow_int(x, lam[k]);
    T s2 = s * s;
    for (std::size_t i = 0; i < k; ++i) {
        long a = lam[i] - mu[i];
        long b = mu[i] - lam[i + 1];
        long c = lam[i] - lam[i + 1];
        value *= detail::shifted_power(x, s, q, a) / q_pochhammer(q, q, a);
        value *= q_pochhammer(T(-s * x), q, b) / q_pochhammer(q, q, b);
        value *= q_pochhammer(q, q, c) / q_pochhammer(s2, q, c);
    }
    return value;
}

/// Borodin-Wheeler variant: the product extends one more step with
/// lambda_{k+2} = mu_{k+1} = 0.
template <class T>
T sqw_bw_skew_one(const T& q, const T& s, const Signature& lam, const Signature& mu, const T& x) {
    if (lam.size() != mu.size() + 1) throw ShapeError("sqw_bw_skew_one: need |lambda| = |mu| + 1");
    if (!interlaces(mu, lam)) return T(0);
    if (x == T(0)) throw DomainError("sqw_bw_skew_one: x = 0 not supported");
    long tail = lam[lam.size() - 1];
    T factor = detail::shifted_power(x, s, q, tail) /
               (num::pow_int(x, tail) * q_pochhammer(T(s * s), q, tail));
    return factor * sqw_skew_one(q, s, lam, mu, x);
}

namespace detail {

template <class T, class OneVar>
T branch_skew(const Signature& lam, const Signature& mu, const std::vector<T>& xs, OneVar&& one,
              bool grow_by_one) {
    const std::size_t steps = xs.size();
    if (grow_by_one && lam.size() != mu.size() + steps)
        throw ShapeError("branching: variable count must match part growth");
    if (!grow_by_one && lam.size() != mu.size())
        throw ShapeError("branching: equal part counts required");
    if (!contains(mu, lam)) return T(0);
    if (steps == 0) return lam == mu ? T(1) : T(0);
    std::map<Signature, T> layer{{mu, T(1)}};
    for (std::size_t t = 0; t + 1 < steps; ++t) {
        std::map<Signature, T> next;
        for (const auto& [kappa, w] : layer) {
            std::size_t parts = grow_by_one ? kappa.size() + 1 : kappa.size();
            for (const auto& nu : enumerate_interlacers_above(kappa, parts, lam[0])) {
                if (!contains(nu, lam)) continue;
                T step = one(nu, kappa, xs[t]);
                if (step != T(0)) next[nu] += w * step;
            }
        }
        layer.swap(next);
    }
    T total(0);
    for (const auto& [kappa, w] : layer) {
        if (kappa.size() + (grow_by_one ? 1 : 0) != lam.size()) continue;
        total += w * one(lam, kappa, xs[steps - 1]);
    }
    return total;
}

} // namespace detail

/// Multi-variable skew sqW polynomial via branching; the number of variables
/// is forced to be len(lambda) - len(mu).
template <class T>
T sqw(const T& q, const T& s, const Signature& lam, const Signature& mu, const std::vector<T>& xs) {
    return detail::branch_skew(
        lam, mu, xs,
        [&](const Signature& a, const Signature& b, const T& x) { return sqw_skew_one(q, s, a, b, x); },
        /*grow_by_one=*/true);
}

template <class T>
T sqw(const T& q, const T& s, const Signature& lam, const std::vector<T>& xs) {
    return sqw(q, s, lam, Signature(), xs);
}

template <class T>
T sqw_bw(const T& q, const T& s, const Signature& lam, const Signature& mu, const std::vector<T>& xs) {
    return detail::branch_skew(
        lam, mu, xs,
        [&](const Signature& a, const Signature& b, const T& x) { return sqw_bw_skew_one(q, s, a, b, x); },
        /*grow_by_one=*/true);
}

template <class T>
T sqw_bw(const T& q, const T& s, const Signature& lam, const std::vector<T>& xs) {
    if (lam.positive_parts() > xs.size()) return T(0);
    std::vector<long> parts(xs.size(), 0);
    for (std::size_t i = 0; i < lam.positive_parts(); ++i) parts[i] = lam[i];
    return sqw_bw(q, s, Signature(std::move(parts)), Signature(), xs);
}

// --------------------------------------------------------------------------
// dual spin q-Whittaker polynomials F*_{lambda/mu}

/// One-variable skew dual polynomial; lambda, mu in Sign_N, zero unless
/// mu < lambda (equal-length interlacing).
template <class T>
T sqw_dual_skew_one(const T& q, const T& s, const Signature& lam, const Signature& mu, const T& y) {
    if (lam.size() != mu.size()) throw ShapeError("sqw_dual_skew_one: equal part counts required");
    if (lam.empty()) return T(1);
    if (!interlaces(mu, lam)) return T(0);
    const std::size_t n = lam.size();
    T value(1), s2 = s * s;
    {
        long a = lam[n - 1] - mu[n - 1];
        value *= detail::shifted_power(y, s, q, a) / q_pochhammer(q, q, a);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        long a = lam[i] - mu[i];
        long b = mu[i] - lam[i + 1];
        long c = mu[i] - mu[i + 1];
        value *= detail::shifted_power(y, s, q, a) / q_pochhammer(q, q, a);
        value *= q_pochhammer(T(-s * y), q, b) / q_pochhammer(q, q, b);
        value *= q_pochhammer(q, q, c) / q_pochhammer(s2, q, c);
    }
    return value;
}

/// Multi-variable version; any number of variables is allowed.
template <class T>
T sqw_dual(const T& q, const T& s, const Signature& lam, const Signature& mu, const std::vector<T>& ys) {
    if (ys.empty()) return lam == mu ? T(1) : T(0);
    return detail::branch_skew(
        lam, mu, ys,
        [&](const Signature& a, const Signature& b, const T& y) { return sqw_dual_skew_one(q, s, a, b, y); },
        /*grow_by_one=*/false);
}

template <class T>
T sqw_dual(const T& q, const T& s, const Signature& lam, const std::vector<T>& ys) {
    return sqw_dual(q, s, lam, Signature::zero(lam.size()), ys);
}

// --------------------------------------------------------------------------
// dual spin Hall-Littlewood functions F*_{kappa/rho}
//
// Labels kappa, rho live in Sign_M^{<=N}; the lattice has N columns of
// w* weights closed by the right wall. The one-variable configuration is
// unique: horizontal occupancies follow from the multiplicity profile.

template <class T>
T shl_dual_one(const T& q, const T& s, const Signature& kappa, const Signature& rho, long n_cols,
               const T& v) {
    if (kappa.size() != rho.size()) throw ShapeError("shl_dual_one: labels need equal part counts");
    if (!kappa.empty() && kappa[0] > n_cols) throw ShapeError("shl_dual_one: label exceeds column count");
    if (!rho.empty() && rho[0] > n_cols) throw ShapeError("shl_dual_one: label exceeds column count");
    if (n_cols == 0) return T(1); // empty lattice; labels are all-zero here
    std::vector<long> lk(n_cols + 1), mr(n_cols + 1), j(n_cols + 1);
    for (long r = 1; r <= n_cols; ++r) {
        lk[r] = kappa.multiplicity(r);
        mr[r] = rho.multiplicity(r);
    }
    // right wall: l'_N = j_{N-1} + m'_N; then j_{r-1} = j_r + l'_r - m'_r
    j[n_cols - 1] = lk[n_cols] - mr[n_cols];
    for (long r = n_cols - 1; r >= 1; --r) j[r - 1] = j[r] + lk[r] - mr[r];
    for (long r = 0; r < n_cols; ++r)
        if (j[r] < 0 || j[r] > 1) return T(0);
    T value = num::pow_int(v, j[0]);
    for (long r = 1; r < n_cols; ++r)
        value *= w_shl_bulk(q, s, v, EdgeConfig{lk[r], j[r - 1], mr[r], j[r]});
    return value;
}

namespace detail {

/// all tau with rho <= tau <= kappa coordinatewise (weakly decreasing kept)
inline std::vector<Signature> signatures_between(const Signature& rho, const Signature& kappa) {
    std::vector<Signature> out;
    std::vector<long> cur(rho.size());
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == cur.size()) {
            out.push_back(Signature(cur));
            return;
        }
        long hi = kappa[pos];
        if (pos > 0) hi = std::min(hi, cur[pos - 1]);
        for (long x = hi; x >= rho[pos]; --x) {
            cur[pos] = x;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace detail

template <class T>
T shl_dual(const T& q, const T& s, const Signature& kappa, const Signature& rho, long n_cols,
           const std::vector<T>& vs) {
    if (vs.empty()) return kappa == rho ? T(1) : T(0);
    if (vs.size() == 1) return shl_dual_one(q, s, kappa, rho, n_cols, vs[0]);
    if (!contains(rho, kappa)) return T(0);
    std::vector<T> head(vs.begin(), vs.end() - 1);
    T total(0);
    for (const auto& tau : detail::signatures_between(rho, kappa)) {
        T last = shl_dual_one(q, s, kappa, tau, n_cols, vs.back());
        if (last == T(0)) continue;
        total += shl_dual(q, s, tau, rho, n_cols, head) * last;
    }
    return total;
}

template <class T>
T shl_dual(const T& q, const T& s, const Signature& kappa, long n_cols, const std::vector<T>& vs) {
    return shl_dual(q, s, kappa, Signature::zero(kappa.size()), n_cols, vs);
}

/// Symmetrization formula: needs k = #variables >= M = #parts and pairwise
/// distinct variables.
template <class T>
T shl_dual_symmetrized(const T& q, const T& s, const Signature& kappa, long n_cols,
                       const std::vector<T>& vs) {
    const std::size_t k = vs.size();
    const std::size_t m = kappa.size();
    if (k < m) throw ShapeError("shl_dual_symmetrized: needs at least M variables");
    if (!kappa.empty() && kappa[0] > n_cols) throw ShapeError("shl_dual_symmetrized: label too large");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (vs[i] == vs[j]) throw SingularInput("shl_dual_symmetrized: coincident variables");
    const std::size_t ell = kappa.positive_parts();

    // The wall column N carries no bulk weight, so its multiplicity enters
    // the constant without the (s^2;q) conjugation factor the bulk columns
    // get. (The source text writes the product up to N; that normalization
    // disagrees with the lattice definition exactly by (s^2;q)_{m_N}.)
    T prefactor = num::pow_int(T(T(1) - q), static_cast<long>(k)) /
                  q_pochhammer(q, q, static_cast<long>(k - ell));
    for (long val = 1; val < n_cols; ++val) {
        long mult = kappa.multiplicity(val);
        prefactor *= q_pochhammer(T(s * s), q, mult) / q_pochhammer(q, q, mult);
    }
    prefactor /= q_pochhammer(q, q, kappa.multiplicity(n_cols));

    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    T sum(0);
    do {
        T term(1);
        for (std::size_t i = 0; i < k && term != T(0); ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                term *= (vs[perm[i]] - q * vs[perm[j]]) / (vs[perm[i]] - vs[perm[j]]);
        for (std::size_t i = 0; i < ell; ++i) {
            const T& v = vs[perm[i]];
            T denom = T(1) - s * v;
            if (denom == T(0)) throw PoleError("shl_dual_symmetrized: sv = 1");
            term *= v * num::pow_int(T((v - s) / denom), kappa[i] - 1);
            if (kappa[i] < n_cols) term /= denom;
        }
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return prefactor * sum;
}

// --------------------------------------------------------------------------
// q-Whittaker oracle: t = 0 Macdonald branching through q-binomials,
// independent of the sqW weight route.

template <class T>
T q_binomial(const T& q, long n, long k) {
    if (k < 0 || k > n) return T(0);
    return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k));
}

template <class T>
T q_whittaker(const T& q, const Signature& lam, const std::vector<T>& xs) {
    if (lam.size() != xs.size()) throw ShapeError("q_whittaker: variable count mismatch");
    std::map<Signature, T> layer{{Signature(), T(1)}};
    for (std::size_t t = 0; t < xs.size(); ++t) {
        std::map<Signature, T> next;
        for (const auto& [mu, w] : layer) {
            for (const auto& nu : enumerate_interlacers_above(mu, mu.size() + 1, lam[0])) {
                if (!contains(nu, lam)) continue;
                T coeff = num::pow_int(xs[t], nu.weight() - mu.weight());
                for (std::size_t i = 0; i < mu.size(); ++i)
                    coeff *= q_binomial(q, nu[i] - nu[i + 1], nu[i] - mu[i]);
                if (coeff != T(0)) next[nu] += w * coeff;
            }
        }
        layer.swap(next);
    }
    auto it = layer.find(lam);
    return it == layer.end() ? T(0) : it->second;
}

// --------------------------------------------------------------------------
// Cauchy identities

template <class T>
struct IdentityReport {
    T lhs, rhs;
    T residual() const { return T(lhs - rhs); }
};

/// Skew sqW/sHL Cauchy identity (finite sums, exact):
///   sum_nu F_{nu/mu}(x) F*_{nu'/lam'}(v)
///     = (1+vx)/(1-sv) sum_kappa F_{lam/kappa}(x) F*_{mu'/kappa'}(v),
/// with mu in Sign_N^{<=M}, lam in Sign_{N+1}^{<=M}. The nu sum runs up to
/// nu_1 = lam_1 + 1: the one-row strip reaches one step past the box, and
/// those terms are needed for the identity to balance when lam_1 = M.
template <class T>
IdentityReport<T> cauchy_sqw_shl_skew(const T& q, const T& s, const Signature& mu,
                                      const Signature& lam, long box_m, const T& x, const T& v) {
    const long n = static_cast<long>(mu.size());
    const long nu_box = std::max(box_m, lam.part(0) + 1);
    auto primed = [&](const Signature& sig) { return transpose(sig, nu_box); };
    T lhs(0);
    for (const auto& nu : enumerate_boxed(n + 1, nu_box)) {
        T a = sqw_skew_one(q, s, nu, mu, x);
        if (a == T(0)) continue;
        lhs += a * shl_dual_one(q, s, primed(nu), primed(lam), n + 1, v);
    }
    T rhs(0);
    for (const auto& kappa : enumerate_boxed(n, box_m)) {
        T a = sqw_skew_one(q, s, lam, kappa, x);
        if (a == T(0)) continue;
        rhs += a * shl_dual_one(q, s, primed(mu), primed(kappa), n, v);
    }
    rhs *= (T(1) + v * x) / (T(1) - s * v);
    return {lhs, rhs};
}

/// Full sqW/sHL Cauchy identity (finite, exact):
///   sum_{lam in Sign_N^{<=M}} F_lam(x_1..x_N) F*_{lam'}(v_1..v_m)
///     = prod_j (1/(1-s v_j))^{N-1} prod_{i,j} (1 + v_j x_i).
template <class T>
IdentityReport<T> cauchy_sqw_shl_full(const T& q, const T& s, long n, long box_m,
                                      const std::vector<T>& xs, const std::vector<T>& vs) {
    T lhs(0);
    for (const auto& lam : enumerate_boxed(n, box_m)) {
        T a = sqw(q, s, lam, xs);
        if (a == T(0)) continue;
        lhs += a * shl_dual(q, s, transpose(lam, box_m), n, vs);
    }
    T rhs(1);
    for (const T& v : vs) {
        rhs *= num::pow_int(T(T(1) / (T(1) - s * v)), n - 1);
        for (const T& x : xs) rhs *= (T(1) + v * x);
    }
    return {lhs, rhs};
}

/// Skew sqW/sqW Cauchy identity, |xy| < 1 (float; infinite sum capped).
inline IdentityReport<double> cauchy_sqw_sqw_skew(double q, double s, const Signature& mu,
                                                  const Signature& lam, double x, double y, long cap) {
    const long n = static_cast<long>(mu.size());
    double lhs = 0.0;
    for (const auto& nu : enumerate_boxed(n + 1, cap)) {
        double a = sqw_skew_one(q, s, nu, mu, x);
        if (a == 0.0) continue;
        lhs += a * sqw_dual_skew_one(q, s, nu, lam, y);
    }
    double pi = q_pochhammer_inf(-s * x, q) * q_pochhammer_inf(-s * y, q) /
                (q_pochhammer_inf(s * s, q) * q_pochhammer_inf(x * y, q));
    double rhs = 0.0;
    for (const auto& kappa : enumerate_boxed(n, cap)) {
        double a = sqw_skew_one(q, s, lam, kappa, x);
        if (a == 0.0) continue;
        rhs += a * sqw_dual_skew_one(q, s, mu, kappa, y);
    }
    return {lhs, pi * rhs};
}

/// Full sqW/sqW Cauchy identity, |x_i y_j| < 1 (float; capped by |lambda|).
inline IdentityReport<double> cauchy_sqw_sqw_full(double q, double s, const std::vector<double>& xs,
                                                  const std::vector<double>& ys, long cap) {
    const long n = static_cast<long>(xs.size());
    double lhs = 0.0;
    for (const auto& lam : enumerate_by_weight(n, cap)) {
        double a = sqw(q, s, lam, xs);
        if (a == 0.0) continue;
        lhs += a * sqw_dual(q, s, lam, ys);
    }
    double rhs = 1.0;
    for (double y : ys) {
        rhs *= std::pow(q_pochhammer_inf(-s * y, q) / q_pochhammer_inf(s * s, q),
                        static_cast<double>(n - 1));
        for (double x : xs) rhs *= q_pochhammer_inf(-s * x, q) / q_pochhammer_inf(x * y, q);
    }
    return {lhs, rhs};
}

/// Quasi-Cauchy identity, |s x_i| < 1 (float; capped by lambda_1):
///   sum_{lam_N = 0} c_lam (-s)^{|lam|} F_lam(x)
///     = ((-s)^N x_1..x_N;q)_inf (s^2;q)_inf^{N-1} / prod (-s x_i;q)_inf.
inline IdentityReport<double> cauchy_quasi(double q, double s, const std::vector<double>& xs, long cap) {
    const long n = static_cast<long>(xs.size());
    double lhs = 0.0;
    for (const auto& lam : enumerate_boxed(n, cap)) {
        if (lam[lam.size() - 1] != 0) continue;
        double c = 1.0;
        for (long i = 0; i + 1 < n; ++i) {
            long gap = lam[i] - lam[i + 1];
            c *= q_pochhammer(s * s, q, gap) / q_pochhammer(q, q, gap);
        }
        lhs += c * std::pow(-s, static_cast<double>(lam.weight())) * sqw(q, s, lam, xs);
    }
    double prod_x = 1.0;
    for (double x : xs) prod_x *= x;
    double rhs = q_pochhammer_inf(std::pow(-s, static_cast<double>(n)) * prod_x, q) *
                 std::pow(q_pochhammer_inf(s * s, q), static_cast<double>(n - 1));
    for (double x : xs) rhs /= q_pochhammer_inf(-s * x, q);
    return {lhs, rhs};
}

/// First Pieri rule, |x_i y| < 1 (float; both sides capped):
///   sum_lam F_lam(x) F*_{lam/mu}(y)
///     = ( sum_i y^i (-s/y;q)_i/(q;q)_i F_(i)(x) ) F_mu(x).
inline IdentityReport<double> pieri_first(double q, double s, const Signature& mu,
                                          const std::vector<double>& xs, double y, long cap) {
    const long n = static_cast<long>(xs.size());
    double lhs = 0.0;
    for (const auto& lam : enumerate_boxed(n, mu[0] + cap)) {
        double d = sqw_dual_skew_one(q, s, lam, mu, y);
        if (d == 0.0) continue;
        lhs += sqw(q, s, lam, xs) * d;
    }
    // F_(i)(x_1..x_N) needs lam in Sign_N: pad (i) with zeros
    double eig = 0.0;
    for (long i = 0; i <= cap; ++i) {
        std::vector<long> parts(static_cast<std::size_t>(n), 0);
        parts[0] = i;
        double coeff = detail::shifted_power(y, s, q, i) / q_pochhammer(q, q, i);
        eig += coeff * sqw(q, s, Signature(parts), xs);
    }
    double rhs = eig * sqw(q, s, mu, xs);
    return {lhs, rhs};
}

/// Second Pieri rule (finite sums, exact):
///   sum_lam F_lam(x) F*_{lam'/mu'}(v)
///     = ( sum_{i=0}^N F*_{(i)}(v) F_{1^i}(x) ) F_mu(x).
template <class T>
IdentityReport<T> pieri_second(const T& q, const T& s, const Signature& mu, const std::vector<T>& xs,
                               const T& v) {
    const long n = static_cast<long>(xs.size());
    long box = mu[0] + 1;
    auto primed = [&](const Signature& sig) { return transpose(sig, box); };
    T lhs(0);
    for (const auto& lam : enumerate_boxed(n, box)) {
        T d = shl_dual_one(q, s, primed(lam), primed(mu), n, v);
        if (d == T(0)) continue;
        lhs += sqw(q, s, lam, xs) * d;
    }
    T eig(0);
    for (long i = 0; i <= n; ++i) {
        std::vector<long> padded(static_cast<std::size_t>(n), 0);
        for (long r = 0; r < i; ++r) padded[r] = 1;
        T coeff = shl_dual_one(q, s, Signature{i}, Signature{0}, n, v);
        eig += coeff * sqw(q, s, Signature(padded), xs);
    }
    T rhs = eig * sqw(q, s, mu, xs);
    return {lhs, rhs};
}

} // namespace sqwit
