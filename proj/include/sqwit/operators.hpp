#pragma once

#include <functional>

#include "sqwit/symfunc.hpp"

namespace sqwit {

template <class T>
using SymFun = std::function<T(const std::vector<T>&)>;

namespace detail {

template <class T>
void require_distinct(const std::vector<T>& xs, const char* who) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) throw SingularInput(std::string(who) + ": coincident variables");
}

} // namespace detail

/// D_1 f = sum_i prod_{j != i} (1+s x_i)/(1 - x_i/x_j) f(..., q x_i, ...)
template <class T>
T apply_d1(const SymFun<T>& f, std::vector<T> xs, const T& q, const T& s) {
    detail::require_distinct(xs, "apply_d1");
    T total(0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        T coeff(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            if (xs[j] == T(0)) throw SingularInput("apply_d1: zero variable");
            coeff *= (T(1) + s * xs[i]) / (T(1) - xs[i] / xs[j]);
        }
        T saved = xs[i];
        xs[i] = q * saved;
        total += coeff * f(xs);
        xs[i] = saved;
    }
    return total;
}

/// D_1-bar f = sum_i prod_{j != i} (1+s/x_i)/(1 - x_j/x_i) f(..., x_i/q, ...)
template <class T>
T apply_d1_bar(const SymFun<T>& f, std::vector<T> xs, const T& q, const T& s) {
    detail::require_distinct(xs, "apply_d1_bar");
    T total(0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == T(0)) throw SingularInput("apply_d1_bar: zero variable");
        T coeff(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            coeff *= (T(1) + s / xs[i]) / (T(1) - xs[j] / xs[i]);
        }
        T saved = xs[i];
        xs[i] = saved / q;
        total += coeff * f(xs);
        xs[i] = saved;
    }
    return total;
}

/// Inhomogeneous variants with per-slot spin parameters s_1..s_{N-1}.
template <class T>
T apply_d1_inhom(const SymFun<T>& f, std::vector<T> xs, const T& q, const std::vector<T>& ss) {
    detail::require_distinct(xs, "apply_d1_inhom");
    T total(0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        T coeff(1);
        for (const T& sr : ss) coeff *= (T(1) + sr * xs[i]);
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) coeff /= (T(1) - xs[i] / xs[j]);
        T saved = xs[i];
        xs[i] = q * saved;
        total += coeff * f(xs);
        xs[i] = saved;
    }
    return total;
}

template <class T>
T apply_d1_bar_inhom(const SymFun<T>& f, std::vector<T> xs, const T& q, const std::vector<T>& ss) {
    detail::require_distinct(xs, "apply_d1_bar_inhom");
    T total(0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        T coeff(1);
        for (const T& sr : ss) coeff *= (T(1) + sr / xs[i]);
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) coeff /= (T(1) - xs[j] / xs[i]);
        T saved = xs[i];
        xs[i] = saved / q;
        total += coeff * f(xs);
        xs[i] = saved;
    }
    return total;
}

/// Conjugated higher q-Whittaker operators U^{-1} W_N^r U and V^{-1} Wt_N^r V
/// (sums over r-subsets; shifts x_i -> q x_i resp. x_i/q on the subset).
template <class T>
T apply_conjugated_w(const SymFun<T>& f, std::vector<T> xs, const T& q, const T& s, int r,
                     bool bar) {
    detail::require_distinct(xs, "apply_conjugated_w");
    const std::size_t n = xs.size();
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - r, pick.end(), 1);
    T total(0);
    do {
        T coeff(1);
        for (std::size_t i = 0; i < n; ++i) {
            if (!pick[i]) continue;
            T spin = bar ? T(T(1) + s / xs[i]) : T(T(1) + s * xs[i]);
            coeff *= num::pow_int(spin, static_cast<long>(n) - 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (pick[j]) continue;
                coeff /= bar ? (T(1) - xs[j] / xs[i]) : (T(1) - xs[i] / xs[j]);
            }
        }
        std::vector<T> shifted = xs;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) shifted[i] = bar ? T(xs[i] / q) : T(q * xs[i]);
        total += coeff * f(shifted);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return total;
}

// --------------------------------------------------------------------------
// Hall-Littlewood side (the quantization parameter is called t here)

/// r-th Hall-Littlewood operator: subsets of variables are set to zero.
/// Carries the classical t^{r(r-1)/2} normalization of the r-th Macdonald
/// operator, which the stated eigenvalues e_r(1, t, ..., t^{M-l-1}) require.
template <class T>
T apply_hl_bar(const SymFun<T>& f, const std::vector<T>& vs, const T& t, int r) {
    detail::require_distinct(vs, "apply_hl_bar");
    const std::size_t m = vs.size();
    if (r < 0 || static_cast<std::size_t>(r) > m) throw DomainError("apply_hl_bar: bad order");
    std::vector<int> pick(m, 0);
    std::fill(pick.end() - r, pick.end(), 1);
    T total(0);
    do {
        T coeff(1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                if (!pick[i] || pick[k]) continue;
                coeff *= (vs[k] - t * vs[i]) / (vs[k] - vs[i]);
            }
        std::vector<T> at = vs;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i]) at[i] = T(0);
        total += coeff * f(at);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return num::pow_int(t, (static_cast<long>(r) * (r - 1)) / 2) * total;
}

/// e_r(1, t, ..., t^{n-1})
template <class T>
T elementary_in_t_powers(const T& t, long n, int r) {
    std::vector<T> powers;
    T p(1);
    for (long i = 0; i < n; ++i) {
        powers.push_back(p);
        p *= t;
    }
    // elementary symmetric polynomial by the usual recurrence
    std::vector<T> e(static_cast<std::size_t>(r) + 1, T(0));
    e[0] = T(1);
    for (const T& z : powers)
        for (int k = r; k >= 1; --k) e[k] += z * e[k - 1];
    return e[r];
}

/// The eps -> 0 limit of eps f(..., v_j = 1/eps, ...) for f in V(M) whose
/// dependence on v_j is P(v_j)/(1-s v_j)^K with deg P <= K+1. Computed by
/// exact interpolation of g(v) = f(v) (1-sv)^K; one extra node guards the
/// degree assumption.
template <class T>
T eps_shift_limit(const SymFun<T>& f, std::vector<T> vs, std::size_t j, const T& s, long K) {
    const long deg = K + 1;
    std::vector<T> nodes, values;
    long candidate = 2;
    while (static_cast<long>(nodes.size()) < deg + 2) {
        T node = T(1) / T(candidate++);
        bool clash = node == T(1) / s;
        for (std::size_t l = 0; l < vs.size() && !clash; ++l)
            if (l != j && vs[l] == node) clash = true;
        if (clash) continue;
        T saved = vs[j];
        vs[j] = node;
        values.push_back(f(vs) * num::pow_int(T(T(1) - s * node), K));
        vs[j] = saved;
        nodes.push_back(node);
    }
    // leading coefficient of the degree <= deg interpolant through the first
    // deg+1 nodes
    auto leading = [&](std::size_t lo, std::size_t count) {
        T acc(0);
        for (std::size_t i = lo; i < lo + count; ++i) {
            T denom(1);
            for (std::size_t k = lo; k < lo + count; ++k)
                if (k != i) denom *= (nodes[i] - nodes[k]);
            acc += values[i] / denom;
        }
        return acc;
    };
    // degree guard: interpolating through any deg+1 of the deg+2 nodes must
    // give the same leading coefficient
    T lead_a = leading(0, static_cast<std::size_t>(deg) + 1);
    T lead_b = leading(1, static_cast<std::size_t>(deg) + 1);
    if constexpr (num::is_exact_v<T>) {
        if (lead_a != lead_b) throw DomainError("eps_shift_limit: function outside V(M)");
    }
    return lead_a / num::pow_int(T(-s), K);
}

/// Dual s-deformed Macdonald operator D*_{1,N} acting on f in V(M) with the
/// per-variable denominator exponent K (use K = N-1 for the dual sHL family).
template <class T>
T apply_dual_sdeformed_macdonald(const SymFun<T>& f, const std::vector<T>& vs, const T& t,
                                 const T& s, long n_cols, long K) {
    detail::require_distinct(vs, "apply_dual_sdeformed_macdonald");
    T total(0);
    for (std::size_t j = 0; j < vs.size(); ++j) {
        T coeff(1);
        for (std::size_t l = 0; l < vs.size(); ++l) {
            if (l == j) continue;
            coeff *= (vs[j] - t * vs[l]) / (vs[j] - vs[l]);
        }
        T denom = T(1) - s * vs[j];
        if (denom == T(0)) throw PoleError("apply_dual_sdeformed_macdonald: sv = 1");
        coeff *= vs[j] * num::pow_int(T((vs[j] - s) / denom), n_cols - 1) *
                 num::pow_int(T(-s), n_cols - 1);
        total += coeff * eps_shift_limit(f, vs, j, s, K);
    }
    return total;
}

/// [D_1, D_1-bar] f at a point; zero for all symmetric polynomials.
template <class T>
T commutator_d1_d1bar(const SymFun<T>& f, const std::vector<T>& xs, const T& q, const T& s) {
    SymFun<T> df = [&](const std::vector<T>& ys) { return apply_d1(f, ys, q, s); };
    SymFun<T> dbf = [&](const std::vector<T>& ys) { return apply_d1_bar(f, ys, q, s); };
    return apply_d1(dbf, xs, q, s) - apply_d1_bar(df, xs, q, s);
}

/// Monomial symmetric polynomial m_lambda.
template <class T>
T monomial_symmetric(const Signature& lam, const std::vector<T>& xs) {
    if (lam.size() > xs.size()) throw ShapeError("monomial_symmetric: too few variables");
    std::vector<long> expo(xs.size(), 0);
    for (std::size_t i = 0; i < lam.size(); ++i) expo[i] = lam[i];
    std::sort(expo.begin(), expo.end());
    T total(0);
    do {
        T term(1);
        for (std::size_t i = 0; i < xs.size(); ++i) term *= num::pow_int(xs[i], expo[i]);
        total += term;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return total;
}

} // namespace sqwit
