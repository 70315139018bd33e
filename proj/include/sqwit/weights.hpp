#pragma once

#include <vector>

#include "sqwit/distributions.hpp"
#include "sqwit/jet.hpp"
#include "sqwit/qseries.hpp"

namespace sqwit {

/// Edge occupation numbers around a vertex. Meaning of the four slots is
/// family-specific; each family documents its conservation law and returns 0
/// whenever it fails.
struct EdgeConfig {
    long i1, j1, i2, j2;
};

namespace detail {

/// prod_{i=0}^{j-1} (x + s q^i)  ==  x^j (-s/x;q)_j, valid at x = 0
template <class T>
T shifted_power(const T& x, const T& s, const T& q, long j) {
    T result(1), sq = s;
    for (long i = 0; i < j; ++i) {
        result *= (x + sq);
        sq *= q;
    }
    return result;
}

} // namespace detail

// --------------------------------------------------------------------------
// spin q-Whittaker row weights (up-right paths, conservation i1+j1 = i2+j2)

template <class T>
T w_sqw_left(const T& q, const T& s, const T& x, long j) {
    if (j < 0) return T(0);
    return detail::shifted_power(x, s, q, j) / q_pochhammer(q, q, j);
}

template <class T>
T w_sqw_bulk(const T& q, const T& s, const T& x, const EdgeConfig& e) {
    if (e.i1 < 0 || e.j1 < 0 || e.i2 < 0 || e.j2 < 0) return T(0);
    if (e.i1 + e.j1 != e.i2 + e.j2 || e.i1 < e.j2) return T(0);
    T value = detail::shifted_power(x, s, q, e.j2);
    value *= q_pochhammer(T(-s * x), q, e.i1 - e.j2);
    value *= q_pochhammer(q, q, e.i2);
    value /= q_pochhammer(q, q, e.j2) * q_pochhammer(q, q, e.i1 - e.j2) *
             q_pochhammer(T(s * s), q, e.i2);
    return value;
}

template <class T>
T w_sqw_corner(const T& q, const T& s, const T& x, long j) {
    if (j < 0) return T(0);
    T denom = detail::shifted_power(x, s, q, j);
    if (denom == T(0)) throw PoleError("w_sqw_corner: x + s q^i vanishes");
    return q_pochhammer(q, q, j) * num::pow_int(x, j) / denom;
}

/// Stabilized bulk weight on an infinite column: the l-independent limit of
/// W_bulk(M, l; M+l-j, j) as M -> infinity, divided by (-sx;q)_inf/(s^2;q)_inf.
/// Multiplying back the float constant recovers the limit itself.
template <class T>
T w_sqw_bulk_infcol_core(const T& q, const T& s, const T& x, long j) {
    return w_sqw_left(q, s, x, j);
}

// --------------------------------------------------------------------------
// dual spin q-Whittaker weights (down-right paths, conservation i1+j2 = j1+i2;
// slots are (bottom, left; top, right))

template <class T>
T w_sqw_dual_left(const T& q, const T& s, const T& y, long j) {
    return w_sqw_left(q, s, y, j);
}

template <class T>
T w_sqw_dual_bulk(const T& q, const T& s, const T& y, const EdgeConfig& e) {
    if (e.i1 < 0 || e.j1 < 0 || e.i2 < 0 || e.j2 < 0) return T(0);
    if (e.i1 + e.j2 != e.j1 + e.i2) return T(0);
    T conj = q_pochhammer(T(s * s), q, e.i1) * q_pochhammer(q, q, e.i2) /
             (q_pochhammer(q, q, e.i1) * q_pochhammer(T(s * s), q, e.i2));
    return conj * w_sqw_bulk(q, s, y, EdgeConfig{e.i2, e.j1, e.i1, e.j2});
}

template <class T>
T w_rightwall(const EdgeConfig& e) {
    return (e.i1 == e.j1 + e.i2 && e.i1 >= 0 && e.j1 >= 0 && e.i2 >= 0) ? T(1) : T(0);
}

// --------------------------------------------------------------------------
// dual spin Hall-Littlewood row weights (down-right paths; horizontal
// occupancies in {0,1}; conservation i1+j2 = j1+i2; slots (bottom,left;top,right))

template <class T>
T w_shl_left(const T& v, long j) {
    if (j < 0) return T(0);
    return num::pow_int(v, j);
}

template <class T>
T w_shl_bulk(const T& q, const T& s, const T& v, const EdgeConfig& e) {
    if (e.i1 < 0 || e.i2 < 0) return T(0);
    if (e.j1 < 0 || e.j1 > 1 || e.j2 < 0 || e.j2 > 1) return T(0);
    if (e.i1 + e.j2 != e.j1 + e.i2) return T(0);
    T denom = T(1) - s * v;
    if (denom == T(0)) throw PoleError("w_shl_bulk: sv = 1");
    if (e.j1 == 0 && e.j2 == 0) return (T(1) - s * v * num::pow_int(q, e.i1)) / denom;
    if (e.j1 == 1 && e.j2 == 1) return (v - s * num::pow_int(q, e.i1)) / denom;
    if (e.j1 == 1 && e.j2 == 0) return (T(1) - s * s * num::pow_int(q, e.i2)) / denom;
    return v * (T(1) - num::pow_int(q, e.i1 + 1)) / denom; // (g,0; g+1,1)
}

/// Stabilized infinite-column sHL weight: (1-sv) w*(inf, l; inf, j) = v^j.
template <class T>
T w_shl_bulk_infcol(const T& s, const T& v, long j) {
    T denom = T(1) - s * v;
    if (denom == T(0)) throw PoleError("w_shl_bulk_infcol: sv = 1");
    return num::pow_int(v, j) / denom;
}

// --------------------------------------------------------------------------
// cross vertex weights

/// R matrix for two sqW rows (conservation i1+j1 = i2+j2, support i1 >= j2).
template <class T>
T r_cross(const T& q, const T& s, const T& x, const T& y, const EdgeConfig& e) {
    if (e.i1 < 0 || e.j1 < 0 || e.i2 < 0 || e.j2 < 0) return T(0);
    if (e.i1 + e.j1 != e.i2 + e.j2 || e.i1 < e.j2) return T(0);
    // (y/x)^{j2} (-s/y;q)_{j2} (y/x;q)_{i1-j2} / (-s/x;q)_{i1} cleared of 1/x powers
    T num = detail::shifted_power(y, s, q, e.j2);
    T xmy(1), yq = y;
    for (long i = 0; i < e.i1 - e.j2; ++i) {
        xmy *= (x - yq);
        yq *= q;
    }
    T denom = detail::shifted_power(x, s, q, e.i1);
    if (denom == T(0)) throw PoleError("r_cross: x + s q^i vanishes");
    T value = num * xmy / denom;
    value *= q_pochhammer(q, q, e.i1) / (q_pochhammer(q, q, e.j2) * q_pochhammer(q, q, e.i1 - e.j2));
    return value;
}

/// Cross weight for a sqW row against a sHL row (conservation i1+j2 = j1+i2;
/// horizontal occupancies in {0,1}).
template <class T>
T rcal_cross(const T& q, const T& s, const T& x, const T& v, const EdgeConfig& e) {
    if (e.i1 < 0 || e.i2 < 0) return T(0);
    if (e.j1 < 0 || e.j1 > 1 || e.j2 < 0 || e.j2 > 1) return T(0);
    if (e.i1 + e.j2 != e.j1 + e.i2) return T(0);
    T denom = T(1) - s * v;
    if (denom == T(0)) throw PoleError("rcal_cross: sv = 1");
    if (e.j1 == 0 && e.j2 == 0) return (T(1) - s * v * num::pow_int(q, e.i1)) / denom;
    if (e.j1 == 0 && e.j2 == 1) return v * (x + s * num::pow_int(q, e.i1)) / denom;
    if (e.j1 == 1 && e.j2 == 0) return (T(1) - num::pow_int(q, e.i1)) / denom;
    return (num::pow_int(q, e.i1) + x * v) / denom; // (g,1; g,1)
}

namespace detail {

/// numerator and the lone dangerous denominator of the Rbb cross weight,
/// generic over plain numbers and first-order jets
template <class U>
void rbb_cross_parts(const U& q, const U& s, const U& x, const U& y, const EdgeConfig& e, U& num,
                     U& den) {
    U sx = s * x;
    num = num::pow_int(q, e.i2 * e.i1 + (e.j2 * (e.j2 - 1)) / 2) * num::pow_int(sx, e.j2);
    num *= q_pochhammer(q, q, e.j1);
    U safe = q_pochhammer(U(s * s), q, e.j1 + e.i2) * q_pochhammer(q, q, e.j2) *
             q_pochhammer(q, q, e.i2);
    num /= safe;
    num *= reg_4phi3<U>(e.i2, num::pow_int(q, -e.i1), U(-s * y), U(-q / sx), U(-s / x),
                        num::pow_int(q, 1 + e.j2 - e.i2), U(-y * num::pow_int(q, 1 - e.i1 - e.j2) / s),
                        q, q);
    // the one factor that can vanish (only for i1 > j1; negative indices
    // invert and cannot be zero)
    den = q_pochhammer(U(-q / sx), q, e.i1 - e.j1);
}

} // namespace detail

/// Cross weight for a sqW row against a dual sqW row (conservation
/// i2 + j1 = i1 + j2), a terminating regularized 4phi3. Parameter points with
/// s x = -q^{m+1} make both the numerator and a Pochhammer denominator vanish;
/// the removable singularity is evaluated exactly through first-order jets.
template <class T>
T rbb_cross(const T& q, const T& s, const T& x, const T& y, const EdgeConfig& e) {
    if (e.i1 < 0 || e.j1 < 0 || e.i2 < 0 || e.j2 < 0) return T(0);
    if (e.i2 + e.j1 != e.i1 + e.j2) return T(0);
    if (s == T(0) || x == T(0)) throw DomainError("rbb_cross: needs s, x nonzero");
    T num, den;
    detail::rbb_cross_parts(q, s, x, y, e, num, den);
    if (den != T(0)) return num / den;
    // perturb x -> x(1 + eps) and take the ratio of the linear terms
    Jet<T> jnum, jden;
    detail::rbb_cross_parts(Jet<T>(q), Jet<T>(s), Jet<T>(x, x), Jet<T>(y), e, jnum, jden);
    if (jden.a1 == T(0)) throw PoleError("rbb_cross: higher-order singularity");
    if (jnum.a0 != T(0)) {
        if constexpr (num::is_exact_v<T>) throw PoleError("rbb_cross: genuine pole");
    }
    return jnum.a1 / jden.a1;
}

// --------------------------------------------------------------------------
// stochastic vertex weights

/// Up-right stochastic higher spin six vertex weight (horizontal in {0,1}).
template <class T>
T l_ur_hs(const T& q, const T& s, const T& x, const T& v, const EdgeConfig& e) {
    if (e.i1 < 0 || e.i2 < 0) return T(0);
    if (e.j1 < 0 || e.j1 > 1 || e.j2 < 0 || e.j2 > 1) return T(0);
    if (e.i1 + e.j1 != e.i2 + e.j2) return T(0);
    T denom = T(1) + x * v;
    if (denom == T(0)) throw PoleError("l_ur_hs: xv = -1");
    if (e.j1 == 0 && e.j2 == 0) return (T(1) + x * v * num::pow_int(q, e.i1)) / denom;
    if (e.j1 == 0 && e.j2 == 1) return x * v * (T(1) - num::pow_int(q, e.i1)) / denom;
    if (e.j1 == 1 && e.j2 == 0) return (T(1) + s * x * num::pow_int(q, e.i1)) / denom;
    return x * (v - s * num::pow_int(q, e.i1)) / denom; // (g,1; g,1)
}

/// Up-left stochastic higher spin six vertex weight (conservation i1+j2 = j1+i2).
template <class T>
T l_ul_hs(const T& q, const T& s, const T& x, const T& v, const EdgeConfig& e) {
    if (e.i1 < 0 || e.i2 < 0) return T(0);
    if (e.j1 < 0 || e.j1 > 1 || e.j2 < 0 || e.j2 > 1) return T(0);
    if (e.i1 + e.j2 != e.j1 + e.i2) return T(0);
    T denom = T(1) + x * v;
    if (denom == T(0)) throw PoleError("l_ul_hs: xv = -1");
    if (e.j1 == 0 && e.j2 == 0) return (T(1) - s * v * num::pow_int(q, e.i1)) / denom;
    if (e.j1 == 0 && e.j2 == 1) return v * (x + s * num::pow_int(q, e.i1)) / denom;
    if (e.j1 == 1 && e.j2 == 1) return (num::pow_int(q, e.i1) + x * v) / denom;
    return (T(1) - num::pow_int(q, e.i1)) / denom; // (g,1; g-1,0)
}

/// q-Hahn up-right stochastic weight: phi_{q, xy, -sx}(j2 | i1).
template <class T>
T l_ur_qhahn(const T& q, const T& s, const T& x, const T& y, const EdgeConfig& e) {
    if (e.i1 < 0 || e.j1 < 0 || e.i2 < 0 || e.j2 < 0) return T(0);
    if (e.i1 + e.j1 != e.i2 + e.j2) return T(0);
    return phi_qbb<T>(q, T(x * y), T(-s * x), e.j2, e.i1);
}

/// Exact-backend core of the 4phi3 up-left weight: the full weight equals
/// core * (s^2;q)_inf (xy;q)_inf / ((-sy;q)_inf (-sx;q)_inf); the infinite
/// prefactor is a configuration-independent constant.
template <class T>
T l_ul_4phi3_core(const T& q, const T& s, const T& x, const T& y, const EdgeConfig& e) {
    if (e.i1 < 0 || e.j1 < 0 || e.i2 < 0 || e.j2 < 0) return T(0);
    if (e.i1 + e.j2 != e.i2 + e.j1) return T(0);
    if (s == T(0) || x == T(0) || y == T(0)) throw DomainError("l_ul_4phi3: needs s, x, y nonzero");
    const long a1 = e.i1, b1 = e.j1, a2 = e.i2, b2 = e.j2;
    T sy = s * y;
    T value = num::pow_int(y, a2) * num::pow_int(s, a1) * num::pow_int(x, a2 - a1);
    value *= num::pow_int(q, b1 * b2 + (a1 * (a1 - 1)) / 2);
    value *= q_pochhammer(T(-s / x), q, a2) * q_pochhammer(T(-s / y), q, b2);
    T denom = q_pochhammer(T(-s / x), q, a1) * q_pochhammer(T(-s / y), q, b1) *
              q_pochhammer(q, q, b2) * q_pochhammer(T(-q / sy), q, b2 - a2);
    if (denom == T(0)) throw PoleError("l_ul_4phi3: zero denominator");
    value /= denom;
    // (s^2 q^{a1+b2};q)_inf / (s^2;q)_inf = 1 / (s^2;q)_{a1+b2}
    value /= q_pochhammer(T(s * s), q, a1 + b2);
    value *= reg_4phi3<T>(b1, num::pow_int(q, -b2), T(-s * x), T(-q / sy), T(-s / y),
                          num::pow_int(q, 1 + a1 - b1), T(-x * num::pow_int(q, 1 - b2 - a1) / s),
                          q, q);
    return value;
}

/// Configuration-independent prefactor completing l_ul_4phi3_core (float).
inline double l_ul_4phi3_prefactor(double q, double s, double x, double y) {
    return q_pochhammer_inf(s * s, q) * q_pochhammer_inf(x * y, q) /
           (q_pochhammer_inf(-s * y, q) * q_pochhammer_inf(-s * x, q));
}

inline double l_ul_4phi3(double q, double s, double x, double y, const EdgeConfig& e) {
    return l_ul_4phi3_core(q, s, x, y, e) * l_ul_4phi3_prefactor(q, s, x, y);
}

/// Compositional route (float): mixture of a q-beta-binomial and a
/// q-hypergeometric step, used to cross-validate and to sample.
inline double l_ul_4phi3_compositional(double q, double s, double x, double y, const EdgeConfig& e) {
    if (e.i1 < 0 || e.j1 < 0 || e.i2 < 0 || e.j2 < 0) return 0.0;
    if (e.i1 + e.j2 != e.i2 + e.j1) return 0.0;
    const long g = e.i1, l = e.j1, L = e.j2;
    double qg = std::pow(q, static_cast<double>(g));
    double sum = 0.0;
    for (long k = 0; k <= std::min(l, L); ++k) {
        double w = phi_qbb<double>(1.0 / q, qg, -s * y * qg / q, k, l);
        double qk = std::pow(q, static_cast<double>(k));
        w *= psi_qhyp(q, -qk * s / y, -qg * s / x, s * s * qg * qk, L - k);
        sum += w;
    }
    return sum;
}

enum class StochasticFamily { UpRightHS, UpLeftHS, UpRightQHahn, UpLeft4Phi3 };

template <class T>
struct StochasticReport {
    T total;        // sum over outputs (exact families: equals 1)
    T residual;     // total - 1
    long outputs;   // number of nonzero terms enumerated
};

/// Enumerates all outputs reachable from (a1, b1) and sums the weights.
/// Exact families sum to one on rationals; the 4phi3 family is float-only
/// through this interface (infinite prefactor).
template <class T>
StochasticReport<T> check_stochastic(StochasticFamily fam, const T& q, const T& s, const T& x,
                                     const T& spec2, long a1, long b1, long cap) {
    T total(0);
    long outputs = 0;
    auto add = [&](const T& w) {
        if (w != T(0)) ++outputs;
        total += w;
    };
    switch (fam) {
    case StochasticFamily::UpRightHS:
        for (long b2 = 0; b2 <= 1; ++b2) {
            long a2 = a1 + b1 - b2;
            if (a2 >= 0) add(l_ur_hs(q, s, x, spec2, EdgeConfig{a1, b1, a2, b2}));
        }
        break;
    case StochasticFamily::UpLeftHS:
        for (long b2 = 0; b2 <= 1; ++b2) {
            long a2 = a1 + b2 - b1;
            if (a2 >= 0) add(l_ul_hs(q, s, x, spec2, EdgeConfig{a1, b1, a2, b2}));
        }
        break;
    case StochasticFamily::UpRightQHahn:
        for (long b2 = 0; b2 <= a1 + b1; ++b2) {
            long a2 = a1 + b1 - b2;
            if (a2 >= 0) add(l_ur_qhahn(q, s, x, spec2, EdgeConfig{a1, b1, a2, b2}));
        }
        break;
    case StochasticFamily::UpLeft4Phi3:
        if constexpr (num::is_exact_v<T>) {
            throw UnsupportedBackend("check_stochastic: 4phi3 family is float-only");
        } else {
            for (long b2 = 0; b2 <= cap; ++b2) {
                long a2 = a1 + b2 - b1;
                if (a2 >= 0) add(l_ul_4phi3(q, s, x, spec2, EdgeConfig{a1, b1, a2, b2}));
            }
        }
        break;
    }
    return {total, T(total - T(1)), outputs};
}

struct PositivityReport {
    bool all_nonnegative;
    std::vector<EdgeConfig> violations;
};

/// Scans Rbb over 0 <= i1,j1,i2 <= range (j2 fixed by conservation).
inline PositivityReport check_positivity_rbb(const Rational& q, const Rational& s, const Rational& x,
                                             const Rational& y, long range) {
    PositivityReport report{true, {}};
    for (long i1 = 0; i1 <= range; ++i1)
        for (long j1 = 0; j1 <= range; ++j1)
            for (long i2 = 0; i2 <= range; ++i2) {
                long j2 = i2 + j1 - i1;
                if (j2 < 0) continue;
                EdgeConfig e{i1, j1, i2, j2};
                if (rbb_cross(q, s, x, y, e) < 0) {
                    report.all_nonnegative = false;
                    report.violations.push_back(e);
                }
            }
    return report;
}

} // namespace sqwit
