#pragma once

#include <cmath>
#include <functional>
#include <map>

#include "sqwit/rng.hpp"
#include "sqwit/yang_baxter.hpp"

namespace sqwit {

enum class VertexModel { HS6VUpRight, HS6VUpLeft, QHahnUpRight, Phi43UpLeft };
enum class FieldKind { SqwShl, SqwSqw };

namespace detail {

inline std::size_t sample_index(const std::vector<double>& weights, Rng& rng) {
    double total = 0.0;
    for (double w : weights) {
        if (w < -1e-12) throw PositivityError("sampler: negative weight");
        total += std::max(w, 0.0);
    }
    if (!(total > 0.0)) throw DomainError("sampler: empty support");
    double u = rng.uniform() * total;
    double cum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        cum += std::max(weights[i], 0.0);
        if (u < cum) return i;
    }
    return weights.size() - 1;
}

} // namespace detail

// --------------------------------------------------------------------------
// stochastic vertex models (Section 6 samplers)

struct VertexModelRun {
    VertexModel model;
    long i_max, j_max;
    std::vector<double> xs;      // spectral parameters x_1..x_{i_max}
    std::vector<double> ws;      // v_j (HS6V) or y_j (q-Hahn / 4phi3)
    double q, s;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    long cap = 60;               // occupation cap for unbounded laws
};

struct LatticeState {
    long i_max, j_max;
    bool up_left = false;
    // beta1/beta2[i][j]: horizontal input/output of vertex (i+1, j+1)
    std::vector<std::vector<long>> beta1, beta2, alpha2;
    std::vector<long> boundary;  // b_j^v, j = 1..j_max
    std::vector<std::vector<long>> height;
    long cap_hits = 0;
};

/// Weight of emitting beta2 given (alpha1, beta1) under the model's row law.
inline std::vector<double> vertex_output_weights(const VertexModelRun& run, long i, long j,
                                                 long alpha1, long beta1) {
    double x = run.xs[i - 1];
    double w = run.ws[j - 1];
    std::vector<double> out;
    switch (run.model) {
    case VertexModel::HS6VUpRight:
        for (long b2 = 0; b2 <= 1; ++b2) {
            long a2 = alpha1 + beta1 - b2;
            out.push_back(a2 < 0 ? 0.0 : l_ur_hs(run.q, run.s, x, w, {alpha1, beta1, a2, b2}));
        }
        break;
    case VertexModel::HS6VUpLeft:
        for (long b2 = 0; b2 <= 1; ++b2) {
            long a2 = alpha1 + b2 - beta1;
            out.push_back(a2 < 0 ? 0.0 : l_ul_hs(run.q, run.s, x, w, {alpha1, beta1, a2, b2}));
        }
        break;
    case VertexModel::QHahnUpRight:
        for (long b2 = 0; b2 <= alpha1 + beta1; ++b2) {
            long a2 = alpha1 + beta1 - b2;
            out.push_back(a2 < 0 ? 0.0 : l_ur_qhahn(run.q, run.s, x, w, {alpha1, beta1, a2, b2}));
        }
        break;
    case VertexModel::Phi43UpLeft: {
        // row sums to one: stop once the captured mass is essentially 1
        // (also keeps the balanced q^{large} prefactors away from overflow)
        double captured = 0.0;
        for (long b2 = 0; b2 <= run.cap; ++b2) {
            long a2 = alpha1 + b2 - beta1;
            double value =
                a2 < 0 ? 0.0 : l_ul_4phi3(run.q, run.s, x, w, {alpha1, beta1, a2, b2});
            if (!std::isfinite(value)) break;
            out.push_back(value);
            captured += std::max(value, 0.0);
            if (captured > 1.0 - 1e-13) break;
        }
        break;
    }
    }
    return out;
}

/// Diagonal-by-diagonal sampler with the conditional-independence contract.
LatticeState run_vertex_model(const VertexModelRun& run);

/// Height bookkeeping (b^h = 0 throughout, so vertical crossings vanish):
/// H(i,j) = sum_{m<=j} beta2(i,m). Column 1 is the boundary emission column
/// (its right edges carry the b_j themselves: the free first particle), and
/// the stochastic kernels act from column 2 on.
inline void fill_heights(LatticeState& st) {
    st.height.assign(st.i_max + 1, std::vector<long>(st.j_max + 1, 0));
    for (long i = 1; i <= st.i_max; ++i)
        for (long j = 1; j <= st.j_max; ++j)
            st.height[i][j] = st.height[i][j - 1] + st.beta2[i - 1][j - 1];
}

// --------------------------------------------------------------------------
// Yang-Baxter fields on interlacing arrays (Section 4 construction)

struct FieldRun {
    FieldKind kind;
    long i_max, j_max;
    std::vector<double> xs; // x_1..x_{i_max}
    std::vector<double> ws; // v_j (sqW/sHL) or y_j (sqW/sqW)
    double q, s;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    long cap = 60;
};

/// One forward local update kappa -> nu given the left neighbor lambda and
/// lower neighbor mu, dragging the cross column by column. T is double for
/// sampling support and Rational for the exact reversibility checks.
template <class T>
struct FieldUpdate {
    FieldKind kind;
    T q, s, x, w;
    long cap = 60;

    YbeId bulk_id() const { return kind == FieldKind::SqwShl ? YbeId::RWwStar : YbeId::RWWStar; }
    YbeId wall_id() const {
        return kind == FieldKind::SqwShl ? YbeId::RWwStarWall : YbeId::RWWStarWall;
    }

    long horizontal_cap() const { return kind == FieldKind::SqwShl ? 1 : cap; }

    /// weights of the leftmost move: nu_1 = lambda_1 + a2 = mu_1 + b2
    std::vector<T> left_wall_weights(long alpha1, long beta1) const {
        std::vector<T> out;
        for (long b2 = 0; b2 <= horizontal_cap(); ++b2) {
            long a2 = alpha1 + b2 - beta1;
            if (a2 < 0) {
                out.push_back(T(0));
                continue;
            }
            EdgeConfig e{alpha1, beta1, a2, b2};
            out.push_back(kind == FieldKind::SqwShl ? l_ul_hs(q, s, x, w, e)
                                                    : T(l_ul_4phi3_core(q, s, x, w, e)));
        }
        return out;
    }

    /// unnormalized boundary law of nu_1 - mu_1 for n = 1 columns
    /// (kappa = lambda = empty); infinite-product normalizers cancel
    std::vector<T> boundary_weights() const {
        std::vector<T> out;
        if (kind == FieldKind::SqwShl) {
            out = {T(1), T(x * w)};
        } else {
            // phi_{q, xw, -sx}(g | inf) without the (mu;q)inf/(nu;q)inf factor
            T mu = x * w, nu = -s * x;
            T head(1), qi(1);
            for (long g = 0; g <= cap; ++g) {
                out.push_back(T(head / q_pochhammer(q, q, g)));
                head *= (mu - nu * qi);
                qi *= q;
            }
        }
        return out;
    }

    YbeInstance hop_instance(const Signature& kappa, const Signature& lam, const Signature& mu,
                             const std::vector<long>& nu_partial, long c, bool wall) const {
        auto part = [](const Signature& sig, long idx) { return sig.part(idx - 1); };
        long i1 = nu_partial[c - 2] - part(mu, c - 1);
        long i2 = nu_partial[c - 2] - part(lam, c - 1);
        long i3 = part(lam, c - 1) - part(lam, c);
        long j1 = wall ? 0 : part(lam, c) - part(kappa, c);
        long j2 = part(mu, c) - part(kappa, c);
        long j3 = part(mu, c - 1) - part(mu, c);
        return YbeInstance{wall ? wall_id() : bulk_id(), i1, i2, i3, j1, j2, j3};
    }

    /// forward kernel of the hop at column c: weights over k1' given the
    /// current (old) k1. Bulk hops use the proportional bijectivization,
    /// the wall hop uses the autonomy-preserving stochastic-weight choice.
    std::vector<T> hop_weights(const YbeInstance& inst, long k1, bool wall) const {
        if (!wall) {
            auto terms = ybe_right_terms(inst, YbeParams<T>{q, s, x, w});
            long top = inst.i1 + inst.i3 + inst.j1 + inst.j2 + inst.j3 + inst.i2 + 1;
            std::vector<T> out(static_cast<std::size_t>(top) + 1, T(0));
            T total(0);
            for (const auto& t : terms) {
                out[static_cast<std::size_t>(t.k1)] = t.weight;
                total += t.weight;
            }
            if (total == T(0)) throw DomainError("field hop: vanishing right side");
            for (T& v : out) v /= total;
            return out;
        }
        long top = inst.j3 - inst.i2 + inst.i1; // alpha1 + beta1 of the matched model
        std::vector<T> out;
        for (long k1p = 0; k1p <= std::min<long>(top, horizontal_cap()); ++k1p) {
            EdgeConfig e{top - k1, k1, top - k1p, k1p};
            out.push_back(kind == FieldKind::SqwShl ? l_ur_hs(q, s, x, w, e)
                                                    : l_ur_qhahn(q, s, x, w, e));
        }
        return out;
    }
};

struct FieldState {
    long i_max, j_max;
    // signatures[i][j] = lambda^{(i,j)}, i = 0..i_max, j = 0..j_max
    std::vector<std::vector<Signature>> signatures;
};

FieldState run_field(const FieldRun& run);

/// Exact forward-transition probability Ufwd(kappa -> nu | lambda, mu),
/// the product of local move probabilities along the drag.
template <class T>
T ufwd_probability(const FieldUpdate<T>& upd, const Signature& kappa, const Signature& lam,
                   const Signature& mu, const Signature& nu) {
    const long n = static_cast<long>(nu.size());
    if (mu.size() != nu.size() || lam.size() + 1 != nu.size() || kappa.size() + 1 != nu.size())
        throw ShapeError("ufwd_probability: incompatible sizes");
    std::vector<long> nu_partial(nu.parts().begin(), nu.parts().end());
    T prob(1);
    // leftmost move
    if (n == 1) {
        auto w = upd.boundary_weights();
        long g = nu[0] - mu[0];
        T total(0);
        for (const T& v : w) total += v;
        if (total == T(0) || g < 0 || g >= static_cast<long>(w.size())) return T(0);
        prob *= w[static_cast<std::size_t>(g)] / total;
    } else {
        long alpha1 = mu[0] - kappa[0];
        long beta1 = lam[0] - kappa[0];
        long b2 = nu[0] - mu[0];
        auto w = upd.left_wall_weights(alpha1, beta1);
        T total(0);
        for (const T& v : w) total += v;
        if (total == T(0) || b2 < 0 || b2 >= static_cast<long>(w.size())) return T(0);
        prob *= w[static_cast<std::size_t>(b2)] / total;
    }
    // bulk hops and the wall hop
    for (long c = 2; c <= n; ++c) {
        bool wall = c == n;
        auto inst = upd.hop_instance(kappa, lam, mu, nu_partial, c, wall);
        long k1 = lam.part(c - 2) - kappa.part(c - 2);
        if (k1 < 0) return T(0);
        std::vector<T> w;
        try {
            w = upd.hop_weights(inst, k1, wall);
        } catch (const DomainError&) {
            return T(0); // empty support: the transition is impossible
        }
        long k1p = nu[c - 1] - mu[c - 1];
        if (k1p < 0 || k1p >= static_cast<long>(w.size())) return T(0);
        prob *= w[static_cast<std::size_t>(k1p)];
    }
    return prob;
}

/// One sampled forward move.
template <class T>
Signature sample_forward_move(const FieldUpdate<T>& upd, const Signature& kappa,
                              const Signature& lam, const Signature& mu, Rng& rng) {
    static_assert(std::is_same_v<T, double>, "sampling runs on the float backend");
    const long n = static_cast<long>(mu.size());
    std::vector<long> nu;
    if (n == 1) {
        auto w = upd.boundary_weights();
        nu.push_back(mu[0] + static_cast<long>(detail::sample_index(w, rng)));
    } else {
        auto w = upd.left_wall_weights(mu[0] - kappa[0], lam[0] - kappa[0]);
        nu.push_back(mu[0] + static_cast<long>(detail::sample_index(w, rng)));
        for (long c = 2; c <= n; ++c) {
            bool wall = c == n;
            auto inst = upd.hop_instance(kappa, lam, mu, nu, c, wall);
            long k1 = lam.part(c - 2) - kappa.part(c - 2);
            auto w2 = upd.hop_weights(inst, k1, wall);
            nu.push_back(mu[c - 1] + static_cast<long>(detail::sample_index(w2, rng)));
        }
    }
    return Signature(std::move(nu));
}

// --------------------------------------------------------------------------
// exact (capped) law enumeration on small grids

using TupleLaw = std::map<std::vector<long>, double>;

/// joint law of a coordinate functional of the field over an i_max x j_max
/// grid; `pick` maps the full grid of signatures to the reported tuple
TupleLaw enumerate_field_law(const FieldRun& run, long cap,
                             const std::function<std::vector<long>(const FieldState&)>& pick);

/// joint law of (H(i,j)) over the grid for the q-Hahn or 4phi3 model
TupleLaw enumerate_vertex_model_height_law(const VertexModelRun& run, long cap);

inline double total_variation(const TupleLaw& a, const TupleLaw& b) {
    double tv = 0.0;
    for (const auto& [k, p] : a) {
        auto it = b.find(k);
        tv += std::fabs(p - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [k, p] : b)
        if (!a.count(k)) tv += p;
    return 0.5 * tv;
}

// --------------------------------------------------------------------------
// continuous-time push-block dynamics (Section 6.7)

struct PushBlockRun {
    long levels;
    std::vector<double> xs; // x_1..x_N
    double q, s;
    double t_max;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    long r_cap = 40;
};

struct PushBlockState {
    double time = 0.0;
    std::vector<Signature> levels; // levels[k] in Sign_{k+1}
    long jumps = 0, pushes = 0;
};

/// jump rate lambda^k -> lambda^k + r e_i conditioned on lambda^{k-1}
double push_block_rate(const std::vector<Signature>& levels, double q, double s, double x_k,
                       std::size_t k, std::size_t i, long r);

PushBlockState run_push_block(const PushBlockRun& run);

// --------------------------------------------------------------------------
// particle views and Monte Carlo plumbing

/// TASEP view of an up-right lattice: x_n(t) = H(n, t) - n.
inline std::vector<std::vector<long>> tasep_view(const LatticeState& st) {
    std::vector<std::vector<long>> xs(st.i_max + 1);
    for (long n = 1; n <= st.i_max; ++n) {
        xs[n].resize(st.j_max + 1);
        for (long t = 0; t <= st.j_max; ++t) xs[n][t] = st.height[n][t] - n;
    }
    return xs;
}

/// PushTASEP view of an up-left lattice: y_n(t) = -H(n, t) - n.
inline std::vector<std::vector<long>> pushtasep_view(const LatticeState& st) {
    std::vector<std::vector<long>> ys(st.i_max + 1);
    for (long n = 1; n <= st.i_max; ++n) {
        ys[n].resize(st.j_max + 1);
        for (long t = 0; t <= st.j_max; ++t) ys[n][t] = -st.height[n][t] - n;
    }
    return ys;
}

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long n = 0;
};

/// streaming mean / standard error (Welford)
class McAccumulator {
public:
    void add(double x) {
        ++n_;
        double delta = x - mean_;
        mean_ += delta / n_;
        m2_ += delta * (x - mean_);
    }
    McEstimate estimate() const {
        McEstimate e;
        e.n = n_;
        e.mean = mean_;
        e.stderr_ = n_ > 1 ? std::sqrt(m2_ / (n_ - 1.0) / n_) : 0.0;
        return e;
    }

private:
    long n_ = 0;
    double mean_ = 0.0, m2_ = 0.0;
};

template <class F>
McEstimate mc_estimate(F&& observable, long runs, std::uint64_t seed) {
    McAccumulator acc;
    for (long r = 0; r < runs; ++r) {
        Rng rng = Rng(seed).split(static_cast<std::uint64_t>(r));
        acc.add(observable(rng, r));
    }
    return acc.estimate();
}

} // namespace sqwit
