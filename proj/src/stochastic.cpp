#include "sqwit/stochastic.hpp"

#include <limits>

namespace sqwit {

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

// boundary occupation law b_j^v under step-stationary conditions
std::vector<double> boundary_law(const VertexModelRun& run, long j) {
    double x1 = run.xs[0];
    double w = run.ws[j - 1];
    switch (run.model) {
    case VertexModel::HS6VUpRight:
    case VertexModel::HS6VUpLeft: {
        double p = x1 * w / (1.0 + x1 * w);
        return {1.0 - p, p};
    }
    default: {
        std::vector<double> out;
        double mu = x1 * w, nu = -run.s * x1;
        double norm = q_pochhammer_inf(mu, run.q) / q_pochhammer_inf(nu, run.q);
        double head = 1.0, qi = 1.0;
        for (long g = 0; g <= run.cap; ++g) {
            out.push_back(head / q_pochhammer(run.q, run.q, g) * norm);
            head *= (mu - nu * qi);
            qi *= run.q;
        }
        return out;
    }
    }
}

} // namespace

LatticeState run_vertex_model(const VertexModelRun& run) {
    if (run.xs.size() < static_cast<std::size_t>(run.i_max) ||
        run.ws.size() < static_cast<std::size_t>(run.j_max))
        throw DomainError("run_vertex_model: not enough spectral parameters");
    if (run.model == VertexModel::Phi43UpLeft && !(run.s > -std::sqrt(run.q) && run.s < 0.0))
        throw PositivityError("run_vertex_model: 4phi3 model needs s in (-sqrt(q), 0)");
    LatticeState st;
    st.i_max = run.i_max;
    st.j_max = run.j_max;
    st.up_left = run.model == VertexModel::HS6VUpLeft || run.model == VertexModel::Phi43UpLeft;
    st.beta1.assign(run.i_max, std::vector<long>(run.j_max, 0));
    st.beta2.assign(run.i_max, std::vector<long>(run.j_max, 0));
    st.alpha2.assign(run.i_max, std::vector<long>(run.j_max, 0));
    st.boundary.assign(run.j_max + 1, 0);
    Rng rng = Rng(run.seed, run.stream);

    std::vector<long> vertical(run.i_max + 1, 0); // incoming alpha1 per column
    for (long j = 1; j <= run.j_max; ++j) {
        auto blaw = boundary_law(run, j);
        long b;
        for (;;) {
            double mass = 0.0;
            for (double p : blaw) mass += p;
            double u = rng.uniform();
            if (u >= mass) { // truncated tail: log and redraw
                ++st.cap_hits;
                continue;
            }
            b = static_cast<long>(detail::sample_index(blaw, rng));
            break;
        }
        st.boundary[j] = b;
        long horizontal = b;
        for (long i = 1; i <= run.i_max; ++i) {
            long b2, a2;
            if (i == 1) {
                // boundary emission column: b passes through to the right
                b2 = horizontal;
                a2 = vertical[i];
            } else {
                auto weights = vertex_output_weights(run, i, j, vertical[i], horizontal);
                b2 = static_cast<long>(detail::sample_index(weights, rng));
                a2 = st.up_left ? vertical[i] + b2 - horizontal : vertical[i] + horizontal - b2;
            }
            st.beta1[i - 1][j - 1] = horizontal;
            st.beta2[i - 1][j - 1] = b2;
            st.alpha2[i - 1][j - 1] = a2;
            vertical[i] = a2;
            horizontal = b2;
        }
    }
    fill_heights(st);
    return st;
}

FieldState run_field(const FieldRun& run) {
    FieldState st;
    st.i_max = run.i_max;
    st.j_max = run.j_max;
    st.signatures.assign(run.i_max + 1, std::vector<Signature>(run.j_max + 1));
    for (long i = 0; i <= run.i_max; ++i)
        st.signatures[i][0] = Signature::zero(static_cast<std::size_t>(i));
    for (long j = 0; j <= run.j_max; ++j) st.signatures[0][j] = Signature();
    Rng rng = Rng(run.seed, run.stream);
    for (long d = 2; d <= run.i_max + run.j_max; ++d)
        for (long i = 1; i <= run.i_max; ++i) {
            long j = d - i;
            if (j < 1 || j > run.j_max) continue;
            FieldUpdate<double> upd{run.kind, run.q, run.s, run.xs[i - 1], run.ws[j - 1], run.cap};
            st.signatures[i][j] = sample_forward_move(upd, st.signatures[i - 1][j - 1],
                                                      st.signatures[i - 1][j], st.signatures[i][j - 1],
                                                      rng);
        }
    return st;
}

TupleLaw enumerate_field_law(const FieldRun& run,
                             long cap,
                             const std::function<std::vector<long>(const FieldState&)>& pick) {
    TupleLaw law;
    FieldState st;
    st.i_max = run.i_max;
    st.j_max = run.j_max;
    st.signatures.assign(run.i_max + 1, std::vector<Signature>(run.j_max + 1));
    for (long i = 0; i <= run.i_max; ++i)
        st.signatures[i][0] = Signature::zero(static_cast<std::size_t>(i));
    for (long j = 0; j <= run.j_max; ++j) st.signatures[0][j] = Signature();

    std::vector<std::pair<long, long>> order;
    for (long d = 2; d <= run.i_max + run.j_max; ++d)
        for (long i = 1; i <= run.i_max; ++i) {
            long j = d - i;
            if (j >= 1 && j <= run.j_max) order.emplace_back(i, j);
        }

    std::function<void(std::size_t, double)> rec = [&](std::size_t step, double prob) {
        if (prob < 1e-16) return;
        if (step == order.size()) {
            law[pick(st)] += prob;
            return;
        }
        auto [i, j] = order[step];
        FieldUpdate<double> upd{run.kind, run.q, run.s, run.xs[i - 1], run.ws[j - 1], run.cap};
        const Signature& kappa = st.signatures[i - 1][j - 1];
        const Signature& lam = st.signatures[i - 1][j];
        const Signature& mu = st.signatures[i][j - 1];
        // enumerate nu >= mu coordinatewise with nu_1 <= cap
        std::vector<long> nu(static_cast<std::size_t>(i));
        std::function<void(std::size_t)> build = [&](std::size_t pos) {
            if (pos == nu.size()) {
                Signature candidate(nu);
                double p = ufwd_probability(upd, kappa, lam, mu, candidate);
                if (p > 0.0) {
                    st.signatures[i][j] = candidate;
                    rec(step + 1, prob * p);
                }
                return;
            }
            long lo = mu[pos];
            long hi = pos == 0 ? cap : std::min(nu[pos - 1], cap);
            for (long v = lo; v <= hi; ++v) {
                nu[pos] = v;
                build(pos + 1);
            }
        };
        build(0);
    };
    rec(0, 1.0);
    return law;
}

TupleLaw enumerate_vertex_model_height_law(const VertexModelRun& run, long cap) {
    TupleLaw law;
    const bool up_left =
        run.model == VertexModel::HS6VUpLeft || run.model == VertexModel::Phi43UpLeft;
    std::vector<std::vector<long>> beta1(run.i_max, std::vector<long>(run.j_max, 0));
    std::vector<std::vector<long>> beta2(run.i_max, std::vector<long>(run.j_max, 0));
    std::vector<long> vertical(run.i_max + 1, 0);

    std::function<void(long, double, std::vector<long>&)> sweep_row;
    std::function<void(long, long, long, double, std::vector<long>&)> sweep_cell =
        [&](long j, long i, long horizontal, double prob, std::vector<long>& vert) {
            if (prob < 1e-16) return;
            if (i > run.i_max) {
                sweep_row(j + 1, prob, vert);
                return;
            }
            if (i == 1) { // boundary emission column
                beta1[0][j - 1] = horizontal;
                beta2[0][j - 1] = horizontal;
                sweep_cell(j, 2, horizontal, prob, vert);
                return;
            }
            auto weights = vertex_output_weights(run, i, j, vert[i], horizontal);
            for (long b2 = 0; b2 < static_cast<long>(weights.size()); ++b2) {
                double w = weights[b2];
                if (w <= 0.0) continue;
                long a2 = up_left ? vert[i] + b2 - horizontal : vert[i] + horizontal - b2;
                if (a2 < 0) continue;
                long saved = vert[i];
                vert[i] = a2;
                beta1[i - 1][j - 1] = horizontal;
                beta2[i - 1][j - 1] = b2;
                sweep_cell(j, i + 1, b2, prob * w, vert);
                vert[i] = saved;
            }
        };
    sweep_row = [&](long j, double prob, std::vector<long>& vert) {
        if (j > run.j_max) {
            std::vector<long> heights;
            for (long i = 1; i <= run.i_max; ++i) {
                long h = 0;
                for (long m = 1; m <= run.j_max; ++m) {
                    h += beta2[i - 1][m - 1];
                    heights.push_back(h);
                }
            }
            law[heights] += prob;
            return;
        }
        auto blaw = boundary_law(run, j);
        for (long b = 0; b < std::min<long>(cap + 1, static_cast<long>(blaw.size())); ++b) {
            if (blaw[b] <= 0.0) continue;
            sweep_cell(j, 1, b, prob * blaw[b], vert);
        }
    };
    std::vector<long> vert(run.i_max + 1, 0);
    sweep_row(1, 1.0, vert);
    return law;
}

// --------------------------------------------------------------------------
// push-block dynamics

namespace {

double qpow_sentinel(double q, long e) {
    if (e >= kInf / 2) return 0.0;
    return std::pow(q, static_cast<double>(e));
}

double poch_r(double a, double q, long r) {
    double value = 1.0;
    for (long m = 0; m < r; ++m) {
        value *= (1.0 - a);
        a *= q;
    }
    return value;
}

} // namespace

double push_block_rate(const std::vector<Signature>& levels, double q, double s, double x_k,
                       std::size_t k, std::size_t i, long r) {
    const Signature& cur = levels[k];
    auto upper = [&](long idx) -> long { // lambda^{k-1}_idx with border conventions
        if (idx <= 0) return kInf;
        if (k == 0 || idx > static_cast<long>(levels[k - 1].size())) return -kInf;
        return levels[k - 1][static_cast<std::size_t>(idx - 1)];
    };
    auto here = [&](long idx) -> long {
        if (idx > static_cast<long>(cur.size())) return -kInf;
        return cur[static_cast<std::size_t>(idx - 1)];
    };
    const long li = here(static_cast<long>(i) + 1);
    const long A = li >= kInf / 2 || upper(static_cast<long>(i) + 1) <= -kInf / 2
                       ? kInf
                       : li - upper(static_cast<long>(i) + 1);
    const long B = here(static_cast<long>(i) + 2) <= -kInf / 2 ? kInf
                                                               : li - here(static_cast<long>(i) + 2);
    const long C = upper(static_cast<long>(i)) >= kInf / 2 ? kInf : upper(static_cast<long>(i)) - li;
    if (C < kInf / 2 && r > C) return 0.0; // blocked by the level above
    double value = std::pow(x_k, static_cast<double>(r)) *
                   std::pow(-s, static_cast<double>(r - 1)) * (1.0 - q) /
                   (1.0 - std::pow(q, static_cast<double>(r)));
    value *= poch_r(-qpow_sentinel(q, A) * s / x_k, q, r);
    value *= poch_r(qpow_sentinel(q, B + 1), q, r);
    value *= poch_r(C >= kInf / 2 ? 0.0 : qpow_sentinel(q, C + 1 - r), q, r);
    value /= poch_r(qpow_sentinel(q, A + 1), q, r);
    value /= poch_r(qpow_sentinel(q, B) * s * s, q, r);
    value /= poch_r(C >= kInf / 2 ? 0.0 : -qpow_sentinel(q, C - r) * s * x_k, q, r);
    return value;
}

PushBlockState run_push_block(const PushBlockRun& run) {
    PushBlockState st;
    st.levels.reserve(run.levels);
    for (long k = 1; k <= run.levels; ++k)
        st.levels.push_back(Signature::zero(static_cast<std::size_t>(k)));
    Rng rng = Rng(run.seed, run.stream);

    struct Event {
        std::size_t k, i;
        long r;
        double rate;
    };
    auto bf_push_coef = [&](const Signature& mu, std::size_t i, long R) {
        // eps-order coefficient of F*_{mu + R e_i / mu}(-s + eps(1-q))
        double value = std::pow(-run.s, static_cast<double>(R - 1)) * (1.0 - run.q) /
                       (1.0 - std::pow(run.q, static_cast<double>(R)));
        if (i > 0) {
            long gap = mu[i - 1] - mu[i] - R;
            if (gap < 0) return 0.0;
            value *= poch_r(std::pow(run.q, static_cast<double>(gap + 1)), run.q, R);
            value /= poch_r(std::pow(run.q, static_cast<double>(gap)) * run.s * run.s, run.q, R);
        }
        return value;
    };

    for (;;) {
        std::vector<Event> events;
        double total = 0.0;
        for (std::size_t k = 0; k < st.levels.size(); ++k)
            for (std::size_t i = 0; i <= k; ++i)
                for (long r = 1; r <= run.r_cap; ++r) {
                    double rate = push_block_rate(st.levels, run.q, run.s, run.xs[k], k, i, r);
                    if (rate < -1e-12) throw PositivityError("push_block: negative rate");
                    if (rate > 1e-15) {
                        events.push_back({k, i, r, rate});
                        total += rate;
                    }
                    if (rate < 1e-15 && r > 4) break; // geometric tail
                }
        if (total <= 0.0) break;
        double dt = rng.exponential(total);
        if (st.time + dt > run.t_max) {
            st.time = run.t_max;
            break;
        }
        st.time += dt;
        double u = rng.uniform() * total;
        double cum = 0.0;
        std::size_t chosen = events.size() - 1;
        for (std::size_t e = 0; e < events.size(); ++e) {
            cum += events[e].rate;
            if (u < cum) {
                chosen = e;
                break;
            }
        }
        const Event ev = events[chosen];
        st.levels[ev.k] = st.levels[ev.k].add_to_part(ev.i, ev.r);
        ++st.jumps;
        // push upward to restore interlacing
        for (std::size_t j = ev.k; j + 1 < st.levels.size(); ++j) {
            long excess = st.levels[j][ev.i] - st.levels[j + 1][ev.i];
            if (excess <= 0) break;
            std::vector<double> weights;
            for (long ell = 0;; ++ell) {
                Signature cand = st.levels[j + 1].add_to_part(ev.i, excess + ell);
                double w = sqw_skew_one(run.q, run.s, cand, st.levels[j], run.xs[j + 1]);
                if (w != 0.0) w *= bf_push_coef(st.levels[j + 1], ev.i, excess + ell);
                weights.push_back(w);
                if (w == 0.0 && ell > 0) break;
                if (ell > 4 * run.r_cap) break;
            }
            long ell = static_cast<long>(detail::sample_index(weights, rng));
            st.levels[j + 1] = st.levels[j + 1].add_to_part(ev.i, excess + ell);
            ++st.pushes;
        }
    }
    return st;
}

} // namespace sqwit
