#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sqwit/errors.hpp"

namespace sqwit {

/// Weakly decreasing tuple of nonnegative integers with a fixed number of
/// parts. Values are immutable after construction.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<long> parts) : parts_(std::move(parts)) { validate(); }
    Signature(std::initializer_list<long> parts) : parts_(parts) { validate(); }

    static Signature zero(std::size_t n) { return Signature(std::vector<long>(n, 0)); }

    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long operator[](std::size_t i) const { return parts_[i]; }

    /// part with out-of-range indices read as 0 (convention lambda_{N+1}=0)
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    const std::vector<long>& parts() const { return parts_; }

    long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    /// number of strictly positive parts
    std::size_t positive_parts() const {
        return static_cast<std::size_t>(
            std::count_if(parts_.begin(), parts_.end(), [](long p) { return p > 0; }));
    }

    /// m_i = #{j : lambda_j = i}
    long multiplicity(long value) const {
        return std::count(parts_.begin(), parts_.end(), value);
    }

    Signature append(long part) const {
        auto p = parts_;
        p.push_back(part);
        return Signature(std::move(p));
    }

    Signature add_to_part(std::size_t i, long delta) const {
        auto p = parts_;
        p.at(i) += delta;
        return Signature(std::move(p));
    }

    Signature drop_last() const {
        auto p = parts_;
        p.pop_back();
        return Signature(std::move(p));
    }

    bool operator==(const Signature& o) const { return parts_ == o.parts_; }
    bool operator!=(const Signature& o) const { return parts_ != o.parts_; }
    bool operator<(const Signature& o) const { return parts_ < o.parts_; }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }

private:
    void validate() const {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1]) throw ShapeError("signature not weakly decreasing: " + str());
        if (!parts_.empty() && parts_.back() < 0) throw ShapeError("signature has a negative part");
    }

    std::vector<long> parts_;
};

/// Parses "(a,b,c)" or "a,b,c"; "()" and "" give the empty signature.
inline Signature parse_signature(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
    std::vector<long> parts;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) parts.push_back(std::stol(tok));
    }
    return Signature(std::move(parts));
}

/// Signature confined to Box(bound, M): M parts, each <= bound.
class BoxedSignature {
public:
    BoxedSignature(Signature sig, long bound) : sig_(std::move(sig)), bound_(bound) {
        if (!sig_.empty() && sig_[0] > bound_)
            throw ShapeError("signature exceeds box bound " + std::to_string(bound_));
    }
    const Signature& signature() const { return sig_; }
    long bound() const { return bound_; }

private:
    Signature sig_;
    long bound_;
};

/// lambda'_i = #{j : lambda_j >= i}, i = 1..bound; an involution between
/// Sign_M^{<=N} and Sign_N^{<=M}.
inline BoxedSignature transpose(const BoxedSignature& boxed) {
    const Signature& lam = boxed.signature();
    std::vector<long> tr(static_cast<std::size_t>(boxed.bound()));
    for (std::size_t i = 0; i < tr.size(); ++i) {
        long level = static_cast<long>(i) + 1;
        tr[i] = static_cast<long>(std::count_if(lam.parts().begin(), lam.parts().end(),
                                                [level](long p) { return p >= level; }));
    }
    return BoxedSignature(Signature(std::move(tr)), static_cast<long>(lam.size()));
}

inline Signature transpose(const Signature& lam, long bound) {
    return transpose(BoxedSignature(lam, bound)).signature();
}

/// mu < lambda interlace: lambda_1 >= mu_1 >= lambda_2 >= ... The chain ends
/// at lambda_{k+1} when lambda is one part longer, and at mu_N for equal
/// lengths (last inequality dropped).
inline bool interlaces(const Signature& mu, const Signature& lam) {
    if (lam.size() != mu.size() && lam.size() != mu.size() + 1)
        throw ShapeError("interlaces: lengths differ by more than 1");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!(lam.part(i) >= mu[i])) return false;
        if (i + 1 < lam.size() && !(mu[i] >= lam[i + 1])) return false;
    }
    return true;
}

/// transposed interlacing mu <' lambda, i.e. mu' < lambda'
inline bool interlaces_transposed(const Signature& mu, const Signature& lam) {
    if (mu.size() != lam.size()) throw ShapeError("transposed interlacing needs equal lengths");
    long bound = std::max(lam.empty() ? 0L : lam[0], mu.empty() ? 0L : mu[0]);
    return interlaces(transpose(mu, bound), transpose(lam, bound));
}

inline bool contains(const Signature& mu, const Signature& lam) {
    // mu subseteq lambda as Young diagrams
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lam.part(i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration. All iterators are materialized: the index sets in the sums we
// verify stay small (documented caps), and deterministic lexicographic order
// matters more than laziness.

/// All of Sign_N with lambda_1 <= bound.
inline std::vector<Signature> enumerate_boxed(std::size_t n_parts, long bound) {
    if (bound < 0) throw DomainError("enumerate_boxed: negative bound");
    std::vector<Signature> out;
    std::vector<long> cur(n_parts);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long maxval) {
        if (pos == n_parts) {
            out.push_back(Signature(cur));
            return;
        }
        for (long v = maxval; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

/// All of Sign_N with |lambda| <= size bound.
inline std::vector<Signature> enumerate_by_weight(std::size_t n_parts, long max_weight) {
    if (max_weight < 0) throw DomainError("enumerate_by_weight: negative bound");
    std::vector<Signature> out;
    for (const auto& s : enumerate_boxed(n_parts, max_weight))
        if (s.weight() <= max_weight) out.push_back(s);
    return out;
}

/// mu in Sign_{k-1} or Sign_k with mu < lambda (below = interlacers under lambda).
inline std::vector<Signature> enumerate_interlacers_below(const Signature& lam, std::size_t mu_parts) {
    if (mu_parts + 1 != lam.size() && mu_parts != lam.size())
        throw ShapeError("enumerate_interlacers_below: incompatible sizes");
    std::vector<Signature> out;
    std::vector<long> cur(mu_parts);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == mu_parts) {
            out.push_back(Signature(cur));
            return;
        }
        long hi = lam[pos];
        if (pos > 0) hi = std::min(hi, cur[pos - 1]);
        long lo = pos + 1 < lam.size() ? lam[pos + 1] : 0;
        for (long v = hi; v >= lo; --v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// nu in Sign_{k+1} or Sign_k with lambda < nu and nu_1 <= cap.
inline std::vector<Signature> enumerate_interlacers_above(const Signature& lam, std::size_t nu_parts,
                                                          long cap) {
    if (nu_parts != lam.size() && nu_parts != lam.size() + 1)
        throw ShapeError("enumerate_interlacers_above: incompatible sizes");
    if (cap < 0) throw DomainError("enumerate_interlacers_above: cap required for infinite domain");
    std::vector<Signature> out;
    std::vector<long> cur(nu_parts);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == nu_parts) {
            out.push_back(Signature(cur));
            return;
        }
        long hi = pos == 0 ? cap : std::min(cur[pos - 1], pos <= lam.size() ? lam[pos - 1] : 0);
        long lo = pos < lam.size() ? lam[pos] : 0;
        if (pos == 0 && !lam.empty()) lo = lam[0];
        if (pos == 0 && lam.empty()) lo = 0;
        for (long v = hi; v >= lo; --v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Gelfand-Tsetlin pattern: interlacing chain lambda^1 < ... < lambda^N.
struct GTPattern {
    std::vector<Signature> levels;

    explicit GTPattern(std::vector<Signature> lv) : levels(std::move(lv)) {
        for (std::size_t k = 0; k < levels.size(); ++k) {
            if (levels[k].size() != k + 1) throw ShapeError("GT pattern: level k must lie in Sign_k");
            if (k > 0 && !interlaces(levels[k - 1], levels[k]))
                throw ShapeError("GT pattern: levels fail to interlace");
        }
    }
};

/// All GT patterns with top row lambda.
inline std::vector<GTPattern> enumerate_gt_patterns(const Signature& lam) {
    std::vector<GTPattern> out;
    std::vector<Signature> chain(lam.size());
    if (lam.empty()) return out;
    chain[lam.size() - 1] = lam;
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (level == 0) {
            out.push_back(GTPattern(chain));
            return;
        }
        for (const auto& mu : enumerate_interlacers_below(chain[level], level)) {
            chain[level - 1] = mu;
            rec(level - 1);
        }
    };
    rec(lam.size() - 1);
    return out;
}

} // namespace sqwit
