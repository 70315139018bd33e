#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sqwit/rng.hpp"
#include "sqwit/rsk.hpp"
#include "sqwit/yang_baxter.hpp"

using namespace sqwit;

namespace {
const YbeParams<Rational> P{rat(1, 2), rat(-1, 3), rat(1, 4), rat(1, 6)};
const YbeParams<Rational> Psqw{rat(1, 2), rat(-1, 3), rat(1, 4), rat(1, 5)};
} // namespace

TEST_CASE("Yang-Baxter equations hold exactly, boundary occupations <= 3") {
    const long cap = 3;
    for (long i1 = 0; i1 <= cap; ++i1)
        for (long i2 = 0; i2 <= cap; ++i2)
            for (long i3 = 0; i3 <= cap; ++i3)
                for (long j1 = 0; j1 <= cap; ++j1)
                    for (long j2 = 0; j2 <= cap; ++j2)
                        for (long j3 = 0; j3 <= cap; ++j3) {
                            // sqW/sqW bulk, all occupations free
                            auto rww = verify_ybe(YbeInstance{YbeId::RWW, i1, i2, i3, j1, j2, j3}, Psqw);
                            CHECK(rww.balanced);
                            auto rwws = verify_ybe(YbeInstance{YbeId::RWWStar, i1, i2, i3, j1, j2, j3}, Psqw);
                            CHECK(rwws.balanced);
                            // sqW/sHL bulk: horizontal slots restricted to {0,1}
                            if (i1 <= 1 && j1 <= 1) {
                                auto rcal = verify_ybe(YbeInstance{YbeId::RWwStar, i1, i2, i3, j1, j2, j3}, P);
                                CHECK(rcal.balanced);
                            }
                        }
}

TEST_CASE("wall Yang-Baxter equations") {
    const long cap = 3;
    // RWW wall: two-index boundary (i1, i2; j1, j2)
    for (long i1 = 0; i1 <= cap; ++i1)
        for (long i2 = 0; i2 <= cap; ++i2)
            for (long j1 = 0; j1 <= cap; ++j1)
                for (long j2 = 0; j2 <= cap; ++j2) {
                    auto rep = verify_ybe(YbeInstance{YbeId::RWWWall, i1, i2, 0, j1, j2, 0}, Psqw);
                    CHECK(rep.balanced);
                }
    // single-term sanity: i2 = j1 = 0 makes both sides one-term and equal
    auto tiny = verify_ybe(YbeInstance{YbeId::RWWWall, 1, 0, 0, 0, 1, 0}, Psqw);
    CHECK(tiny.balanced);

    // RWwStar wall: i1 in {0,1}, others free
    for (long i1 = 0; i1 <= 1; ++i1)
        for (long i2 = 0; i2 <= cap; ++i2)
            for (long i3 = 0; i3 <= cap; ++i3)
                for (long j2 = 0; j2 <= cap; ++j2)
                    for (long j3 = 0; j3 <= cap; ++j3) {
                        auto rep = verify_ybe(YbeInstance{YbeId::RWwStarWall, i1, i2, i3, 0, j2, j3}, P);
                        CHECK(rep.balanced);
                    }
}

TEST_CASE("RWWStar wall: exact equality, cross-ratio family witness is 1") {
    std::vector<YbeInstance> family;
    for (long i1 = 0; i1 <= 2; ++i1)
        for (long i2 = 0; i2 <= 2; ++i2)
            for (long i3 = 0; i3 <= 3; ++i3)
                for (long j2 = 0; j2 <= 2; ++j2)
                    for (long j3 = 0; j3 <= 3; ++j3) {
                        YbeInstance inst{YbeId::RWWStarWall, i1, i2, i3, 0, j2, j3};
                        family.push_back(inst);
                        CHECK(verify_ybe(inst, Psqw).balanced);
                    }
    Rational num, den;
    CHECK(verify_ybe_wall_family(family, Psqw, &num, &den));
    CHECK(num == den);
}

TEST_CASE("bijectivization reversibility") {
    // two-element instance from the sqW/sHL wall equation (i2+i3-i1 = j2+j3)
    YbeInstance inst{YbeId::RWwStarWall, 1, 2, 2, 0, 1, 2};
    auto left = ybe_left_terms(inst, P);
    auto right = ybe_right_terms(inst, P);
    REQUIRE(left.size() == 2);
    REQUIRE(right.size() == 2);
    auto [lo, hi] = feasible_gamma(left, right);
    for (Rational gamma : {lo, Rational((lo + hi) / 2), hi}) {
        auto bij = build_bijectivization(left, right, gamma);
        CHECK(bij.reversibility_residual() == rat(0));
        CHECK(bij.row_sum_residual() == rat(0));
    }
    CHECK_THROWS_AS(build_bijectivization(left, right, Rational(hi + rat(1, 1000000))),
                    DomainError);
    // proportional default works on wider identities (positivity range params)
    const YbeParams<Rational> Ppos{rat(1, 2), rat(-1, 3), rat(1, 2), rat(2, 5)};
    YbeInstance wide{YbeId::RWWStarWall, 2, 1, 3, 0, 1, 1};
    auto bigl = ybe_left_terms(wide, Ppos);
    auto bigr = ybe_right_terms(wide, Ppos);
    REQUIRE(!bigl.empty());
    auto bij = build_bijectivization(bigl, bigr, rat(-1));
    CHECK(bij.reversibility_residual() == rat(0));
    CHECK(bij.row_sum_residual() == rat(0));
    // |A| = |B| = 1 is deterministic
    YbeInstance tiny{YbeId::RWwStarWall, 0, 0, 0, 0, 0, 0};
    auto bijt = build_bijectivization(ybe_left_terms(tiny, P), ybe_right_terms(tiny, P), rat(-1));
    CHECK(bijt.fwd.size() == 1);
    CHECK(bijt.fwd[0][0] == rat(1));
}

TEST_CASE("RSK toggles") {
    // k=2, lambda_1=3, mu_1=1 -> nu_1 = 5
    Signature nu = rsk_local_move(Signature{3}, Signature{1}, Signature{1}, 2);
    CHECK(nu.part(0) == 5);
    // toggle inverse recovers (kappa, k) exhaustively for parts <= 4
    for (const auto& kappa : enumerate_boxed(2, 4))
        for (const auto& lam : enumerate_interlacers_above(kappa, 3, 4))
            for (const auto& mu : enumerate_interlacers_above(kappa, 3, 4))
                for (long k = 0; k <= 3; ++k) {
                    Signature out = rsk_local_move(lam, mu, kappa, k);
                    CHECK(interlaces(lam, out.size() > lam.size()
                                              ? out
                                              : Signature([&] {
                                                    auto p = out.parts();
                                                    p.resize(lam.size() + 1, 0);
                                                    return p;
                                                }())));
                    auto [kap2, k2] = rsk_local_move_inverse(lam, mu, out);
                    Signature kap_trim = kappa;
                    while (!kap_trim.empty() && kap_trim[kap_trim.size() - 1] == 0)
                        kap_trim = kap_trim.drop_last();
                    CHECK(kap2 == kap_trim);
                    CHECK(k2 == k);
                }
}

TEST_CASE("growth diagram shape agrees with Schensted on random matrices") {
    Rng rng(2024, 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<long>> m(4, std::vector<long>(4));
        for (auto& row : m)
            for (auto& cell : row) cell = static_cast<long>(rng.next_u64() % 4);
        CHECK(rsk_growth_shape(m) == schensted_shape(m));
    }
}

TEST_CASE("summed reversibility recovers the skew Cauchy identity") {
    // sum over both sides of the two-element wall bijectivization reproduces
    // the YBE sums, i.e. the local piece of the skew Cauchy identity
    YbeInstance inst{YbeId::RWwStarWall, 1, 1, 2, 0, 0, 2};
    auto left = ybe_left_terms(inst, P);
    auto right = ybe_right_terms(inst, P);
    auto interval = feasible_gamma(left, right);
    auto bij = build_bijectivization(left, right, Rational((interval.first + interval.second) / 2));
    Rational lhs(0), rhs(0);
    for (std::size_t a = 0; a < bij.a_weight.size(); ++a) lhs += bij.a_weight[a];
    for (std::size_t b = 0; b < bij.b_weight.size(); ++b) rhs += bij.b_weight[b];
    CHECK(lhs == rhs);
    // and reversibility summed over b gives back w(a)
    for (std::size_t a = 0; a < bij.a_weight.size(); ++a) {
        Rational acc(0);
        for (std::size_t b = 0; b < bij.b_weight.size(); ++b)
            acc += bij.bwd[b][a] * bij.b_weight[b];
        CHECK(acc == bij.a_weight[a]);
    }
}
