#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqwit/signatures.hpp"

using namespace sqwit;

namespace {
long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST_CASE("transpose") {
    BoxedSignature lam(Signature{5, 4, 1, 1}, 7);
    CHECK(transpose(lam).signature() == Signature{4, 2, 2, 2, 1, 0, 0});
    CHECK(transpose(BoxedSignature(Signature{0, 0, 0}, 4)).signature() == Signature{0, 0, 0, 0});
    // involution on all of Box(4,4)
    for (const auto& sig : enumerate_boxed(4, 4)) {
        BoxedSignature boxed(sig, 4);
        CHECK(transpose(transpose(boxed)).signature() == sig);
    }
    CHECK_THROWS_AS(BoxedSignature(Signature{5, 1}, 4), ShapeError);
}

TEST_CASE("interlacing") {
    CHECK_FALSE(interlaces(Signature{1, 0}, Signature{3, 3, 2}));
    CHECK(interlaces(Signature{2, 1}, Signature{3, 2, 1}));
    CHECK(interlaces(Signature{2, 1}, Signature{2, 1}));  // equal length, mu = lambda
    CHECK(interlaces(Signature{3, 1}, Signature{3, 2}));  // equal length chain 3>=3>=2>=1
    CHECK_FALSE(interlaces(Signature{1, 0}, Signature{3, 2}));
    CHECK_THROWS_AS(interlaces(Signature{1}, Signature{3, 2, 1}), ShapeError);
    // transposed interlacing: (1,1) <' (2,2) but not (2,0) <' (2,2)... check both
    CHECK(interlaces_transposed(Signature{1, 1}, Signature{2, 2}));
    CHECK(interlaces_transposed(Signature{2, 1}, Signature{2, 2}));
}

TEST_CASE("enumeration") {
    auto sigs = enumerate_boxed(2, 1);
    CHECK(sigs == std::vector<Signature>{Signature{0, 0}, Signature{1, 0}, Signature{1, 1}});
    CHECK(enumerate_boxed(1, 0) == std::vector<Signature>{Signature{0}});
    auto below = enumerate_interlacers_below(Signature{2, 0}, 1);
    CHECK(below == std::vector<Signature>{Signature{0}, Signature{1}, Signature{2}});
    // |Sign_M^{<=N}| = C(N+M, M), exhaustively for N,M <= 6
    for (long n = 0; n <= 6; ++n)
        for (long m = 1; m <= 6; ++m)
            CHECK(static_cast<long>(enumerate_boxed(m, n).size()) == binom(n + m, m));
    CHECK_THROWS_AS(enumerate_interlacers_above(Signature{1}, 2, -1), DomainError);
    // deterministic lexicographic order, each element exactly once
    auto all = enumerate_boxed(3, 3);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
}

TEST_CASE("interlacers above") {
    auto above = enumerate_interlacers_above(Signature{2, 1}, 3, 4);
    for (const auto& nu : above) CHECK(interlaces(Signature{2, 1}, nu));
    // count by hand: nu_1 in [2,4], nu_2 in [1,2], nu_3 in [0,1] -> 3*2*2
    CHECK(above.size() == 12);
    auto equal_len = enumerate_interlacers_above(Signature{2, 1}, 2, 3);
    for (const auto& nu : equal_len) CHECK(interlaces(Signature{2, 1}, nu));
    CHECK(equal_len.size() == 4); // nu_1 in [2,3], nu_2 in [1,2]
}

TEST_CASE("multiplicity round trip") {
    for (const auto& sig : enumerate_boxed(4, 5)) {
        std::vector<long> rebuilt;
        for (long v = 5; v >= 1; --v)
            for (long c = 0; c < sig.multiplicity(v); ++c) rebuilt.push_back(v);
        while (rebuilt.size() < sig.size()) rebuilt.push_back(0);
        CHECK(Signature(rebuilt) == sig);
    }
}

TEST_CASE("GT patterns") {
    auto pats = enumerate_gt_patterns(Signature{2, 1, 0});
    for (const auto& p : pats) {
        CHECK(p.levels.size() == 3);
        CHECK(interlaces(p.levels[0], p.levels[1]));
        CHECK(interlaces(p.levels[1], p.levels[2]));
    }
    // dim of GL(3) irrep (2,1,0) = 8
    CHECK(pats.size() == 8);
}

TEST_CASE("text round trip") {
    CHECK(parse_signature("(3,2,0)") == Signature{3, 2, 0});
    CHECK(parse_signature("()") == Signature());
    CHECK(Signature{3, 2, 0}.str() == "(3,2,0)");
}
