#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "polcount/chevalley_weil.hpp"
#include "support.hpp"

using namespace polcount;

namespace {

using support::Dims;
using support::random_signature;

// Holomorphic differentials x^i dx / y^j on y^p = f(x), deg f = n: there are
// ceil(n j / p) - 1 of them, in the eigenspace of index p - j.
Dims superelliptic_oracle(std::int64_t p, std::int64_t n) {
    Dims d(static_cast<std::size_t>(p), 0);
    for (std::int64_t j = 1; j < p; ++j) d[static_cast<std::size_t>(p - j)] = (n * j + p - 1) / p - 1;
    return d;
}

} // namespace

TEST(CoverSignature, Validation) {
    EXPECT_THROW(CoverSignature(-1, OddPrime(3), {1, 2}), domain_error);
    EXPECT_THROW(CoverSignature(0, OddPrime(3), {1, 3}), domain_error);
    EXPECT_THROW(CoverSignature(0, OddPrime(3), {0, 3}), domain_error);
    EXPECT_THROW(CoverSignature(0, OddPrime(3), {}), domain_error);
    try {
        CoverSignature(0, OddPrime(3), {1, 1});
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("sum to 2"), std::string::npos);
    }
}

TEST(RiemannHurwitz, Examples) {
    EXPECT_EQ(riemann_hurwitz_genus(CoverSignature(1, OddPrime(3), {1, 1, 1})), 4);
    EXPECT_EQ(riemann_hurwitz_genus(CoverSignature(0, OddPrime(311), {1, 1, 1, 1, 1, 306})), 620);
    EXPECT_EQ(riemann_hurwitz_genus(CoverSignature(1, OddPrime(3), {})), 1);
}

TEST(EigenDims, Examples) {
    EXPECT_EQ(eigen_dims(CoverSignature(1, OddPrime(3), {1, 1, 1})).dims(), (Dims{1, 2, 1}));
    EXPECT_EQ(eigen_dims(CoverSignature(2, OddPrime(3), {})).dims(), (Dims{2, 1, 1}));
    const Dims d = eigen_dims(CoverSignature(0, OddPrime(311), {1, 1, 1, 1, 1, 306})).dims();
    EXPECT_EQ(d[0], 0);
    for (std::int64_t i = 1; i <= 310; ++i) {
        const std::int64_t want = i <= 62 ? 4 : i <= 124 ? 3 : i <= 186 ? 2 : i <= 248 ? 1 : 0;
        ASSERT_EQ(d[static_cast<std::size_t>(i)], want) << i;
    }
    // c = 2 gamma - 2 + r = 0: no eigen tuple
    EXPECT_THROW(eigen_dims(CoverSignature(1, OddPrime(3), {})), domain_error);
}

TEST(Superelliptic, Examples) {
    const auto s311 = superelliptic_signature(OddPrime(311), 5);
    EXPECT_EQ(s311.signature.rotations(), (Dims{1, 1, 1, 1, 1, 306}));
    EXPECT_EQ(s311.genus, 620);
    const auto s5 = superelliptic_signature(OddPrime(5), 5);
    EXPECT_EQ(s5.signature.rotations(), (Dims{1, 1, 1, 1, 1}));
    EXPECT_EQ(s5.genus, 6);
    const auto s3 = superelliptic_signature(OddPrime(3), 4);
    EXPECT_EQ(s3.signature.rotations(), (Dims{1, 1, 1, 1, 2}));
    EXPECT_EQ(s3.genus, 3);
    EXPECT_THROW(superelliptic_signature(OddPrime(3), 2), domain_error);
}

TEST(Superelliptic, MatchesDifferentialOracle) {
    for (std::int64_t p : {3, 5, 7, 11, 13, 31, 311}) {
        for (std::int64_t n = 3; n <= 12; ++n) {
            const auto s = superelliptic_signature(OddPrime(p), n);
            const Dims want = superelliptic_oracle(p, n);
            std::int64_t g = 0;
            for (auto v : want) g += v;
            ASSERT_EQ(s.genus, g) << p << " " << n;
            ASSERT_EQ(s.genus, n % p == 0 ? (p - 1) * (n - 2) / 2 : (p - 1) * (n - 1) / 2);
            if (2 * s.signature.gamma() - 2 + s.signature.branch_points() < 1) continue;
            ASSERT_EQ(eigen_dims(s.signature).dims(), want) << p << " " << n;
        }
    }
}

TEST(ComponentOfCover, Examples) {
    const auto c620 = component_of_cover(superelliptic_signature(OddPrime(311), 5).signature);
    EXPECT_EQ(c620.dimension, 310);
    EXPECT_EQ(c620.pi, PiClass(KnownPi{1024}));
    const auto c4 = component_of_cover(CoverSignature(1, OddPrime(3), {1, 1, 1}));
    EXPECT_EQ(c4.dimension, 3);
    EXPECT_EQ(c4.pi, PiClass(KnownPi{1}));
    const auto c1 = component_of_cover(CoverSignature(0, OddPrime(3), {1, 1, 1}));
    EXPECT_EQ(c1.tuple.dims(), (Dims{0, 1, 0}));
    EXPECT_EQ(c1.dimension, 0);
    EXPECT_EQ(c1.pi, PiClass(UnknownPi{UnknownReason::zero_dimensional}));
}

TEST(EigenDims, RandomSignatureProperties) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const CoverSignature s = random_signature(rng);
        const std::int64_t p = s.p().value();
        const Dims n = eigen_dims(s).dims();
        std::int64_t sum = 0;
        for (auto v : n) sum += v;
        ASSERT_EQ(sum, riemann_hurwitz_genus(s));
        ASSERT_EQ(n[0], s.gamma());
        const std::int64_t c = 2 * s.gamma() - 2 + s.branch_points();
        for (std::int64_t j = 1; j < p; ++j) ASSERT_EQ(n[static_cast<std::size_t>(j)] + n[static_cast<std::size_t>(p - j)], c);

        Dims shuffled = s.rotations();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        ASSERT_EQ(eigen_dims(CoverSignature(s.gamma(), s.p(), shuffled)).dims(), n);

        const auto k0 = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
        Dims scaled;
        for (auto a : s.rotations()) scaled.push_back(a * k0 % p);
        const Dims m = eigen_dims(CoverSignature(s.gamma(), s.p(), scaled)).dims();
        for (std::int64_t j = 0; j < p; ++j) ASSERT_EQ(m[static_cast<std::size_t>(j)], n[static_cast<std::size_t>(j * k0 % p)]);
    }
}
