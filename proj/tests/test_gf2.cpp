#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "polcount/gf2.hpp"
#include "polcount/unit_signatures.hpp"
#include "support.hpp"

using namespace polcount;

namespace {

// Rank as log2 of the size of the row span, by enumerating all subsets.
std::size_t span_rank(const std::vector<std::vector<int>>& rows) {
    std::set<std::vector<int>> span;
    const std::size_t n = rows.size();
    const std::size_t cols = n == 0 ? 0 : rows[0].size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> v(cols, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) {
                for (std::size_t j = 0; j < cols; ++j) v[j] ^= rows[i][j];
            }
        }
        span.insert(v);
    }
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

} // namespace

TEST(F2Rank, Examples) {
    EXPECT_EQ(f2_rank(std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), 0U);
    for (std::size_t n : {1U, 5U, 64U, 65U, 130U}) {
        std::vector<std::vector<int>> id(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        EXPECT_EQ(f2_rank(id), n);
    }
    EXPECT_EQ(f2_rank(std::vector<std::vector<int>>{{1, 1}, {1, 1}}), 1U);
}

TEST(F2Rank, RejectsBadInput) {
    EXPECT_THROW(gf2::Matrix::from_rows({{1, 0}, {1}}), domain_error);
    EXPECT_THROW(gf2::Matrix::from_rows({{1, 2}}), domain_error);
}

TEST(F2Rank, MatchesSpanOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = support::random_bits(rng, 1 + rng() % 10, 1 + rng() % 12);
        ASSERT_EQ(f2_rank(m), span_rank(m));
    }
}

TEST(F2Rank, InvariantUnderRedundantRowsAndColumnPermutation) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t cols = 1 + rng() % 150;
        auto m = support::random_bits(rng, 1 + rng() % 80, cols);
        const std::size_t r = f2_rank(m);

        auto aug = m;
        const std::size_t extra = 1 + rng() % 20;
        for (std::size_t k = 0; k < extra; ++k) {
            std::vector<int> v(cols, 0);
            for (const auto& row : m) {
                if (rng() & 1U) {
                    for (std::size_t j = 0; j < cols; ++j) v[j] ^= row[j];
                }
            }
            aug.insert(aug.begin() + static_cast<std::ptrdiff_t>(rng() % (aug.size() + 1)), v);
        }
        ASSERT_EQ(f2_rank(aug), r);

        std::vector<std::size_t> perm(cols);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto permuted = m;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < cols; ++j) permuted[i][j] = m[i][perm[j]];
        }
        ASSERT_EQ(f2_rank(permuted), r);
    }
}

TEST(Nullspace, VectorsAreInKernelAndIndependent) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t cols = 1 + rng() % 40;
        const auto rows = support::random_bits(rng, rng() % 30, cols);
        gf2::Matrix m(cols);
        for (const auto& r : rows) {
            gf2::BitRow b(cols);
            for (std::size_t j = 0; j < cols; ++j) b.set(j, r[j] != 0);
            m.push_row(b);
        }
        const auto ns = gf2::nullspace(m);
        ASSERT_EQ(ns.size() + gf2::rank(m), cols);
        gf2::Matrix basis(cols);
        for (const auto& v : ns) {
            for (const auto& row : m.all_rows()) ASSERT_FALSE(row.dot(v));
            basis.push_row(v);
        }
        ASSERT_EQ(gf2::rank(basis), ns.size());
    }
}

TEST(BitRow, Basics) {
    gf2::BitRow r(130);
    EXPECT_FALSE(r.any());
    r.set(0);
    r.set(129);
    EXPECT_EQ(r.count(), 2U);
    EXPECT_EQ(r.lowest(), 0U);
    r.flip(0);
    EXPECT_EQ(r.lowest(), 129U);
    EXPECT_TRUE(r.get(129));
}
