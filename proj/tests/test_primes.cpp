#include <gtest/gtest.h>

#include "polcount/primes.hpp"

using namespace polcount;

namespace {

bool trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

TEST(Primes, MatchesTrialDivision) {
    for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), trial_division(n)) << n;
}

TEST(Primes, LargeValues) {
    EXPECT_TRUE(is_prime(1'000'000'007ULL));
    EXPECT_TRUE(is_prime(18446744073709551557ULL));
    EXPECT_FALSE(is_prime(3215031751ULL)); // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(1'000'000'007ULL * 998'244'353ULL));
}

TEST(Primes, SieveCount) {
    EXPECT_EQ(primes_up_to(500).size(), 95U);
    EXPECT_TRUE(primes_up_to(1).empty());
    EXPECT_EQ(primes_up_to(2), std::vector<std::uint64_t>{2});
}

TEST(Primes, MultiplicativeOrderBruteForce) {
    for (std::uint64_t m : {3ULL, 7ULL, 29ULL, 311ULL}) {
        for (std::uint64_t a = 1; a < m; ++a) {
            std::uint64_t k = 1;
            for (std::uint64_t x = a % m; x != 1; x = x * a % m) ++k;
            ASSERT_EQ(multiplicative_order(a, m), k);
        }
    }
}

TEST(OddPrime, Validation) {
    EXPECT_EQ(OddPrime(311).half(), 155);
    EXPECT_THROW(OddPrime(2), domain_error);
    EXPECT_THROW(OddPrime(9), domain_error);
    EXPECT_THROW(OddPrime(-7), domain_error);
    EXPECT_THROW(OddPrime(1), domain_error);
}
