#include <gtest/gtest.h>

#include <cmath>

#include "polcount/cyclotomic.hpp"
#include "polcount/cyclo_ring.hpp"

using namespace polcount;

namespace {

// sigma_b(eps_a) = sin(2 pi a b / p) / sin(2 pi b / p), in long double.
long double unit_value(std::int64_t a, std::int64_t b, std::int64_t p) {
    const long double t = 2.0L * 3.141592653589793238462643383279L / static_cast<long double>(p);
    return std::sin(t * static_cast<long double>(a * b % p)) / std::sin(t * static_cast<long double>(b));
}

Sign sign_of(long double x) { return x > 0 ? Sign::positive : (x < 0 ? Sign::negative : Sign::zero); }

} // namespace

TEST(SinSign, Examples) {
    EXPECT_EQ(sin_sign(1, OddPrime(5)), Sign::positive);
    EXPECT_EQ(sin_sign(3, OddPrime(5)), Sign::negative);
    EXPECT_EQ(sin_sign(5, OddPrime(5)), Sign::zero);
    EXPECT_EQ(sin_sign(-1, OddPrime(5)), Sign::negative);
    EXPECT_EQ(sin_sign(0, OddPrime(3)), Sign::zero);
}

TEST(SinSign, ZeroOnlyAtMultiples) {
    for (auto pv : primes_up_to(200)) {
        if (pv == 2) continue;
        const OddPrime p(static_cast<std::int64_t>(pv));
        for (std::int64_t m = -3 * p.value(); m <= 3 * p.value(); ++m) {
            ASSERT_EQ(sin_sign(m, p) == Sign::zero, m % p.value() == 0);
        }
    }
}

TEST(UnitSign, Examples) {
    EXPECT_EQ(cyclotomic_unit_sign(2, 1, OddPrime(5)), Sign::positive);
    EXPECT_EQ(cyclotomic_unit_sign(2, 2, OddPrime(5)), Sign::negative);
    EXPECT_EQ(cyclotomic_unit_sign(2, 1, OddPrime(7)), Sign::positive);
}

TEST(UnitSign, RangeChecks) {
    EXPECT_THROW(cyclotomic_unit_sign(1, 1, OddPrime(7)), domain_error);
    EXPECT_THROW(cyclotomic_unit_sign(4, 1, OddPrime(7)), domain_error);
    EXPECT_THROW(cyclotomic_unit_sign(2, 0, OddPrime(7)), domain_error);
    EXPECT_THROW(cyclotomic_unit_sign(2, 4, OddPrime(7)), domain_error);
    EXPECT_THROW(cyclotomic_unit_sign(2, 1, OddPrime(3)), domain_error);
    EXPECT_THROW(cyclotomic_unit_approx(2, 1, OddPrime(7), 8), domain_error);
}

TEST(UnitApprox, Examples) {
    // eps_2 = zeta + zeta^-1 for p = 5: sigma_1 gives 2cos(2pi/5), sigma_2 gives 2cos(4pi/5).
    const double s1 = cyclotomic_unit_approx(2, 1, OddPrime(5), 64).to_double();
    const double s2 = cyclotomic_unit_approx(2, 2, OddPrime(5), 64).to_double();
    EXPECT_NEAR(s1, 0.6180339887, 1e-9);
    EXPECT_NEAR(s2, -1.6180339887, 1e-9);
    EXPECT_NEAR(s1 * s2, -1.0, 1e-12); // norm of eps_2 is -1
    EXPECT_NEAR(cyclotomic_unit_approx(3, 1, OddPrime(7), 64).to_double(), 0.5549581321, 1e-9);
    EXPECT_NEAR(cyclotomic_unit_approx(3, 3, OddPrime(7), 64).to_double(), 2.2469796037, 1e-9);
}

TEST(UnitSign, AgreesWithFloatingOracle) {
    for (auto pv : primes_up_to(499)) {
        if (pv < 5) continue;
        const auto pi = static_cast<std::int64_t>(pv);
        const OddPrime p(pi);
        for (std::int64_t a = 2; a <= p.half(); ++a) {
            for (std::int64_t b = 1; b <= p.half(); ++b) {
                const Sign s = cyclotomic_unit_sign(a, b, p);
                ASSERT_NE(s, Sign::zero);
                ASSERT_EQ(s, sign_of(unit_value(a, b, pi))) << "p=" << pi << " a=" << a << " b=" << b;
            }
        }
    }
}

TEST(UnitSign, ApproxAgreesOnSmallPrimes) {
    for (std::int64_t pi : {5, 7, 11, 13, 29, 31}) {
        const OddPrime p(pi);
        for (std::int64_t a = 2; a <= p.half(); ++a) {
            for (std::int64_t b = 1; b <= p.half(); ++b) {
                ASSERT_EQ(cyclotomic_unit_sign(a, b, p), static_cast<Sign>(cyclotomic_unit_approx(a, b, p, 64).sign()));
            }
        }
    }
}

TEST(UnitSign, Antisymmetry) {
    // eps_{p-a} = -eps_a, so its sign at sigma_b is sin_sign((p-a)b) sin_sign(b).
    for (std::int64_t pi : {5, 7, 29, 163, 311}) {
        const OddPrime p(pi);
        for (std::int64_t a = 2; a <= p.half(); ++a) {
            for (std::int64_t b = 1; b <= p.half(); ++b) {
                ASSERT_EQ(sin_sign((pi - a) * b, p) * sin_sign(b, p), -cyclotomic_unit_sign(a, b, p));
            }
        }
    }
}

TEST(UnitSign, GaloisEquivariance) {
    // sigma_c(sigma_b eps_a) = sigma_c(eps_ab / eps_b); checked on the floating values.
    const std::int64_t pi = 29;
    for (std::int64_t a = 2; a <= 14; ++a) {
        for (std::int64_t b = 1; b <= 14; ++b) {
            for (std::int64_t c = 1; c <= 14; ++c) {
                const long double lhs = unit_value(a, b * c % pi, pi);
                const long double rhs = unit_value(a * b % pi, c, pi) / unit_value(b, c, pi);
                ASSERT_NEAR(lhs, rhs, 1e-9L * (1 + std::fabs(lhs)));
            }
        }
    }
}

TEST(CycloInt, CyclotomicUnitEvaluates) {
    // Coefficients of eps_a evaluated at zeta^b reproduce the sine quotient.
    for (std::int64_t pi : {7, 13, 31}) {
        for (std::int64_t a = 2; a <= (pi - 1) / 2; ++a) {
            const CycloInt e = CycloInt::cyclotomic_unit(pi, a);
            for (std::int64_t b = 1; b <= (pi - 1) / 2; ++b) {
                long double re = 0;
                for (std::int64_t k = 0; k < pi; ++k) {
                    re += e.coeffs()[static_cast<std::size_t>(k)].get_d() *
                          std::cos(2.0L * 3.141592653589793238L * static_cast<long double>(k * b % pi) / pi);
                }
                ASSERT_NEAR(re, unit_value(a, b, pi), 1e-9L);
            }
        }
    }
}

TEST(CycloInt, RingIdentities) {
    const std::int64_t p = 11;
    const CycloInt z = CycloInt::zeta_power(p, 1);
    CycloInt acc = CycloInt::integer(p, 1);
    for (int k = 0; k < p; ++k) acc = acc * z;
    EXPECT_TRUE(acc.is_one());
    // 1 + zeta + ... + zeta^{p-1} = 0
    CycloInt sum = CycloInt::integer(p, 0);
    for (int k = 0; k < p; ++k) sum = sum + CycloInt::zeta_power(p, k);
    EXPECT_EQ(sum, CycloInt::integer(p, 0));
    const CycloInt e = CycloInt::cyclotomic_unit(p, 3);
    EXPECT_EQ(e.galois(1), e);
    EXPECT_EQ(e.galois(p - 1), e); // real element
    EXPECT_EQ((e * e.galois(2)).galois(3), e.galois(3) * e.galois(6));
}

TEST(CycloModSmall, PowMatchesRepeatedMultiplication) {
    const std::int64_t p = 7;
    const std::uint64_t ell = 3;
    const CycloModSmall x = CycloModSmall::from(CycloInt::cyclotomic_unit(p, 2) + CycloInt::zeta_power(p, 1), ell);
    CycloModSmall acc = CycloModSmall::integer(p, ell, 1);
    for (int k = 0; k <= 40; ++k) {
        ASSERT_EQ(x.pow(mpz_class(k)), acc) << k;
        acc = acc * x;
    }
    EXPECT_EQ(x.frobenius(), x.pow(mpz_class(3)));
}
