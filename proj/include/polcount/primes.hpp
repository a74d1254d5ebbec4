#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polcount/error.hpp"

namespace polcount {

inline constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return r;
}

// Deterministic Miller-Rabin for the full 64-bit range.
inline constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t max) {
    std::vector<std::uint64_t> out;
    if (max < 2) return out;
    std::vector<bool> composite(max + 1, false);
    for (std::uint64_t i = 2; i <= max; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= max; j += i) composite[j] = true;
    }
    return out;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Multiplicative order of a modulo the prime m (a coprime to m).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    std::uint64_t order = m - 1;
    for (std::uint64_t q : prime_factors(m - 1)) {
        while (order % q == 0 && powmod(a, order / q, m) == 1) order /= q;
    }
    return order;
}

// An odd prime p >= 3. The checked constructor is the only way to build one.
class OddPrime {
public:
    explicit OddPrime(std::int64_t value) : value_(value) {
        if (value < 3 || !is_prime(static_cast<std::uint64_t>(value))) {
            throw domain_error("not an odd prime: " + std::to_string(value));
        }
    }

    [[nodiscard]] constexpr std::int64_t value() const noexcept { return value_; }
    // (p - 1) / 2: the degree of the real subfield, and its number of real embeddings.
    [[nodiscard]] constexpr std::int64_t half() const noexcept { return (value_ - 1) / 2; }

    friend constexpr bool operator==(OddPrime, OddPrime) = default;

private:
    std::int64_t value_;
};

} // namespace polcount
