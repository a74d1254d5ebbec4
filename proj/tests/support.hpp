#pragma once

// Oracles and random generators shared by the unit tests and the acceptance run.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "polcount/chevalley_weil.hpp"
#include "polcount/siegel.hpp"

namespace support {

using Dims = std::vector<std::int64_t>;
using polcount::CoverSignature;
using polcount::EisMatrix;
using polcount::EisensteinRational;
using polcount::IntMatrix;
using polcount::OddPrime;
using polcount::SiegelPoint;

// All p-tuples summing to g with n_i + n_{p-i} constant and positive.
inline std::vector<Dims> brute_force_tuples(std::int64_t g, std::int64_t p) {
    std::vector<Dims> out;
    Dims cur(static_cast<std::size_t>(p), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == cur.size()) {
            cur[i] = left;
            const std::int64_t c = cur[1] + cur[static_cast<std::size_t>(p - 1)];
            bool ok = c >= 1;
            for (std::int64_t j = 1; j < p && ok; ++j) {
                ok = cur[static_cast<std::size_t>(j)] + cur[static_cast<std::size_t>(p - j)] == c;
            }
            if (ok) out.push_back(cur);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, g);
    return out;
}

inline Dims orbit_max(const Dims& d, std::int64_t p) {
    Dims best = d;
    for (std::int64_t k = 1; k < p; ++k) {
        Dims c(d.size());
        for (std::int64_t i = 0; i < p; ++i) c[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(k * i % p)];
        best = std::max(best, c);
    }
    return best;
}

// Canonical classes, lexicographically descending.
inline std::vector<Dims> brute_force_classes(std::int64_t g, std::int64_t p) {
    std::set<Dims> canon;
    for (const auto& d : brute_force_tuples(g, p)) canon.insert(orbit_max(d, p));
    return {canon.rbegin(), canon.rend()};
}

inline std::int64_t dimension_oracle(const Dims& d, std::int64_t p) {
    std::int64_t s = d[0] * (d[0] + 1) / 2;
    for (std::int64_t i = 1; i <= (p - 1) / 2; ++i) s += d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(p - i)];
    return s;
}

// gamma <= 5, p <= 31, r <= 12, and 2 gamma - 2 + r >= 1.
inline CoverSignature random_signature(std::mt19937_64& rng) {
    static const std::vector<std::int64_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    while (true) {
        const std::int64_t p = primes[rng() % primes.size()];
        const auto gamma = static_cast<std::int64_t>(rng() % 6);
        const auto r = static_cast<std::int64_t>(rng() % 13);
        if (2 * gamma - 2 + r < 1 || r == 1) continue;
        Dims rot;
        std::int64_t sum = 0;
        for (std::int64_t k = 0; k + 1 < r; ++k) {
            rot.push_back(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1)));
            sum += rot.back();
        }
        if (r > 0) {
            const std::int64_t last = (p - sum % p) % p;
            if (last == 0) continue;
            rot.push_back(last);
        }
        return CoverSignature(gamma, OddPrime(p), rot);
    }
}

inline std::vector<std::vector<int>> random_bits(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
    for (auto& r : m) {
        for (auto& x : r) x = static_cast<int>(rng() & 1U);
    }
    return m;
}

inline EisensteinRational random_eisenstein(std::mt19937_64& rng) {
    auto q = [&] {
        mpq_class v(static_cast<long>(rng() % 15) - 7, static_cast<long>(rng() % 5) + 1);
        v.canonicalize();
        return v;
    };
    mpq_class x = q();
    return {x, q()};
}

inline SiegelPoint random_point(std::mt19937_64& rng, std::size_t g) {
    EisMatrix z(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = i; j < g; ++j) z(i, j) = z(j, i) = random_eisenstein(rng);
    }
    return SiegelPoint(z);
}

// Translations [[I, S], [0, I]], basis changes [[U, 0], [0, U^-T]] and J.
inline IntMatrix random_generator(std::mt19937_64& rng, std::size_t g) {
    const IntMatrix id = IntMatrix::identity(g);
    const IntMatrix zero(g, g);
    const std::size_t i = rng() % g;
    const std::size_t j = rng() % g;
    const long sign = (rng() & 1U) != 0 ? 1 : -1;
    switch (rng() % 3) {
    case 0: {
        IntMatrix s(g, g);
        s(i, j) = sign;
        s(j, i) = sign;
        return IntMatrix::from_blocks(id, s, zero, id);
    }
    case 1: {
        if (i == j) return polcount::symplectic_form(g);
        IntMatrix u = id;
        u(i, j) = sign;
        IntMatrix uit = id;
        uit(j, i) = -sign;
        return IntMatrix::from_blocks(u, zero, zero, uit);
    }
    default: return polcount::symplectic_form(g);
    }
}

inline IntMatrix random_symplectic(std::mt19937_64& rng, std::size_t g) {
    IntMatrix m = IntMatrix::identity(2 * g);
    const std::size_t len = 1 + rng() % 6;
    for (std::size_t k = 0; k < len; ++k) m = m * random_generator(rng, g);
    return m;
}

} // namespace support
