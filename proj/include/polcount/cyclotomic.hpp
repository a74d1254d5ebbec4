#pragma once

// Signs of the cyclotomic units
//     eps_a = (zeta^a - zeta^-a) / (zeta - zeta^-1),   zeta = exp(2 pi i / p),
// under the real embeddings sigma_b : zeta -> zeta^b of Q(zeta + zeta^-1),
// 2 <= a <= (p-1)/2 and 1 <= b <= (p-1)/2. Since
//     sigma_b(eps_a) = sin(2 pi a b / p) / sin(2 pi b / p),
// every sign reduces to the position of a residue mod p; no floating point.

#include <cstdint>
#include <string>

#include "polcount/bigfloat.hpp"
#include "polcount/error.hpp"
#include "polcount/primes.hpp"

namespace polcount {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

inline constexpr Sign operator*(Sign a, Sign b) noexcept {
    return static_cast<Sign>(to_int(a) * to_int(b));
}

inline constexpr Sign operator-(Sign a) noexcept { return static_cast<Sign>(-to_int(a)); }

inline constexpr std::int64_t floor_mod(std::int64_t m, std::int64_t p) noexcept {
    std::int64_t r = m % p;
    return r < 0 ? r + p : r;
}

// Sign of sin(2 pi m / p).
inline Sign sin_sign(std::int64_t m, OddPrime p) noexcept {
    const std::int64_t r = floor_mod(m, p.value());
    if (r == 0) return Sign::zero;
    return 2 * r < p.value() ? Sign::positive : Sign::negative;
}

namespace detail {
inline void check_unit_indices(std::int64_t a, std::int64_t b, OddPrime p) {
    if (a < 2 || a > p.half()) {
        throw domain_error("cyclotomic unit index a=" + std::to_string(a) + " outside [2, " +
                           std::to_string(p.half()) + "]");
    }
    if (b < 1 || b > p.half()) {
        throw domain_error("embedding index b=" + std::to_string(b) + " outside [1, " +
                           std::to_string(p.half()) + "]");
    }
}
} // namespace detail

// Sign of sigma_b(eps_a). Never zero on valid input.
inline Sign cyclotomic_unit_sign(std::int64_t a, std::int64_t b, OddPrime p) {
    detail::check_unit_indices(a, b, p);
    return sin_sign(a * b, p) * sin_sign(b, p);
}

// sin(2 pi a b / p) / sin(2 pi b / p) evaluated with `precision_bits` of
// working precision. Used only to cross-check cyclotomic_unit_sign.
inline BigFloat cyclotomic_unit_approx(std::int64_t a, std::int64_t b, OddPrime p, long precision_bits) {
    detail::check_unit_indices(a, b, p);
    if (precision_bits < 16) throw domain_error("precision below 16 bits");
    const auto bits = static_cast<mpfr_prec_t>(precision_bits);
    BigFloat step = BigFloat::pi(bits);
    step.mul_si(2).div_si(static_cast<long>(p.value()));
    BigFloat num = step;
    num.mul_si(static_cast<long>(floor_mod(a * b, p.value())));
    BigFloat den = step;
    den.mul_si(static_cast<long>(b));
    return num.sin() / den.sin();
}

} // namespace polcount
