#pragma once

// 2-saturation of the cyclotomic units of K = Q(zeta_p + zeta_p^-1).
//
// The cyclotomic units C = <-1, eps_2, ..., eps_h> (h = (p-1)/2) have odd
// index in the full unit group E exactly when the class number of K is odd.
// Otherwise some c in C is a square in E without being one in C, and the
// signature of sqrt(c) can be invisible from C. The loop below:
//
//   1. takes the current basis of C'/C'^2 (C' starts as C);
//   2. intersects the kernel of the sign map with the kernels of quadratic
//      characters at prime ideals above split primes ell = 1 mod 2p; a global
//      square lies in every such kernel;
//   3. for each kernel vector computes the product c and its exact square
//      root via Hensel lifting from a prime inert in Q(zeta_p), checking
//      eta^2 = c in Z[zeta_p];
//   4. replaces one basis element per root and repeats.
//
// When the character kernel is zero, no element of C' outside C'^2 is a
// square in E, so C'/C'^2 -> E/E^2 is injective, hence an isomorphism, and the
// sign rank of the final basis is that of the full unit group.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polcount/bigfloat.hpp"
#include "polcount/cyclo_ring.hpp"
#include "polcount/cyclotomic.hpp"
#include "polcount/error.hpp"
#include "polcount/gf2.hpp"
#include "polcount/primes.hpp"

namespace polcount {

enum class UnitKind { minus_one, cyclotomic, adjoined_root };

struct UnitRecord {
    UnitKind kind = UnitKind::minus_one;
    std::int64_t index = 0; // a for eps_a, sequence number for adjoined roots
    CycloInt value;
    gf2::BitRow negative_at;     // bit b-1 set iff sigma_b(value) < 0
    std::vector<double> log_abs; // log |sigma_b(value)|, b = 1..h

    [[nodiscard]] std::string label() const {
        switch (kind) {
        case UnitKind::minus_one: return "-1";
        case UnitKind::cyclotomic: return "eps_" + std::to_string(index);
        case UnitKind::adjoined_root: return "root_" + std::to_string(index);
        }
        return "?";
    }
};

namespace detail {

inline UnitRecord minus_one_record(OddPrime p) {
    const auto h = static_cast<std::size_t>(p.half());
    UnitRecord r{UnitKind::minus_one, 0, CycloInt::integer(p.value(), -1), gf2::BitRow(h), std::vector<double>(h, 0.0)};
    for (std::size_t b = 0; b < h; ++b) r.negative_at.set(b);
    return r;
}

inline UnitRecord cyclotomic_record(OddPrime p, std::int64_t a) {
    const auto h = static_cast<std::size_t>(p.half());
    UnitRecord r{UnitKind::cyclotomic, a, CycloInt::cyclotomic_unit(p.value(), a), gf2::BitRow(h),
                 std::vector<double>(h)};
    const double two_pi_over_p = 2.0 * M_PI / static_cast<double>(p.value());
    for (std::int64_t b = 1; b <= p.half(); ++b) {
        const auto col = static_cast<std::size_t>(b - 1);
        r.negative_at.set(col, cyclotomic_unit_sign(a, b, p) == Sign::negative);
        const double num = std::sin(two_pi_over_p * static_cast<double>(floor_mod(a * b, p.value())));
        const double den = std::sin(two_pi_over_p * static_cast<double>(b));
        r.log_abs[col] = std::log(std::fabs(num / den));
    }
    return r;
}

// Prime ideals of K above a prime ell = 1 mod 2p, one per embedding index b:
// the ideal (ell, zeta - z^b) of Q(zeta_p) restricted to K.
struct SplitPrime {
    std::uint64_t ell = 0;
    std::vector<std::uint64_t> zetas; // z^b for b = 1..h, z of order p mod ell
};

inline SplitPrime split_prime_after(OddPrime p, std::uint64_t after) {
    const auto step = static_cast<std::uint64_t>(2 * p.value());
    std::uint64_t ell = after - (after % step) + 1;
    if (ell <= after) ell += step;
    while (!is_prime(ell)) ell += step;
    std::uint64_t z = 1;
    for (std::uint64_t x = 2; z == 1; ++x) z = powmod(x, (ell - 1) / static_cast<std::uint64_t>(p.value()), ell);
    SplitPrime sp{ell, {}};
    std::uint64_t zb = 1;
    for (std::int64_t b = 1; b <= p.half(); ++b) {
        zb = mulmod(zb, z, ell);
        sp.zetas.push_back(zb);
    }
    return sp;
}

inline std::uint64_t unit_residue(const UnitRecord& u, std::uint64_t ell, std::uint64_t z) {
    switch (u.kind) {
    case UnitKind::minus_one: return ell - 1;
    case UnitKind::cyclotomic: {
        const std::uint64_t zi = powmod(z, ell - 2, ell);
        const auto a = static_cast<std::uint64_t>(u.index);
        const std::uint64_t num = (powmod(z, a, ell) + ell - powmod(zi, a, ell)) % ell;
        const std::uint64_t den = (z + ell - zi) % ell;
        return mulmod(num, powmod(den, ell - 2, ell), ell);
    }
    case UnitKind::adjoined_root: return u.value.evaluate_mod(ell, z);
    }
    return 0;
}

// True when the residue of u at the prime ideal is a quadratic non-residue.
inline bool character_bit(const UnitRecord& u, std::uint64_t ell, std::uint64_t z) {
    const std::uint64_t v = unit_residue(u, ell, z);
    if (v == 0) throw consistency_error("unit reduced to zero modulo a prime ideal");
    return powmod(v, (ell - 1) / 2, ell) != 1;
}

// Smallest odd prime generating (Z/p)^*, i.e. inert in Q(zeta_p).
inline std::uint64_t inert_prime(OddPrime p) {
    const auto pv = static_cast<std::uint64_t>(p.value());
    for (std::uint64_t ell = 3;; ell += 2) {
        if (ell == pv || !is_prime(ell)) continue;
        if (multiplicative_order(ell % pv, pv) == pv - 1) return ell;
    }
}

// Square root in the residue field F_(ell^h) of K at the inert prime ell.
inline std::optional<CycloModSmall> field_sqrt(const CycloModSmall& c, OddPrime p) {
    const std::uint64_t ell = c.modulus();
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), ell, static_cast<unsigned long>(p.half()));
    const mpz_class qm1 = q - 1;
    if (!c.pow(qm1 / 2).is_one()) return std::nullopt;
    mpz_class t = qm1;
    unsigned long s = 0;
    while (mpz_even_p(t.get_mpz_t()) != 0) {
        t /= 2;
        ++s;
    }
    // Non-residue of the form (zeta + zeta^-1) + k, which lies in the real subfield.
    CycloModSmall theta = CycloModSmall::from(CycloInt::zeta_power(p.value(), 1) + CycloInt::zeta_power(p.value(), -1), ell);
    std::optional<CycloModSmall> nonresidue;
    for (std::uint64_t k = 0; k < ell && !nonresidue; ++k) {
        CycloModSmall z = theta + CycloModSmall::integer(p.value(), ell, k);
        if (z.pow(qm1 / 2).is_integer(ell - 1)) nonresidue = z;
    }
    if (!nonresidue) {
        for (std::uint64_t k = 0; k < ell * ell && !nonresidue; ++k) {
            CycloModSmall z = theta * theta + theta * CycloModSmall::integer(p.value(), ell, k / ell) +
                              CycloModSmall::integer(p.value(), ell, k % ell);
            if (z.pow(qm1 / 2).is_integer(ell - 1)) nonresidue = z;
        }
    }
    if (!nonresidue) throw consistency_error("no quadratic non-residue found in the residue field");
    unsigned long m = s;
    CycloModSmall cc = nonresidue->pow(t);
    CycloModSmall tt = c.pow(t);
    CycloModSmall r = c.pow((t + 1) / 2);
    while (!tt.is_one()) {
        unsigned long i = 0;
        CycloModSmall x = tt;
        while (!x.is_one()) {
            x = x * x;
            ++i;
            if (i >= m) throw consistency_error("Tonelli-Shanks did not terminate");
        }
        CycloModSmall b = cc;
        for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b;
        m = i;
        cc = b * b;
        tt = tt * cc;
        r = r * b;
    }
    if (!(r * r == c)) throw consistency_error("residue-field square root check failed");
    return r;
}

inline CycloInt lift(const CycloModSmall& x) {
    std::vector<mpz_class> c;
    c.reserve(x.coeffs().size());
    for (auto v : x.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
    return CycloInt::from_coeffs(x.p(), std::move(c));
}

// log of sum_b exp(v_b).
inline double log_sum_exp(const std::vector<double>& v) {
    double mx = -1e300;
    for (double x : v) mx = std::max(mx, x);
    double acc = 0.0;
    for (double x : v) acc += std::exp(x - mx);
    return mx + std::log(acc);
}

} // namespace detail

// Exact square root of the unit c if it is a square in Z[zeta_p]; nullopt
// otherwise. Either sign may be returned.
inline std::optional<CycloInt> unit_sqrt(const UnitRecord& c, OddPrime p) {
    const std::uint64_t ell = detail::inert_prime(p);
    const auto r = detail::field_sqrt(CycloModSmall::from(c.value, ell), p);
    if (!r) return std::nullopt;

    // Coefficients of eta in the canonical basis are bounded by
    // (4/p) * sum_b |sigma_b(eta)|, and |sigma_b(eta)| = exp(log|sigma_b(c)| / 2).
    std::vector<double> half_logs;
    for (double v : c.log_abs) half_logs.push_back(v / 2.0);
    const double bound_bits =
        (std::log(4.0 / static_cast<double>(p.value())) + detail::log_sum_exp(half_logs)) / std::log(2.0);

    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), ell, static_cast<unsigned long>(p.half()));
    for (double margin : {40.0, 200.0}) {
        const double target_bits = std::max(0.0, bound_bits) + margin;
        mpz_class modulus = ell;
        CycloInt y = detail::lift(r->pow(q - 2)); // r^-1 in F_(ell^h)
        // Newton iteration for c^(-1/2): y <- y (3 - c y^2) / 2, doubling precision.
        while (static_cast<double>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) < target_bits) {
            const mpz_class next = modulus * modulus;
            mpz_class inv2;
            const mpz_class two = 2;
            mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), next.get_mpz_t());
            CycloInt cy2 = CycloInt::mul_mod(CycloInt::mul_mod(y, y, next), c.value, next);
            CycloInt three_minus = CycloInt::integer(p.value(), 3) - cy2;
            y = CycloInt::mul_mod(y, three_minus, next).scaled(inv2);
            y.reduce_mod(next);
            modulus = next;
        }
        CycloInt eta = CycloInt::mul_mod(c.value, y, modulus);
        eta.symmetric_mod(modulus);
        if (eta * eta == c.value) return eta;
    }
    return std::nullopt;
}

// Signs of sigma_b(eta), b = 1..h, evaluated with MPFR. `log_abs` are the
// expected log |sigma_b(eta)|; each evaluation must dominate its error bound
// and agree with the expected magnitude.
inline gf2::BitRow certified_signs(const CycloInt& eta, const std::vector<double>& log_abs, OddPrime p) {
    const auto h = static_cast<std::size_t>(p.half());
    const auto n = static_cast<std::size_t>(p.value());
    const double coeff_bits = static_cast<double>(eta.max_bits());
    double smallest = 0.0;
    for (double v : log_abs) smallest = std::min(smallest, v / std::log(2.0));
    const auto prec = static_cast<mpfr_prec_t>(coeff_bits - smallest + 96.0 + std::log2(static_cast<double>(n)));

    std::vector<BigFloat> cos_table;
    cos_table.reserve(n);
    BigFloat step = BigFloat::pi(prec);
    step.mul_si(2).div_si(static_cast<long>(n));
    for (std::size_t k = 0; k < n; ++k) {
        BigFloat angle = step;
        angle.mul_si(static_cast<long>(k));
        cos_table.push_back(angle.cos());
    }
    // Each term carries relative error below 2^(2-prec); there are at most n terms.
    const double error_log2 = coeff_bits + std::log2(static_cast<double>(n)) + 4.0 - static_cast<double>(prec);

    gf2::BitRow negative(h);
    for (std::size_t b = 1; b <= h; ++b) {
        BigFloat sum(prec);
        for (std::size_t j = 0; j < n; ++j) {
            const mpz_class& cj = eta.coeffs()[j];
            if (cj == 0) continue;
            sum.add_product(cos_table[(j * b) % n], cj);
        }
        const double got = sum.log2_abs();
        const double want = log_abs[b - 1] / std::log(2.0);
        if (!(got > error_log2 + 8.0)) throw consistency_error("sign evaluation not certified at required precision");
        if (std::fabs(got - want) > 1e-6 * (1.0 + std::fabs(want))) {
            throw consistency_error("embedding magnitude disagrees with log-embedding bookkeeping");
        }
        negative.set(b - 1, sum.sign() < 0);
    }
    return negative;
}

struct SaturationResult {
    std::vector<UnitRecord> basis; // basis of E/E^2 (or C/C^2 if not saturated)
    std::size_t cyclotomic_sign_rank = 0;
    std::size_t sign_rank = 0;
    std::size_t roots_adjoined = 0;
    std::size_t rounds = 0;
    std::size_t prime_ideals_tested = 0;
};

inline std::vector<UnitRecord> cyclotomic_unit_basis(OddPrime p) {
    std::vector<UnitRecord> gens;
    gens.push_back(detail::minus_one_record(p));
    for (std::int64_t a = 2; a <= p.half(); ++a) gens.push_back(detail::cyclotomic_record(p, a));
    return gens;
}

inline std::size_t sign_rank(const std::vector<UnitRecord>& units, std::size_t h) {
    gf2::Matrix m(h);
    for (const auto& u : units) m.push_row(u.negative_at);
    return gf2::rank(m);
}

inline UnitRecord multiply_units(const std::vector<UnitRecord>& basis, const gf2::BitRow& selection, OddPrime p) {
    const auto h = static_cast<std::size_t>(p.half());
    UnitRecord prod{UnitKind::adjoined_root, 0, CycloInt::integer(p.value(), 1), gf2::BitRow(h),
                    std::vector<double>(h, 0.0)};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!selection.get(i)) continue;
        prod.value = prod.value * basis[i].value;
        prod.negative_at ^= basis[i].negative_at;
        for (std::size_t b = 0; b < h; ++b) prod.log_abs[b] += basis[i].log_abs[b];
    }
    return prod;
}

// `ideal_margin` extra prime ideals beyond h are tested before a kernel vector
// is attempted; a vector whose square root fails doubles the margin.
inline SaturationResult saturate_units(OddPrime p, std::size_t ideal_margin = 64, std::size_t max_rounds = 32) {
    const auto h = static_cast<std::size_t>(p.half());
    SaturationResult out;
    out.basis = cyclotomic_unit_basis(p);
    out.cyclotomic_sign_rank = sign_rank(out.basis, h);
    if (out.cyclotomic_sign_rank == h) {
        out.sign_rank = h;
        return out;
    }

    std::vector<detail::SplitPrime> test_primes;
    std::size_t next_root = 1;
    while (true) {
        if (out.rounds >= max_rounds) throw consistency_error("unit saturation did not stabilise");
        const std::size_t wanted_ideals = h + ideal_margin;
        while (test_primes.size() * h < wanted_ideals) {
            const std::uint64_t after = test_primes.empty() ? 1 : test_primes.back().ell;
            test_primes.push_back(detail::split_prime_after(p, after));
        }

        gf2::Matrix constraints(out.basis.size());
        for (std::size_t b = 0; b < h; ++b) {
            gf2::BitRow row(out.basis.size());
            for (std::size_t i = 0; i < out.basis.size(); ++i) row.set(i, out.basis[i].negative_at.get(b));
            constraints.push_row(std::move(row));
        }
        for (const auto& sp : test_primes) {
            for (std::uint64_t z : sp.zetas) {
                gf2::BitRow row(out.basis.size());
                for (std::size_t i = 0; i < out.basis.size(); ++i) row.set(i, detail::character_bit(out.basis[i], sp.ell, z));
                constraints.push_row(std::move(row));
            }
        }
        out.prime_ideals_tested = test_primes.size() * h;

        const auto kernel = gf2::nullspace(constraints);
        if (kernel.empty()) break;

        bool all_roots = true;
        std::vector<std::pair<std::size_t, UnitRecord>> replacements;
        for (const auto& x : kernel) {
            UnitRecord c = multiply_units(out.basis, x, p);
            auto eta = unit_sqrt(c, p);
            if (!eta) {
                all_roots = false;
                break;
            }
            std::vector<double> half_logs;
            for (double v : c.log_abs) half_logs.push_back(v / 2.0);
            gf2::BitRow signs = certified_signs(*eta, half_logs, p);
            // The free column of x is its lowest bit not shared by other kernel vectors;
            // nullspace() guarantees the first free column set in x is unique to x.
            std::size_t free_col = x.size();
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (!x.get(i)) continue;
                bool unique = true;
                for (const auto& y : kernel) {
                    if (&y != &x && y.get(i)) {
                        unique = false;
                        break;
                    }
                }
                if (unique) {
                    free_col = i;
                    break;
                }
            }
            if (free_col == x.size()) throw consistency_error("kernel vector without a private column");
            replacements.emplace_back(free_col, UnitRecord{UnitKind::adjoined_root, static_cast<std::int64_t>(next_root++),
                                                           std::move(*eta), std::move(signs), std::move(half_logs)});
        }
        if (!all_roots) {
            ideal_margin *= 2;
            ++out.rounds;
            continue;
        }
        for (auto& [col, rec] : replacements) out.basis[col] = std::move(rec);
        out.roots_adjoined += replacements.size();
        ++out.rounds;
    }
    out.sign_rank = sign_rank(out.basis, h);
    return out;
}

} // namespace polcount
