#pragma once

// The invariant u(p) = |U+ / U^2| for U the unit group of Q(zeta_p + zeta_p^-1)
// and U+ its totally positive units. Equivalently u(p) = 2^(h - r) where
// h = (p-1)/2 and r is the GF(2) rank of the signature map
//     U / U^2 -> {+-1}^h,   u -> (sign sigma_b(u))_b.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "polcount/cyclotomic.hpp"
#include "polcount/error.hpp"
#include "polcount/gf2.hpp"
#include "polcount/primes.hpp"
#include "polcount/unit_group.hpp"

namespace polcount {

// Row 0 is -1, row a-1 is eps_a; column b-1 is the embedding sigma_b.
// Entry 1 means negative.
struct SignMatrix {
    OddPrime p;
    gf2::Matrix rows;
    std::vector<std::string> row_labels;
};

inline SignMatrix build_sign_matrix(OddPrime p) {
    const auto h = static_cast<std::size_t>(p.half());
    SignMatrix m{p, gf2::Matrix(h), {}};
    gf2::BitRow minus_one(h);
    for (std::size_t b = 0; b < h; ++b) minus_one.set(b);
    m.rows.push_row(std::move(minus_one));
    m.row_labels.emplace_back("-1");
    for (std::int64_t a = 2; a <= p.half(); ++a) {
        gf2::BitRow row(h);
        for (std::int64_t b = 1; b <= p.half(); ++b) {
            row.set(static_cast<std::size_t>(b - 1), cyclotomic_unit_sign(a, b, p) == Sign::negative);
        }
        m.rows.push_row(std::move(row));
        m.row_labels.push_back("eps_" + std::to_string(a));
    }
    return m;
}

inline std::size_t f2_rank(const gf2::Matrix& m) { return gf2::rank(m); }
inline std::size_t f2_rank(const SignMatrix& m) { return gf2::rank(m.rows); }
inline std::size_t f2_rank(const std::vector<std::vector<int>>& entries) {
    return gf2::rank(gf2::Matrix::from_rows(entries));
}

enum class UnitMethod {
    // Signatures of the cyclotomic units only; exact when h+(p) is odd,
    // otherwise an upper bound for u(p).
    cyclotomic,
    // Cyclotomic units 2-saturated inside the full unit group; exact.
    saturated,
};

inline std::string to_string(UnitMethod m) { return m == UnitMethod::cyclotomic ? "cyclotomic" : "saturated"; }

struct UnitSignatureReport {
    std::int64_t p = 2;
    std::size_t rank = 0;
    mpz_class u = 1;
    // true when the value assumes the class number of the real subfield is odd
    bool conditional = false;
    UnitMethod method = UnitMethod::saturated;
    std::size_t cyclotomic_rank = 0;
    std::size_t roots_adjoined = 0;
};

inline UnitSignatureReport compute_u(std::int64_t p, UnitMethod method = UnitMethod::saturated) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw domain_error(std::to_string(p) + " is not prime");
    UnitSignatureReport r;
    r.p = p;
    r.method = method;
    if (p == 2) return r; // U = {+-1}, U+ = U^2 = {1}
    const OddPrime q(p);
    const auto h = static_cast<std::size_t>(q.half());
    if (method == UnitMethod::cyclotomic) {
        r.rank = f2_rank(build_sign_matrix(q));
        r.cyclotomic_rank = r.rank;
        r.conditional = true;
    } else {
        const SaturationResult sat = saturate_units(q);
        r.rank = sat.sign_rank;
        r.cyclotomic_rank = sat.cyclotomic_sign_rank;
        r.roots_adjoined = sat.roots_adjoined;
        r.conditional = false;
    }
    mpz_ui_pow_ui(r.u.get_mpz_t(), 2, static_cast<unsigned long>(h - r.rank));
    return r;
}

inline std::vector<UnitSignatureReport> u_table(std::int64_t max_prime, UnitMethod method = UnitMethod::saturated) {
    std::vector<UnitSignatureReport> out;
    if (max_prime < 2) return out;
    for (auto p : primes_up_to(static_cast<std::uint64_t>(max_prime))) {
        out.push_back(compute_u(static_cast<std::int64_t>(p), method));
    }
    return out;
}

} // namespace polcount
