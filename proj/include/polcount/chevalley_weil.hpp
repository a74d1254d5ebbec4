#pragma once

// Eigenspace dimensions of a cyclic degree-p cover C -> C/<sigma> on
// H^0(C, Omega), from the quotient genus and the local rotation numbers.
//
// With rotation data a_1..a_r (each branch point ramified of order p), the
// multiplicity of the eigenvalue zeta^j is
//     n_0 = gamma,
//     n_j = gamma - 1 + sum_k < -a_k j / p >,   1 <= j <= p-1,
// where <x> is the fractional part.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "polcount/component_catalog.hpp"
#include "polcount/cyclotomic.hpp"
#include "polcount/error.hpp"
#include "polcount/primes.hpp"
#include "polcount/unit_signatures.hpp"

namespace polcount {

class CoverSignature {
public:
    CoverSignature(std::int64_t gamma, OddPrime p, std::vector<std::int64_t> rotations)
        : gamma_(gamma), p_(p), rotations_(std::move(rotations)) {
        if (gamma < 0) throw domain_error("quotient genus must be non-negative");
        std::int64_t sum = 0;
        for (auto a : rotations_) {
            if (a < 1 || a >= p.value()) {
                throw domain_error("rotation number " + std::to_string(a) + " outside [1, " +
                                   std::to_string(p.value() - 1) + "]");
            }
            sum += a;
        }
        if (sum % p.value() != 0) {
            throw domain_error("rotation numbers sum to " + std::to_string(sum) + ", which is not 0 mod " +
                               std::to_string(p.value()));
        }
        if (gamma == 0 && rotations_.empty()) throw domain_error("unramified cover of P^1");
    }

    [[nodiscard]] std::int64_t gamma() const noexcept { return gamma_; }
    [[nodiscard]] OddPrime p() const noexcept { return p_; }
    [[nodiscard]] const std::vector<std::int64_t>& rotations() const noexcept { return rotations_; }
    [[nodiscard]] std::int64_t branch_points() const noexcept { return static_cast<std::int64_t>(rotations_.size()); }

private:
    std::int64_t gamma_;
    OddPrime p_;
    std::vector<std::int64_t> rotations_;
};

// 2g - 2 = p (2 gamma - 2) + r (p - 1).
inline std::int64_t riemann_hurwitz_genus(const CoverSignature& s) {
    const std::int64_t p = s.p().value();
    const std::int64_t rhs = p * (2 * s.gamma() - 2) + s.branch_points() * (p - 1);
    if (rhs % 2 != 0) throw domain_error("Riemann-Hurwitz right-hand side is odd");
    const std::int64_t g = rhs / 2 + 1;
    if (g < 0) throw domain_error("Riemann-Hurwitz gives a negative genus");
    return g;
}

// Requires 2 gamma - 2 + r >= 1 (otherwise sigma acts trivially on differentials
// and there is no order-p eigen tuple).
inline EigenTuple eigen_dims(const CoverSignature& s) {
    const std::int64_t p = s.p().value();
    std::vector<std::int64_t> dims(static_cast<std::size_t>(p));
    dims[0] = s.gamma();
    for (std::int64_t j = 1; j < p; ++j) {
        std::int64_t numerator = 0; // p * sum_k <-a_k j / p>
        for (auto a : s.rotations()) numerator += floor_mod(-a * j, p);
        if (numerator % p != 0) throw consistency_error("fractional parts do not sum to an integer");
        const std::int64_t n = s.gamma() - 1 + numerator / p;
        if (n < 0) throw consistency_error("negative eigenspace dimension n_" + std::to_string(j));
        dims[static_cast<std::size_t>(j)] = n;
    }
    if (dims[1] + dims[static_cast<std::size_t>(p - 1)] == 0) {
        throw domain_error("2 gamma - 2 + r = 0: the automorphism acts trivially on differentials");
    }
    return EigenTuple(p, std::move(dims));
}

struct SuperellipticCover {
    CoverSignature signature;
    std::int64_t genus;
};

// y^p = f(x) with f squarefree of degree n: rotation 1 over each root of f,
// and p - (n mod p) over infinity when p does not divide n.
inline SuperellipticCover superelliptic_signature(OddPrime p, std::int64_t n) {
    if (n < 3) throw domain_error("superelliptic degree must be at least 3");
    std::vector<std::int64_t> rot(static_cast<std::size_t>(n), 1);
    std::int64_t genus = 0;
    if (n % p.value() != 0) {
        rot.push_back(p.value() - n % p.value());
        genus = (p.value() - 1) * (n - 1) / 2;
    } else {
        genus = (p.value() - 1) * (n - 2) / 2;
    }
    CoverSignature sig(0, p, std::move(rot));
    if (riemann_hurwitz_genus(sig) != genus) throw consistency_error("superelliptic genus disagrees with Riemann-Hurwitz");
    return {std::move(sig), genus};
}

inline ComponentData component_of_cover(const CoverSignature& s, const UnitSignatureReport& u) {
    const EigenTuple t = eigen_dims(s);
    if (t.genus() != riemann_hurwitz_genus(s)) throw consistency_error("sum of eigenspace dimensions is not the genus");
    return make_component(t, u);
}

inline ComponentData component_of_cover(const CoverSignature& s) { return component_of_cover(s, compute_u(s.p().value())); }

} // namespace polcount
