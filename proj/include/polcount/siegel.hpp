#pragma once

// Exact checks for a genus-4 curve with an order-3 automorphism eta and quotient
// signature (1; 3, 3, 3): the integral symplectic matrix of eta, the family of
// Riemann matrices it fixes, and the dual period matrix of the eta-stable part.
//
// Z -> (AZ + B)(CZ + D)^-1 is the standard (left) action of Sp(2g, Z) on
// symmetric g x g matrices. The printed family is fixed by eta's matrix M only
// after conjugating by S = diag(I, -I), i.e. under Z -> (AZ - B)(D - CZ)^-1,
// which is equivalent to M fixing -Z. This is the convention pinned below;
// none of M, M^T, M^-1, M^-T under the plain action fixes the family.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polcount/eisenstein.hpp"
#include "polcount/error.hpp"
#include "polcount/matrix.hpp"

namespace polcount {

using IntMatrix = Matrix<mpz_class>;
using EisMatrix = Matrix<EisensteinRational>;

// Symmetric g x g matrix over Q(w). Positivity of the imaginary part is not tracked.
class SiegelPoint {
public:
    explicit SiegelPoint(EisMatrix z) : z_(std::move(z)) {
        if (!z_.is_square()) throw domain_error("Siegel point must be square");
        if (!z_.is_symmetric()) throw domain_error("Siegel point must be symmetric");
    }
    [[nodiscard]] const EisMatrix& matrix() const noexcept { return z_; }
    [[nodiscard]] std::size_t genus() const noexcept { return z_.rows(); }
    friend bool operator==(const SiegelPoint&, const SiegelPoint&) = default;

private:
    EisMatrix z_;
};

inline IntMatrix symplectic_form(std::size_t g) {
    const IntMatrix zero(g, g);
    const IntMatrix id = IntMatrix::identity(g);
    return IntMatrix::from_blocks(zero, id, -id, zero);
}

inline bool is_symplectic(const IntMatrix& m, std::size_t g) {
    if (m.rows() != 2 * g || m.cols() != 2 * g) throw domain_error("expected a 2g x 2g matrix");
    const IntMatrix j = symplectic_form(g);
    return m.transpose() * j * m == j;
}

inline mpz_class determinant(IntMatrix m) {
    // Bareiss fraction-free elimination.
    const std::size_t n = m.rows();
    if (!m.is_square()) throw domain_error("determinant of a non-square matrix");
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// Smallest k >= 1 with M^k = I, or nullopt when no k <= max_order works.
inline std::optional<std::int64_t> matrix_order(const IntMatrix& m, std::int64_t max_order) {
    if (!m.is_square()) throw domain_error("matrix order of a non-square matrix");
    const mpz_class det = determinant(m);
    if (det != 1 && det != -1) throw domain_error("matrix is not invertible over the integers");
    const IntMatrix id = IntMatrix::identity(m.rows());
    IntMatrix power = m;
    for (std::int64_t k = 1; k <= max_order; ++k) {
        if (power == id) return k;
        power = power * m;
    }
    return std::nullopt;
}

inline IntMatrix symplectic_inverse(const IntMatrix& m) {
    // M^-1 = -J M^T J for symplectic M.
    const IntMatrix j = symplectic_form(m.rows() / 2);
    return -(j * m.transpose() * j);
}

struct Blocks {
    IntMatrix a, b, c, d;
};

inline Blocks split_blocks(const IntMatrix& m) {
    const std::size_t g = m.rows() / 2;
    return {m.block(0, 0, g, g), m.block(0, g, g, g), m.block(g, 0, g, g), m.block(g, g, g, g)};
}

inline EisMatrix to_eisenstein(const IntMatrix& m) {
    return m.map([](const mpz_class& v) { return EisensteinRational(mpq_class(v)); });
}

inline EisMatrix inverse(const EisMatrix& m) {
    const std::size_t n = m.rows();
    if (!m.is_square()) throw domain_error("inverse of a non-square matrix");
    EisMatrix a = m;
    EisMatrix inv = EisMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw singular_point_error("matrix is singular over Q(w)");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        }
        const EisensteinRational scale = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= scale;
            inv(col, j) /= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const EisensteinRational f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

inline bool is_singular(const EisMatrix& m) {
    try {
        (void)inverse(m);
        return false;
    } catch (const singular_point_error&) {
        return true;
    }
}

enum class ActionConvention {
    standard,         // M
    transpose,        // M^T
    inverse,          // M^-1
    inverse_transpose, // M^-T
    block_transposed, // [[A, C], [B, D]]
    sign_conjugated,  // S M S, S = diag(I, -I)
};

inline constexpr ActionConvention pinned_convention = ActionConvention::sign_conjugated;

inline std::string to_string(ActionConvention c) {
    switch (c) {
    case ActionConvention::standard: return "standard: Z -> (AZ+B)(CZ+D)^-1";
    case ActionConvention::transpose: return "transpose: standard action of M^T";
    case ActionConvention::inverse: return "inverse: standard action of M^-1";
    case ActionConvention::inverse_transpose: return "inverse-transpose: standard action of M^-T";
    case ActionConvention::block_transposed: return "block-transposed: standard action of [[A,C],[B,D]]";
    case ActionConvention::sign_conjugated: return "sign-conjugated: Z -> (AZ-B)(D-CZ)^-1";
    }
    return "?";
}

inline const std::vector<ActionConvention>& all_conventions() {
    static const std::vector<ActionConvention> all{
        ActionConvention::standard,          ActionConvention::transpose,        ActionConvention::inverse,
        ActionConvention::inverse_transpose, ActionConvention::block_transposed, ActionConvention::sign_conjugated};
    return all;
}

// The matrix whose standard action realizes M under convention c.
inline IntMatrix effective_matrix(const IntMatrix& m, ActionConvention c) {
    switch (c) {
    case ActionConvention::standard: return m;
    case ActionConvention::transpose: return m.transpose();
    case ActionConvention::inverse: return symplectic_inverse(m);
    case ActionConvention::inverse_transpose: return symplectic_inverse(m).transpose();
    case ActionConvention::block_transposed: {
        const Blocks bl = split_blocks(m);
        return IntMatrix::from_blocks(bl.a, bl.c, bl.b, bl.d);
    }
    case ActionConvention::sign_conjugated: {
        const Blocks bl = split_blocks(m);
        return IntMatrix::from_blocks(bl.a, -bl.b, -bl.c, bl.d);
    }
    }
    return m;
}

// Standard action of effective_matrix(m, convention) on z. The pinned
// convention is a conjugation, so this is a group action for every choice
// except transpose and inverse (which are anti-homomorphisms).
// Throws singular_point_error when CZ + D is singular.
inline SiegelPoint moebius_action(const IntMatrix& m, const SiegelPoint& z,
                                  ActionConvention convention = pinned_convention) {
    const std::size_t g = z.genus();
    if (!is_symplectic(m, g)) throw domain_error("moebius_action needs a symplectic matrix");
    const Blocks bl = split_blocks(effective_matrix(m, convention));
    const EisMatrix& zm = z.matrix();
    const EisMatrix num = to_eisenstein(bl.a) * zm + to_eisenstein(bl.b);
    const EisMatrix den = to_eisenstein(bl.c) * zm + to_eisenstein(bl.d);
    EisMatrix out = num * inverse(den);
    if (!out.is_symmetric()) throw consistency_error("symplectic action produced a non-symmetric matrix");
    return SiegelPoint(std::move(out));
}

// (AZ + B) == Z (CZ + D) for the effective matrix: fixedness without inversion.
inline bool fixes(const IntMatrix& effective, const SiegelPoint& z) {
    const Blocks bl = split_blocks(effective);
    const EisMatrix& zm = z.matrix();
    const EisMatrix lhs = to_eisenstein(bl.a) * zm + to_eisenstein(bl.b);
    const EisMatrix rhs = zm * (to_eisenstein(bl.c) * zm + to_eisenstein(bl.d));
    return lhs == rhs;
}

// Rational representation of eta in the symplectic basis lambda_1..4, mu_1..4.
inline IntMatrix rho_eta() {
    return IntMatrix{
        {0, 0, 1, 0, 0, 0, 0, 0},  {1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, -1},
        {0, 0, 0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 0, 0, -1},
    };
}

inline SiegelPoint genus4_family(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
    const EisensteinRational w = EisensteinRational::omega();
    const EisensteinRational w2 = w * w;
    const EisensteinRational A(a), B(b), C(c);
    const EisensteinRational c2 = C * C;
    EisMatrix z{
        {A, B, -c2 + B, C},
        {B, w * c2 + A, w2 * c2 + B, w * C},
        {-c2 + B, w2 * c2 + B, w * c2 + c2 + A, w2 * C},
        {C, w * C, w2 * C, w},
    };
    return SiegelPoint(std::move(z));
}

// Dual period matrix data for the eta-stable part: (diag(3, 3, 1), tau).
inline EisMatrix dual_tau(const mpq_class& a, const mpq_class& b) {
    const EisensteinRational w = EisensteinRational::omega();
    const EisensteinRational A(a), B(b);
    const EisensteinRational wm1a = (w - EisensteinRational(1)) * A;
    const EisensteinRational mid = EisensteinRational(mpq_class(a * a / 6 - 3 * b / 2));
    EisMatrix tau{
        {EisensteinRational(3) * w, wm1a, A},
        {wm1a, EisensteinRational(3) * B + EisensteinRational(mpq_class(1, 3)) * (w - EisensteinRational(1)) * A * A, mid},
        {A, mid, B},
    };
    if (!tau.is_symmetric()) throw consistency_error("dual tau is not symmetric");
    return tau;
}

inline std::vector<std::int64_t> dual_polarization_type() { return {3, 3, 1}; }

// Seeded small rationals: numerator in [-20, 20], denominator in [1, 10].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
    mpq_class next() {
        const auto num = static_cast<long>(rng_() % 41) - 20;
        const auto den = static_cast<long>(rng_() % 10) + 1;
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

private:
    std::mt19937_64 rng_;
};

enum class SampleStatus { pass, fail, singular };

inline std::string to_string(SampleStatus s) {
    switch (s) {
    case SampleStatus::pass: return "pass";
    case SampleStatus::fail: return "fail";
    case SampleStatus::singular: return "singular";
    }
    return "?";
}

struct FamilySample {
    mpq_class a, b, c;
    SampleStatus status = SampleStatus::fail;
};

struct FixedFamilyReport {
    ActionConvention convention = pinned_convention;
    std::vector<FamilySample> samples;

    [[nodiscard]] std::size_t count(SampleStatus s) const {
        std::size_t n = 0;
        for (const auto& x : samples) n += x.status == s ? 1 : 0;
        return n;
    }
    [[nodiscard]] bool passed() const { return count(SampleStatus::fail) == 0 && count(SampleStatus::pass) > 0; }
};

// First sample is (0, 0, 0) only when sample_count == 1 and `origin_first` is set;
// otherwise all triples come from the seeded sampler.
inline FixedFamilyReport verify_fixed_family(std::int64_t sample_count, std::uint64_t seed,
                                             ActionConvention convention = pinned_convention,
                                             bool origin_first = false) {
    if (sample_count < 1) throw domain_error("sample count must be at least 1");
    const IntMatrix m = effective_matrix(rho_eta(), convention);
    const Blocks bl = split_blocks(m);
    RationalSampler sampler(seed);
    FixedFamilyReport report;
    report.convention = convention;
    for (std::int64_t s = 0; s < sample_count; ++s) {
        FamilySample fs;
        if (origin_first && s == 0) {
            fs.a = 0;
            fs.b = 0;
            fs.c = 0;
        } else {
            fs.a = sampler.next();
            fs.b = sampler.next();
            fs.c = sampler.next();
        }
        const SiegelPoint z = genus4_family(fs.a, fs.b, fs.c);
        const EisMatrix den = to_eisenstein(bl.c) * z.matrix() + to_eisenstein(bl.d);
        if (is_singular(den)) {
            fs.status = SampleStatus::singular;
        } else {
            fs.status = fixes(m, z) ? SampleStatus::pass : SampleStatus::fail;
        }
        report.samples.push_back(std::move(fs));
    }
    if (report.count(SampleStatus::singular) == report.samples.size()) {
        throw inconclusive_error("every sample hit a singular CZ + D");
    }
    return report;
}

// Conventions under which every non-singular sample of the family is fixed.
inline std::vector<ActionConvention> conventions_fixing_family(std::int64_t sample_count, std::uint64_t seed) {
    std::vector<ActionConvention> out;
    for (auto c : all_conventions()) {
        try {
            if (verify_fixed_family(sample_count, seed, c).passed()) out.push_back(c);
        } catch (const inconclusive_error&) {
        }
    }
    return out;
}

} // namespace polcount
