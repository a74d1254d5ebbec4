#pragma once

// Numerical data of the components A_g(p, rho_n) of Sing(A_g): eigenspace
// dimensions (n_0, ..., n_{p-1}) of an order-p automorphism on the tangent
// space, with rational representation 2b chi_0 + c W where b = n_0 and
// c = n_i + n_{p-i}.
//
// "Very general" below means a member whose endomorphism ring has the lowest
// possible rank on the component; the principal-polarization count reported
// by classify_pi refers to that locus only.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polcount/error.hpp"
#include "polcount/primes.hpp"
#include "polcount/unit_signatures.hpp"

namespace polcount {

class EigenTuple {
public:
    EigenTuple(std::int64_t p, std::vector<std::int64_t> dims) : p_(p), dims_(std::move(dims)) {
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw domain_error("eigen tuple prime is not prime");
        if (dims_.size() != static_cast<std::size_t>(p)) {
            throw domain_error("eigen tuple must have p = " + std::to_string(p) + " entries");
        }
        for (auto n : dims_) {
            if (n < 0) throw domain_error("eigenspace dimensions must be non-negative");
        }
        if (p == 2) {
            c_ = 2 * dims_[1];
        } else {
            c_ = dims_[1] + dims_[static_cast<std::size_t>(p - 1)];
            for (std::int64_t i = 1; i < p; ++i) {
                if (at(i) + at(p - i) != c_) throw domain_error("n_i + n_{p-i} must be the same for every i");
            }
        }
        if (c_ < 1) throw domain_error("c = 0: the automorphism would not have order p");
    }

    [[nodiscard]] std::int64_t p() const noexcept { return p_; }
    [[nodiscard]] const std::vector<std::int64_t>& dims() const noexcept { return dims_; }
    [[nodiscard]] std::int64_t at(std::int64_t i) const { return dims_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] std::int64_t b() const noexcept { return dims_[0]; }
    [[nodiscard]] std::int64_t c() const noexcept { return c_; }
    [[nodiscard]] std::int64_t genus() const {
        std::int64_t g = 0;
        for (auto n : dims_) g += n;
        return g;
    }
    // sum_{i=1}^{(p-1)/2} n_i n_{p-i}
    [[nodiscard]] std::int64_t cross_term() const {
        std::int64_t s = 0;
        for (std::int64_t i = 1; 2 * i < p_; ++i) s += at(i) * at(p_ - i);
        return s;
    }

    friend bool operator==(const EigenTuple&, const EigenTuple&) = default;
    friend auto operator<=>(const EigenTuple& a, const EigenTuple& b) { return a.dims_ <=> b.dims_; }

private:
    std::int64_t p_;
    std::vector<std::int64_t> dims_;
    std::int64_t c_ = 0;
};

inline std::int64_t dimension(const EigenTuple& t) {
    if (t.p() == 2) throw domain_error("the dimension formula needs an odd prime");
    return t.b() * (t.b() + 1) / 2 + t.cross_term();
}

enum class UnknownReason { zero_dimensional, cross_term_zero, all_eigen_one };

inline std::string to_string(UnknownReason r) {
    switch (r) {
    case UnknownReason::zero_dimensional: return "ZeroDimensional";
    case UnknownReason::cross_term_zero: return "CrossTermZero";
    case UnknownReason::all_eigen_one: return "AllEigenOne";
    }
    return "?";
}

struct KnownPi {
    mpz_class value;
    friend bool operator==(const KnownPi&, const KnownPi&) = default;
};
struct UnknownPi {
    UnknownReason reason;
    friend bool operator==(const UnknownPi&, const UnknownPi&) = default;
};
using PiClass = std::variant<KnownPi, UnknownPi>;

inline std::string to_string(const PiClass& pi) {
    if (const auto* k = std::get_if<KnownPi>(&pi)) return k->value.get_str();
    return "Unknown(" + to_string(std::get<UnknownPi>(pi).reason) + ")";
}

struct ComponentData {
    EigenTuple tuple;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t genus = 0;
    std::optional<std::int64_t> dimension; // unset for p = 2
    PiClass pi = KnownPi{1};
    // Counts m_k of index pairs {i, p-i} with {n_i, n_{p-i}} = {k, c-k}, k <= c/2;
    // set for entries produced by enumerate_profiles.
    std::optional<std::vector<std::int64_t>> profile;

    [[nodiscard]] std::int64_t p() const noexcept { return tuple.p(); }
};

// Principal polarizations of a very general member: 1 for p = 2, u(p) when the
// endomorphism ring is Z[zeta_p] (positive dimension, nonzero cross term and
// some n_i != 1 with i in [1, p-1]), otherwise not determined.
inline PiClass classify_pi(const EigenTuple& t, const UnitSignatureReport& u) {
    if (t.p() == 2) return KnownPi{1};
    if (u.p != t.p()) throw domain_error("unit report is for a different prime");
    if (dimension(t) == 0) return UnknownPi{UnknownReason::zero_dimensional};
    if (t.cross_term() == 0) return UnknownPi{UnknownReason::cross_term_zero};
    bool all_one = true;
    for (std::int64_t i = 1; i < t.p(); ++i) all_one = all_one && t.at(i) == 1;
    if (all_one) return UnknownPi{UnknownReason::all_eigen_one};
    return KnownPi{u.u};
}

inline PiClass classify_pi(const ComponentData& d, const UnitSignatureReport& u) { return classify_pi(d.tuple, u); }

inline ComponentData make_component(const EigenTuple& t, const UnitSignatureReport& u) {
    ComponentData d{t, t.b(), t.c(), t.genus(), std::nullopt, classify_pi(t, u), std::nullopt};
    if (t.p() != 2) d.dimension = dimension(t);
    return d;
}

// Lexicographically largest image of t under n_i -> n_{k i mod p}, k in (Z/p)^*.
inline EigenTuple canonical_form(const EigenTuple& t) {
    const std::int64_t p = t.p();
    std::vector<std::int64_t> best = t.dims();
    std::vector<std::int64_t> cand(static_cast<std::size_t>(p));
    for (std::int64_t k = 2; k < p; ++k) {
        for (std::int64_t i = 0; i < p; ++i) cand[static_cast<std::size_t>(i)] = t.at((k * i) % p);
        if (cand > best) best = cand;
    }
    return EigenTuple(p, std::move(best));
}

namespace detail {
// Number of tuples an exhaustive scan visits, saturating at the int64 maximum.
inline std::int64_t raw_tuple_count(std::int64_t g, std::int64_t p) {
    const std::int64_t h = (p - 1) / 2;
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    std::int64_t total = 0;
    for (std::int64_t c = 1; c * h <= g; ++c) {
        std::int64_t n = 1;
        for (std::int64_t i = 0; i < h; ++i) {
            if (n > cap / (c + 1)) return cap;
            n *= c + 1;
        }
        if (total > cap - n) return cap;
        total += n;
    }
    return total;
}

inline void check_catalog_input(std::int64_t g, std::int64_t p) {
    if (g < 1) throw domain_error("genus must be at least 1");
    OddPrime{p};
}
} // namespace detail

inline constexpr std::int64_t default_tuple_budget = 2'000'000;

inline bool tuple_enumeration_feasible(std::int64_t g, std::int64_t p, std::int64_t budget = default_tuple_budget) {
    return detail::raw_tuple_count(g, p) <= budget;
}

// Every eigen tuple of genus g for the odd prime p (one per Galois orbit when
// canonicalize is set), sorted in descending lexicographic order.
inline std::vector<ComponentData> enumerate_components(std::int64_t g, std::int64_t p, bool canonicalize,
                                                       const UnitSignatureReport& u,
                                                       std::int64_t budget = default_tuple_budget) {
    detail::check_catalog_input(g, p);
    if (detail::raw_tuple_count(g, p) > budget) {
        throw domain_error("tuple search space for genus " + std::to_string(g) + ", p = " + std::to_string(p) +
                           " exceeds the enumeration budget; use profiles");
    }
    const std::int64_t h = (p - 1) / 2;
    std::vector<EigenTuple> tuples;
    for (std::int64_t c = 1; c * h <= g; ++c) {
        const std::int64_t b = g - c * h;
        std::vector<std::int64_t> half(static_cast<std::size_t>(h), 0); // n_1..n_h
        while (true) {
            std::vector<std::int64_t> dims(static_cast<std::size_t>(p));
            dims[0] = b;
            for (std::int64_t i = 1; i <= h; ++i) {
                dims[static_cast<std::size_t>(i)] = half[static_cast<std::size_t>(i - 1)];
                dims[static_cast<std::size_t>(p - i)] = c - half[static_cast<std::size_t>(i - 1)];
            }
            EigenTuple t(p, std::move(dims));
            if (!canonicalize || canonical_form(t) == t) tuples.push_back(std::move(t));
            std::size_t k = 0;
            while (k < half.size() && half[k] == c) half[k++] = 0;
            if (k == half.size()) break;
            ++half[k];
        }
    }
    std::sort(tuples.begin(), tuples.end(), [](const EigenTuple& x, const EigenTuple& y) { return y < x; });
    std::vector<ComponentData> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) out.push_back(make_component(t, u));
    return out;
}

inline std::vector<ComponentData> enumerate_components(std::int64_t g, std::int64_t p, bool canonicalize) {
    detail::check_catalog_input(g, p);
    return enumerate_components(g, p, canonicalize, compute_u(p));
}

// One entry per (c, pair profile). dimension and pi depend on the tuple only
// through b, c and the profile, so this covers every numerical class when
// the exhaustive scan is out of reach. The tuple of each entry is the block
// representative with n_i = c - k on consecutive indices i <= (p-1)/2.
inline std::vector<ComponentData> enumerate_profiles(std::int64_t g, std::int64_t p, const UnitSignatureReport& u,
                                                     std::int64_t max_rows = 1'000'000) {
    detail::check_catalog_input(g, p);
    const std::int64_t h = (p - 1) / 2;
    std::vector<ComponentData> out;
    for (std::int64_t c = 1; c * h <= g; ++c) {
        const std::int64_t b = g - c * h;
        const std::int64_t kinds = c / 2 + 1;
        std::vector<std::int64_t> m(static_cast<std::size_t>(kinds), 0);
        m[0] = h;
        // Walk all compositions of h into `kinds` parts.
        while (true) {
            if (static_cast<std::int64_t>(out.size()) >= max_rows) {
                throw domain_error("profile catalog exceeds " + std::to_string(max_rows) + " rows");
            }
            std::vector<std::int64_t> dims(static_cast<std::size_t>(p));
            dims[0] = b;
            std::int64_t i = 1;
            for (std::int64_t k = 0; k < kinds; ++k) {
                for (std::int64_t r = 0; r < m[static_cast<std::size_t>(k)]; ++r, ++i) {
                    dims[static_cast<std::size_t>(i)] = c - k;
                    dims[static_cast<std::size_t>(p - i)] = k;
                }
            }
            ComponentData d = make_component(EigenTuple(p, std::move(dims)), u);
            d.profile = m;
            out.push_back(std::move(d));
            // next composition: move one unit rightwards (reverse-lexicographic on m)
            std::int64_t j = kinds - 2;
            while (j >= 0 && m[static_cast<std::size_t>(j)] == 0) --j;
            if (j < 0) break;
            --m[static_cast<std::size_t>(j)];
            const std::int64_t tail = m[static_cast<std::size_t>(kinds - 1)];
            m[static_cast<std::size_t>(kinds - 1)] = 0;
            m[static_cast<std::size_t>(j + 1)] = tail + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const ComponentData& x, const ComponentData& y) { return y.tuple < x.tuple; });
    return out;
}

// Fixed points of an order-p automorphism acting on a dim_Y-dimensional
// abelian subvariety with only finitely many fixed points: p^(2 dim_Y / (p-1)).
inline mpz_class fixed_point_count(std::int64_t p, std::int64_t dim_y) {
    const OddPrime q(p);
    if (dim_y < 1) throw domain_error("dim_Y must be at least 1");
    if ((2 * dim_y) % (p - 1) != 0) throw domain_error("p - 1 must divide 2 dim_Y");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q.value()), static_cast<unsigned long>(2 * dim_y / (p - 1)));
    return r;
}

} // namespace polcount
