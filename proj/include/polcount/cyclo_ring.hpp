#pragma once

// Arithmetic in Z[zeta_p] = Z[x] / Phi_p(x).
//
// Elements are stored as p coefficients of 1, x, ..., x^(p-1) (so products are
// cyclic convolutions mod x^p - 1) and kept canonical by subtracting the last
// coefficient from every entry, which uses 1 + x + ... + x^(p-1) = 0. The
// canonical vector therefore always ends in 0, and two elements are equal iff
// their canonical vectors are.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polcount/error.hpp"
#include "polcount/primes.hpp"

namespace polcount {

class CycloInt {
public:
    explicit CycloInt(std::int64_t p) : coeffs_(static_cast<std::size_t>(p)) {}

    static CycloInt from_coeffs(std::int64_t p, std::vector<mpz_class> c) {
        if (c.size() != static_cast<std::size_t>(p)) throw domain_error("coefficient count must equal p");
        CycloInt r(p);
        r.coeffs_ = std::move(c);
        r.canonicalize();
        return r;
    }

    static CycloInt integer(std::int64_t p, long v) {
        CycloInt r(p);
        r.coeffs_[0] = v;
        r.canonicalize();
        return r;
    }

    static CycloInt zeta_power(std::int64_t p, std::int64_t k) {
        CycloInt r(p);
        r.coeffs_[static_cast<std::size_t>(((k % p) + p) % p)] = 1;
        r.canonicalize();
        return r;
    }

    // (zeta^a - zeta^-a) / (zeta - zeta^-1) = sum_{i<a} zeta^(2i - (a-1)), a >= 1.
    static CycloInt cyclotomic_unit(std::int64_t p, std::int64_t a) {
        if (a < 1) throw domain_error("cyclotomic unit index must be positive");
        CycloInt r(p);
        for (std::int64_t i = 0; i < a; ++i) {
            const std::int64_t e = (((2 * i - (a - 1)) % p) + p) % p;
            r.coeffs_[static_cast<std::size_t>(e)] += 1;
        }
        r.canonicalize();
        return r;
    }

    [[nodiscard]] std::int64_t p() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
    [[nodiscard]] const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] bool is_one() const {
        if (coeffs_[0] != 1) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) return false;
        }
        return true;
    }

    [[nodiscard]] std::size_t max_bits() const {
        std::size_t bits = 0;
        for (const auto& c : coeffs_) {
            if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
        }
        return bits;
    }

    CycloInt operator-() const {
        CycloInt r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend CycloInt operator+(CycloInt a, const CycloInt& b) {
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
        a.canonicalize();
        return a;
    }

    friend CycloInt operator-(CycloInt a, const CycloInt& b) {
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
        a.canonicalize();
        return a;
    }

    [[nodiscard]] CycloInt scaled(const mpz_class& k) const {
        CycloInt r = *this;
        for (auto& c : r.coeffs_) c *= k;
        return r;
    }

    friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
        CycloInt r = multiply_raw(a, b);
        r.canonicalize();
        return r;
    }

    // Product with every canonical coefficient reduced into [0, modulus).
    static CycloInt mul_mod(const CycloInt& a, const CycloInt& b, const mpz_class& modulus) {
        CycloInt r = multiply_raw(a, b);
        r.canonicalize();
        r.reduce_mod(modulus);
        return r;
    }

    void reduce_mod(const mpz_class& modulus) {
        for (auto& c : coeffs_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    }

    // Representatives in (-m/2, m/2].
    void symmetric_mod(const mpz_class& modulus) {
        const mpz_class half = modulus / 2;
        for (auto& c : coeffs_) {
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
            if (c > half) c -= modulus;
        }
        canonicalize();
    }

    // Image under zeta -> zeta^k, k coprime to p.
    [[nodiscard]] CycloInt galois(std::int64_t k) const {
        const std::int64_t n = p();
        CycloInt r(n);
        const std::int64_t kk = ((k % n) + n) % n;
        for (std::int64_t j = 0; j < n; ++j) {
            r.coeffs_[static_cast<std::size_t>((j * kk) % n)] = coeffs_[static_cast<std::size_t>(j)];
        }
        r.canonicalize();
        return r;
    }

    // Image in F_ell under zeta -> z, where z has multiplicative order p mod ell.
    [[nodiscard]] std::uint64_t evaluate_mod(std::uint64_t ell, std::uint64_t z) const {
        std::uint64_t acc = 0;
        for (std::size_t j = coeffs_.size(); j-- > 0;) {
            const std::uint64_t cj = mpz_fdiv_ui(coeffs_[j].get_mpz_t(), ell);
            acc = (mulmod(acc, z, ell) + cj) % ell;
        }
        return acc;
    }

    friend bool operator==(const CycloInt& a, const CycloInt& b) { return a.coeffs_ == b.coeffs_; }

private:
    static CycloInt multiply_raw(const CycloInt& a, const CycloInt& b) {
        const std::size_t n = a.coeffs_.size();
        if (b.coeffs_.size() != n) throw domain_error("mixing elements of different cyclotomic rings");
        CycloInt r(static_cast<std::int64_t>(n));
        // Sparse factors with unit coefficients (the cyclotomic units) add shifted copies.
        std::vector<std::size_t> plus, minus, general;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& bj = b.coeffs_[j];
            if (bj == 0) continue;
            if (bj == 1) {
                plus.push_back(j);
            } else if (bj == -1) {
                minus.push_back(j);
            } else {
                general.push_back(j);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
            if (mpz_sgn(ai) == 0) continue;
            for (std::size_t j : plus) {
                const std::size_t k = i + j < n ? i + j : i + j - n;
                mpz_add(r.coeffs_[k].get_mpz_t(), r.coeffs_[k].get_mpz_t(), ai);
            }
            for (std::size_t j : minus) {
                const std::size_t k = i + j < n ? i + j : i + j - n;
                mpz_sub(r.coeffs_[k].get_mpz_t(), r.coeffs_[k].get_mpz_t(), ai);
            }
            for (std::size_t j : general) {
                const std::size_t k = i + j < n ? i + j : i + j - n;
                mpz_addmul(r.coeffs_[k].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
            }
        }
        return r;
    }

    void canonicalize() {
        const mpz_class last = coeffs_.back();
        if (last == 0) return;
        for (auto& c : coeffs_) c -= last;
    }

    std::vector<mpz_class> coeffs_;
};

// Z[zeta_p] / ell for a small prime ell != p, same canonical layout.
class CycloModSmall {
public:
    CycloModSmall(std::int64_t p, std::uint64_t ell) : ell_(ell), coeffs_(static_cast<std::size_t>(p), 0) {
        if (ell >= (std::uint64_t{1} << 20)) throw domain_error("small modulus must be below 2^20");
    }

    static CycloModSmall from(const CycloInt& x, std::uint64_t ell) {
        CycloModSmall r(x.p(), ell);
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) r.coeffs_[j] = mpz_fdiv_ui(x.coeffs()[j].get_mpz_t(), ell);
        r.canonicalize();
        return r;
    }

    static CycloModSmall integer(std::int64_t p, std::uint64_t ell, std::uint64_t v) {
        CycloModSmall r(p, ell);
        r.coeffs_[0] = v % ell;
        return r;
    }

    [[nodiscard]] std::int64_t p() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
    [[nodiscard]] std::uint64_t modulus() const noexcept { return ell_; }
    [[nodiscard]] const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] bool is_integer(std::uint64_t v) const {
        if (coeffs_[0] != v % ell_) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) return false;
        }
        return true;
    }
    [[nodiscard]] bool is_one() const { return is_integer(1); }

    friend CycloModSmall operator*(const CycloModSmall& a, const CycloModSmall& b) {
        const std::size_t n = a.coeffs_.size();
        std::vector<std::uint64_t> acc(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t ai = a.coeffs_[i];
            if (ai == 0) continue;
            std::uint64_t* out = acc.data() + i;
            const std::uint64_t* bj = b.coeffs_.data();
            for (std::size_t j = 0; j < n; ++j) out[j] += ai * bj[j];
        }
        CycloModSmall r(static_cast<std::int64_t>(n), a.ell_);
        for (std::size_t k = 0; k < n; ++k) r.coeffs_[k] = (acc[k] + acc[k + n]) % a.ell_;
        r.canonicalize();
        return r;
    }

    friend CycloModSmall operator+(CycloModSmall a, const CycloModSmall& b) {
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] = (a.coeffs_[i] + b.coeffs_[i]) % a.ell_;
        return a;
    }

    // x -> x^ell, which in characteristic ell is zeta -> zeta^ell.
    [[nodiscard]] CycloModSmall frobenius() const {
        const std::size_t n = coeffs_.size();
        CycloModSmall r(static_cast<std::int64_t>(n), ell_);
        const std::size_t step = static_cast<std::size_t>(ell_ % n);
        std::size_t pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            r.coeffs_[pos] = coeffs_[j];
            pos += step;
            if (pos >= n) pos -= n;
        }
        r.canonicalize();
        return r;
    }

    // x^e using base-ell digits of e and Frobenius for the shifts.
    [[nodiscard]] CycloModSmall pow(const mpz_class& e) const {
        if (e < 0) throw domain_error("negative exponent");
        const std::int64_t n = p();
        std::vector<CycloModSmall> table;
        table.reserve(ell_);
        table.push_back(integer(n, ell_, 1));
        for (std::uint64_t d = 1; d < ell_; ++d) table.push_back(table.back() * *this);
        std::vector<std::uint64_t> digits;
        mpz_class rest = e;
        while (rest != 0) {
            digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), ell_));
        }
        CycloModSmall r = integer(n, ell_, 1);
        for (std::size_t k = digits.size(); k-- > 0;) {
            r = r.frobenius();
            if (digits[k] != 0) r = r * table[digits[k]];
        }
        return r;
    }

    friend bool operator==(const CycloModSmall&, const CycloModSmall&) = default;

private:
    void canonicalize() {
        const std::uint64_t last = coeffs_.back();
        if (last == 0) return;
        for (auto& c : coeffs_) c = (c + ell_ - last) % ell_;
    }

    std::uint64_t ell_;
    std::vector<std::uint64_t> coeffs_;
};

} // namespace polcount
