#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <string>
#include <utility>

namespace polcount {

// Owning wrapper around an mpfr_t. Every operation rounds to nearest at the
// destination precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigFloat(mpfr_prec_t bits, long value) { mpfr_init2(v_, bits); mpfr_set_si(v_, value, MPFR_RNDN); }
    BigFloat(mpfr_prec_t bits, const mpz_class& value) {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& other) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    BigFloat& operator=(BigFloat other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat pi(mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    // log2 |x|; -inf for zero.
    [[nodiscard]] double log2_abs() const {
        long exp = 0;
        double mant = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
        if (mant == 0.0) return -1.0 / 0.0;
        return static_cast<double>(exp) + std::log2(mant < 0 ? -mant : mant);
    }

    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& mul_si(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    BigFloat& div_si(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

    // this += a * b
    BigFloat& add_product(const BigFloat& a, const mpz_class& b) {
        BigFloat t(precision());
        mpfr_mul_z(t.v_, a.v_, b.get_mpz_t(), MPFR_RNDN);
        mpfr_add(v_, v_, t.v_, MPFR_RNDN);
        return *this;
    }

    [[nodiscard]] BigFloat sin() const { BigFloat r(precision()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    [[nodiscard]] BigFloat cos() const { BigFloat r(precision()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }

    [[nodiscard]] std::string to_string(int digits = 20) const {
        mpfr_exp_t exp = 0;
        char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        return mant + "e" + std::to_string(static_cast<long>(exp));
    }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

private:
    mpfr_t v_;
};

} // namespace polcount
