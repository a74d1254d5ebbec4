#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "polcount/error.hpp"

namespace polcount {

// x + y w in Q(w), w = exp(2 pi i / 3), w^2 = -1 - w.
class EisensteinRational {
public:
    EisensteinRational() = default;
    EisensteinRational(long x) : re_(x) {} // NOLINT(google-explicit-constructor)
    EisensteinRational(mpq_class x) : re_(std::move(x)) {} // NOLINT(google-explicit-constructor)
    EisensteinRational(mpq_class x, mpq_class y) : re_(std::move(x)), wm_(std::move(y)) {
        re_.canonicalize();
        wm_.canonicalize();
    }

    static EisensteinRational omega() { return {0, 1}; }

    [[nodiscard]] const mpq_class& re() const noexcept { return re_; }
    [[nodiscard]] const mpq_class& wm() const noexcept { return wm_; }
    [[nodiscard]] bool is_zero() const { return re_ == 0 && wm_ == 0; }

    // Complex conjugate: w -> w^2 = -1 - w.
    [[nodiscard]] EisensteinRational conj() const { return {re_ - wm_, -wm_}; }
    // x^2 - x y + y^2
    [[nodiscard]] mpq_class norm() const { return re_ * re_ - re_ * wm_ + wm_ * wm_; }

    EisensteinRational& operator+=(const EisensteinRational& o) {
        re_ += o.re_;
        wm_ += o.wm_;
        return *this;
    }
    EisensteinRational& operator-=(const EisensteinRational& o) {
        re_ -= o.re_;
        wm_ -= o.wm_;
        return *this;
    }
    EisensteinRational& operator*=(const EisensteinRational& o) {
        // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
        const mpq_class bd = wm_ * o.wm_;
        mpq_class re = re_ * o.re_ - bd;
        mpq_class wm = re_ * o.wm_ + wm_ * o.re_ - bd;
        re_ = std::move(re);
        wm_ = std::move(wm);
        return *this;
    }
    EisensteinRational& operator/=(const EisensteinRational& o) {
        if (o.is_zero()) throw domain_error("division by zero in Q(w)");
        const mpq_class n = o.norm();
        *this *= o.conj();
        re_ /= n;
        wm_ /= n;
        return *this;
    }

    friend EisensteinRational operator+(EisensteinRational a, const EisensteinRational& b) { return a += b; }
    friend EisensteinRational operator-(EisensteinRational a, const EisensteinRational& b) { return a -= b; }
    friend EisensteinRational operator*(EisensteinRational a, const EisensteinRational& b) { return a *= b; }
    friend EisensteinRational operator/(EisensteinRational a, const EisensteinRational& b) { return a /= b; }
    friend EisensteinRational operator-(const EisensteinRational& a) { return {-a.re_, -a.wm_}; }

    friend bool operator==(const EisensteinRational& a, const EisensteinRational& b) {
        return a.re_ == b.re_ && a.wm_ == b.wm_;
    }

    [[nodiscard]] std::string to_string() const {
        if (wm_ == 0) return re_.get_str();
        std::string w = wm_ == 1 ? "w" : (wm_ == -1 ? "-w" : wm_.get_str() + "*w");
        if (re_ == 0) return w;
        return re_.get_str() + (wm_ > 0 ? "+" : "") + w;
    }

    friend std::ostream& operator<<(std::ostream& os, const EisensteinRational& x) { return os << x.to_string(); }

private:
    mpq_class re_{0};
    mpq_class wm_{0};
};

} // namespace polcount
