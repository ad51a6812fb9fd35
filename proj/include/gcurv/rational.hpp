#pragma once

// Exact rational scalar. Backed by GMP; every value is kept in canonical
// form (gcd(|num|, den) = 1, den >= 1, zero is 0/1).

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "gcurv/error.hpp"

namespace gcurv {

class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<I>) {
            q_ = mpq_class(mpz_class(static_cast<long>(value)));
        } else {
            q_ = mpq_class(mpz_class(static_cast<unsigned long>(value)));
        }
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) fail(ErrorKind::Input, "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    Rational abs() const { return Rational(::abs(q_)); }

    Rational operator-() const { return Rational(-q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(ErrorKind::Input, "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Nearest double, ties to even. Subnormal results may be double-rounded.
    double to_double() const {
        const int s = sign();
        if (s == 0) return 0.0;
        mpz_class a = ::abs(numerator());
        mpz_class b = denominator();
        long shift = 54 - (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
        if (shift >= 0) {
            a <<= static_cast<mp_bitcnt_t>(shift);
        } else {
            b <<= static_cast<mp_bitcnt_t>(-shift);
        }
        mpz_class quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        // quot lies in [2^53, 2^55): keep 53 bits, round on the rest.
        const auto drop = static_cast<mp_bitcnt_t>(mpz_sizeinbase(quot.get_mpz_t(), 2) - 53);
        mpz_class low;
        mpz_fdiv_r_2exp(low.get_mpz_t(), quot.get_mpz_t(), drop);
        quot >>= drop;
        shift -= static_cast<long>(drop);
        mpz_class half = mpz_class(1) << (drop - 1);
        const int c = cmp(low, half);
        if (c > 0 || (c == 0 && (rem != 0 || mpz_odd_p(quot.get_mpz_t())))) quot += 1;
        const double m = std::ldexp(quot.get_d(), static_cast<int>(-shift));
        return s < 0 ? -m : m;
    }

    // Always "p/q", integers included ("3/1").
    std::string to_string() const {
        return numerator().get_str() + "/" + denominator().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

inline Rational rational_from(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) fail(ErrorKind::Input, "rational with zero denominator");
    return Rational(mpz_class(static_cast<long>(numerator)),
                    mpz_class(static_cast<long>(denominator)));
}

inline double to_float(const Rational& x) { return x.to_double(); }

}  // namespace gcurv
