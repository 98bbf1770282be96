#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "pants/errors.hpp"

namespace pants::exact {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Always kept canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
/// Serialized as "p/q", or just "p" when q = 1.
class Rational {
  public:
    Rational() = default;  // 0/1
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v);

    /// Parses "[-]digits[/digits]". Accepts non-canonical input ("4/6"),
    /// rejects empty strings, whitespace, zero denominators, trailing junk.
    static std::optional<Rational> parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational reciprocal() const;

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

  private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pants::exact
