/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Canonical representation throughout: gcd-reduced, positive denominator.
 * Serialized form is "p/q" in base 10, or just "p" when q == 1.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>

#include "polyent/errors.hpp"

namespace polyent {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long long num, long long den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigRat& v) : v_(v) {}

    BigInt num() const { return numerator(v_); }
    BigInt den() const { return denominator(v_); }
    const BigRat& raw() const { return v_; }

    bool is_integer() const { return denominator(v_) == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Parses "p/q" or "p"; accepts non-canonical input and reduces it.
    static Rational parse(const std::string& s);
    std::string str() const;

    /// Nearest-double lowering; advisory use only, never feeds exact verdicts.
    double to_double() const { return v_.convert_to<double>(); }

    Rational abs() const { return v_ < 0 ? Rational(BigRat(-v_)) : *this; }

private:
    BigRat v_;
};

/// Three-way comparison: -1, 0, +1.
int rat_cmp(const Rational& a, const Rational& b);

inline Rational abs(const Rational& a) { return a.abs(); }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace polyent
