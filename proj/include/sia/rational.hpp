#ifndef SIA_RATIONAL_HPP
#define SIA_RATIONAL_HPP

#include "sia/bigint.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace sia {

// Exact rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(int64_t num, int64_t den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_string(std::string_view s);  // "p" or "p/q"
    std::string to_string() const;
    // decimal expansion with the given number of fractional digits, truncated toward zero
    std::string to_decimal(size_t digits) const;

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational reciprocal() const;
    Rational abs() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    int compare(const Rational& o) const;
    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    BigInt floor() const;
    BigInt ceil() const;
    BigInt trunc() const { return num_ / den_; }
    // nearest integer, ties toward +infinity
    BigInt round() const;

    static Rational pow(const Rational& base, int64_t e);

    double to_double() const;

    struct Hash {
        size_t operator()(const Rational& v) const {
            return BigInt::Hash()(v.num_) * 31 + BigInt::Hash()(v.den_);
        }
    };

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace sia

#endif
