#include "sia/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sia {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal(size_t digits) const {
    BigInt scale = BigInt::pow(BigInt(10), digits);
    BigInt scaled = (num_ * scale) / den_;
    std::string mag = scaled.abs().to_string();
    if (mag.size() <= digits) mag.insert(0, digits + 1 - mag.size(), '0');
    std::string out;
    if (num_.is_negative()) out.push_back('-');
    out.append(mag.begin(), mag.end() - static_cast<long>(digits));
    if (digits) {
        out.push_back('.');
        out.append(mag.end() - static_cast<long>(digits), mag.end());
    }
    return out;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.is_negative()) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Rational Rational::abs() const { return is_negative() ? -*this : *this; }

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

int Rational::compare(const Rational& o) const {
    return (num_ * o.den_).compare(o.num_ * den_);
}

BigInt Rational::floor() const { return BigInt::fdivmod(num_, den_).first; }

BigInt Rational::ceil() const { return -BigInt::fdivmod(-num_, den_).first; }

BigInt Rational::round() const {
    // floor(x + 1/2)
    Rational t = *this + Rational(1, 2);
    return t.floor();
}

Rational Rational::pow(const Rational& base, int64_t e) {
    if (e < 0) return pow(base.reciprocal(), -e);
    Rational r(1);
    r.num_ = BigInt::pow(base.num_, static_cast<uint64_t>(e));
    r.den_ = BigInt::pow(base.den_, static_cast<uint64_t>(e));
    return r;
}

double Rational::to_double() const {
    // scale so both parts stay in double range
    size_t nb = num_.bit_length(), db = den_.bit_length();
    if (nb < 900 && db < 900) return num_.to_double() / den_.to_double();
    size_t drop = (nb > db ? nb : db) - 512;
    return (num_ >> static_cast<unsigned>(drop)).to_double() / (den_ >> static_cast<unsigned>(drop)).to_double();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace sia
