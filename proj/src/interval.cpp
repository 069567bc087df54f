#include "sia/interval.hpp"

namespace sia {

QInterval sqrt_interval(const Rational& v, unsigned prec_bits) {
    if (v.is_negative()) throw std::domain_error("sqrt_interval: negative");
    if (v.is_zero()) return QInterval(Rational(0));
    // floor(sqrt(num * 4^p / den)) / 2^p
    BigInt scaled = (v.num() << (2 * prec_bits)) / v.den();
    BigInt s = BigInt::isqrt(scaled);
    Rational denom = Rational(BigInt(1) << prec_bits);
    return QInterval(Rational(s) / denom, Rational(s + BigInt(1)) / denom);
}

QInterval sqrt_interval(const QInterval& v, unsigned prec_bits) {
    Rational lo = v.lo.is_negative() ? Rational(0) : v.lo;
    return QInterval(sqrt_interval(lo, prec_bits).lo, sqrt_interval(v.hi, prec_bits).hi);
}

}  // namespace sia
