#ifndef SIA_INTERVAL_HPP
#define SIA_INTERVAL_HPP

#include "sia/rational.hpp"

#include <stdexcept>

namespace sia {

// Closed rational interval [lo, hi]; exact endpoint arithmetic.
struct QInterval {
    Rational lo, hi;

    QInterval() = default;
    QInterval(Rational v) : lo(v), hi(v) {}
    QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::domain_error("QInterval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) * Rational(1, 2); }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }

    QInterval operator-() const { return {-hi, -lo}; }

    friend QInterval operator+(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend QInterval operator-(const QInterval& a, const QInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend QInterval operator*(const QInterval& a, const QInterval& b) {
        Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        Rational mn = c[0], mx = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < mn) mn = c[i];
            if (c[i] > mx) mx = c[i];
        }
        return {mn, mx};
    }
    friend QInterval operator*(const QInterval& a, const Rational& s) {
        return s.sign() >= 0 ? QInterval{a.lo * s, a.hi * s} : QInterval{a.hi * s, a.lo * s};
    }
    friend QInterval operator+(const QInterval& a, const Rational& s) { return {a.lo + s, a.hi + s}; }

    QInterval reciprocal() const {
        if (contains_zero()) throw std::domain_error("QInterval: reciprocal across zero");
        return {hi.reciprocal(), lo.reciprocal()};
    }

    QInterval abs() const {
        if (lo.sign() >= 0) return *this;
        if (hi.sign() <= 0) return -*this;
        return {Rational(0), hi > -lo ? hi : -lo};
    }

    // definite comparisons; a "maybe" outcome means refinement is needed
    bool surely_lt(const Rational& v) const { return hi < v; }
    bool surely_gt(const Rational& v) const { return lo > v; }
    bool surely_le(const Rational& v) const { return hi <= v; }

    static QInterval hull(const QInterval& a, const QInterval& b) {
        return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
    }
};

// [floor(sqrt(v)*2^prec)/2^prec, (floor+1)/2^prec] for v >= 0
QInterval sqrt_interval(const Rational& v, unsigned prec_bits);
QInterval sqrt_interval(const QInterval& v, unsigned prec_bits);

}  // namespace sia

#endif
