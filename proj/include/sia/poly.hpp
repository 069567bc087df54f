#ifndef SIA_POLY_HPP
#define SIA_POLY_HPP

#include "sia/rational.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sia {

// Univariate polynomial over Q, dense ascending coefficients, trimmed.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit QPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
    static QPoly constant(Rational v);
    static QPoly x();
    static QPoly monomial(Rational coeff, size_t deg);
    static QPoly from_int_coeffs(const std::vector<int64_t>& ascending);

    // "c0 + c1*x + c2*x^2" literal syntax (signs, rationals "p/q", sparse terms)
    static QPoly parse(std::string_view s);
    std::string to_string(std::string_view var = "x") const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_integer_poly() const;

    const Rational& lc() const;
    Rational at(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& v) const;

    QPoly derivative() const;
    QPoly monic() const;
    QPoly scaled(const Rational& s) const;
    // x -> -x
    QPoly reflect() const;
    // x -> x + t
    QPoly translate(const Rational& t) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a.c_ == b.c_); }

    // euclidean division, divisor nonzero
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    static QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
    static QPoly quo(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

    // monic gcd
    static QPoly gcd(QPoly a, QPoly b);
    QPoly squarefree_part() const;

    // content of the integer-cleared form and the primitive integer polynomial:
    // *this == (sign-carrying content) * primitive, primitive has integer coprime
    // coefficients and positive leading coefficient
    std::pair<Rational, QPoly> primitive_form() const;

    friend std::ostream& operator<<(std::ostream& os, const QPoly& p);

private:
    std::vector<Rational> c_;
    void trim();
};

// Res(f, g); subresultant PRS on the primitive integer parts with exact
// scale bookkeeping. Both zero is a domain error.
Rational poly_resultant(const QPoly& f, const QPoly& g);

// Disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f); deg f >= 1
Rational poly_discriminant(const QPoly& f);

// Irreducibility over Q for integer polynomials of degree <= 12.
// Certificate search mod small primes, degree-pattern screening, then
// Kronecker-style exhaustive factor interpolation as the complete fallback.
bool is_irreducible_over_Q(const QPoly& f);

}  // namespace sia

#endif
