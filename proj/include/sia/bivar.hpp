#ifndef SIA_BIVAR_HPP
#define SIA_BIVAR_HPP

#include "sia/bigint.hpp"
#include "sia/poly.hpp"

#include <string>
#include <vector>

namespace sia {

// dense bivariate polynomial over Z
class BivarPoly {
public:
    BivarPoly() = default;
    BivarPoly(size_t deg_x, size_t deg_y);

    const BigInt& at(size_t i, size_t j) const;
    void set(size_t i, size_t j, BigInt v);
    size_t deg_x() const { return c_.empty() ? 0 : c_.size() - 1; }
    size_t deg_y() const { return c_.empty() || c_[0].empty() ? 0 : c_[0].size() - 1; }

    BigInt eval(const BigInt& x, const BigInt& y) const;
    QPoly at_y(const BigInt& y) const;  // univariate in x

    // f(A1 x + A2 y - A3, B1 x + B2 y - B3), exact
    BivarPoly compose_affine(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& b1,
                             const BigInt& b2, const BigInt& b3) const;

    BigInt max_abs_coeff() const;
    void trim();

    friend bool operator==(const BivarPoly& a, const BivarPoly& b);

    std::string to_string() const;

private:
    // c_[i][j] is the coefficient of x^i y^j
    std::vector<std::vector<BigInt>> c_;
};

}  // namespace sia

#endif
