#ifndef SIA_CURVE_HPP
#define SIA_CURVE_HPP

#include "sia/finitefield.hpp"

#include <string>
#include <vector>

namespace sia {

enum class CurveKind { EllipticWeierstrass, Hyperelliptic };

// y^2 + h(x) y = f(x) over F_{p^a}; smooth projective model semantics
struct CurveModel {
    FiniteField field;
    std::vector<FF> h;  // ascending, possibly empty
    std::vector<FF> f;  // ascending
    CurveKind kind = CurveKind::EllipticWeierstrass;
    int genus = 0;

    // "y^2 + h(x)*y = f(x) over GF(p^a)" or "y^2 = f(x) over GF(p)";
    // 'g' denotes the extension generator in coefficients
    static CurveModel parse(const std::string& text);
    // construct from integer coefficient lists (reduced mod p)
    static CurveModel make(const FiniteField& fld, const std::vector<int64_t>& h_coeffs,
                           const std::vector<int64_t>& f_coeffs);
    static CurveModel make_ff(const FiniteField& fld, std::vector<FF> h_coeffs, std::vector<FF> f_coeffs);

    int deg_h() const;
    int deg_f() const;
    bool is_smooth() const;
    std::string to_string() const;

    // general Weierstrass coefficients (elliptic only): a1, a3 from h; a2, a4, a6 from f
    FF a1() const, a3() const, a2() const, a4() const, a6() const;
};

}  // namespace sia

#endif
