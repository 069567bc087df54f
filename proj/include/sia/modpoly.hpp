#ifndef SIA_MODPOLY_HPP
#define SIA_MODPOLY_HPP

#include "sia/poly.hpp"

#include <cstdint>
#include <vector>

namespace sia {

// Polynomials over F_p for machine-word primes p < 2^31.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(uint64_t p, std::vector<uint64_t> ascending);
    static ModPoly from_qpoly(const QPoly& f, uint64_t p);  // integer-coefficient input
    static ModPoly xpoly(uint64_t p);

    uint64_t prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t at(size_t k) const { return k < c_.size() ? c_[k] : 0; }

    ModPoly monic() const;
    ModPoly derivative() const;
    uint64_t eval(uint64_t x) const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);

    static std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
    static ModPoly rem(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }
    static ModPoly gcd(ModPoly a, ModPoly b);  // monic

    // this^p^k mod f via k-fold Frobenius powering
    ModPoly frobenius_pow(const ModPoly& f, unsigned k) const;
    ModPoly powmod(uint64_t e, const ModPoly& f) const;

    // degree multiset of the irreducible factorization; requires squarefree input
    std::vector<int> factor_degrees() const;
    bool is_irreducible() const;

    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
    uint64_t p_ = 0;
    std::vector<uint64_t> c_;
    void trim();
};

}  // namespace sia

#endif
