#ifndef SIA_FINITEFIELD_HPP
#define SIA_FINITEFIELD_HPP

#include "sia/bigint.hpp"
#include "sia/modpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sia {

// element of F_{p^a}: ascending coefficient vector of length a, entries < p
using FF = std::vector<uint64_t>;

// F_{p^a} with a deterministic modulus: a fixed table for small (p, a)
// (matching the conventional generators used by the worked examples), the
// lexicographically smallest monic irreducible otherwise.
class FiniteField {
public:
    FiniteField() = default;
    static FiniteField make(uint64_t p, unsigned a);

    uint64_t p() const { return p_; }
    unsigned a() const { return a_; }
    uint64_t q() const { return q_; }
    const std::vector<uint64_t>& modulus() const { return mod_; }  // size a+1, monic; empty for a = 1

    FF zero() const { return FF(a_, 0); }
    FF one() const;
    FF from_int(uint64_t v) const;
    FF gen() const;  // the class of x (a >= 2)

    FF add(const FF& x, const FF& y) const;
    FF sub(const FF& x, const FF& y) const;
    FF neg(const FF& x) const;
    FF mul(const FF& x, const FF& y) const;
    FF inv(const FF& x) const;
    FF pow(FF x, uint64_t e) const;
    bool is_zero(const FF& x) const;
    bool eq(const FF& x, const FF& y) const { return x == y; }

    uint64_t index(const FF& x) const;  // mixed-radix encoding
    FF from_index(uint64_t idx) const;
    // odometer step through all elements; returns false after the last one
    bool next(FF& x) const;

    // absolute trace to F_p
    uint64_t trace_to_prime(const FF& x) const;
    // quadratic character for odd p: 1 square, -1 non-square, 0 zero
    int chi(const FF& x) const;

    // image of the subfield generator under an embedding of F_{p^b} (b | a):
    // the first root of the subfield modulus in index order
    FF embed_subfield_gen(const FiniteField& sub) const;
    FF embed(const FiniteField& sub, const FF& x, const FF& sub_gen_image) const;

    std::string to_string(const FF& x, std::string_view gen_symbol = "g") const;

private:
    uint64_t p_ = 0;
    unsigned a_ = 0;
    uint64_t q_ = 0;
    std::vector<uint64_t> mod_;
};

}  // namespace sia

#endif
