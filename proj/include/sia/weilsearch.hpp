#ifndef SIA_WEILSEARCH_HPP
#define SIA_WEILSEARCH_HPP

#include "sia/cmfield.hpp"

#include <vector>

namespace sia {

// exact decision h(u) <= B for u in the totally real field F, B rational
bool height_le(const NFElement& u_in_F, const Rational& bound);

// all units +-u1^k1...ur^kr of O_F^x with h(u) <= B, each exactly once,
// ordered lexicographically by (|k1|, ..., |kr|, signs); needs fund_units
std::vector<NFElement> enumerate_units(const CMField& fld, const Rational& bound);

// unit-driven search over (u, eta): emits exactly the Weil generators whose
// unit part satisfies h(u) <= B; g >= 2
std::vector<WeilGeneratorRecord> algorithm1(const CMField& fld, const Rational& bound);

// closed form for imaginary quadratic fields: alpha = a +- omega, h(alpha) <= N
std::vector<WeilGeneratorRecord> quadratic_weil_gens(const CMField& fld, const BigInt& height_max);
// count of the above without materializing records
BigInt quadratic_weil_count(const CMField& fld, const BigInt& height_max);

struct QuarticCongruence {
    uint64_t order_m = 0;                 // multiplicative order of u0 in (O_K/4O_K)^x
    std::vector<uint64_t> admissible;     // residues k in [0, m) with alpha(u0^k, eta0) integral
    std::vector<std::vector<BigInt>> table;  // per k: class of 4*alpha(u0^k, eta0) mod 4O_K
    Rational density_c6;                  // #admissible / m
    double rho = 0;                       // 4*C6 / log h(u0)
};
QuarticCongruence quartic_congruence(const CMField& fld);

struct CensusRow {
    BigInt N;
    uint64_t count = 0;
    double predicted = 0;
};

// exact counts of Weil generators of height <= N over the grid, with the
// asymptotic prediction (4N for g = 1, rho*log N for g = 2); for g = 2 the
// counts come from algorithm1 at the given unit bound
std::vector<CensusRow> census(const CMField& fld, const std::vector<BigInt>& grid, const Rational& bound);

// observed [min, max] of h(alpha)/h(u)^2 over records with h(u) >= 2
std::pair<double, double> quartic_height_law(const CMField& fld, const std::vector<WeilGeneratorRecord>& recs);

}  // namespace sia

#endif
