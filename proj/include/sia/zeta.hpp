#ifndef SIA_ZETA_HPP
#define SIA_ZETA_HPP

#include "sia/pointcount.hpp"
#include "sia/poly.hpp"

namespace sia {

struct FrobeniusData {
    BigInt q;                    // base field size
    int genus = 0;
    std::vector<BigInt> counts;  // #C(F_{q^i}), i = 1..genus
    QPoly charpoly;              // degree 2g, monic
    BigInt trace;                // t = q + 1 - #C(F_q)
};

// counts over F_{q^i} for i = 1..g, then Newton's identities and the
// functional equation; Hasse-Weil bounds are asserted on every count
FrobeniusData frobenius_charpoly(const CurveModel& c, const CountOptions& opt = {});

// build the data from externally supplied counts (helpers/tests)
FrobeniusData frobenius_from_counts(const BigInt& q, int genus, const std::vector<BigInt>& counts);

// L(t) = t^{2g} charpoly(1/t): ascending coefficients, constant 1
QPoly zeta_numerator(const FrobeniusData& fd);

// traces of the Frobenius of an elliptic curve over F_{q^a}, a = 1..a_max,
// via the exact two-term recurrence; small extensions are cross-checked by
// direct counting within the budget
std::vector<BigInt> extension_trace(const CurveModel& elliptic, unsigned a_max,
                                    const CountOptions& opt = {});

}  // namespace sia

#endif
