#ifndef SIA_CLASSIFY_HPP
#define SIA_CLASSIFY_HPP

#include "sia/catalog.hpp"
#include "sia/zeta.hpp"

#include <optional>

namespace sia {

// Schoof-formula-based five-case test for elliptic curves
struct EllipticVerdict {
    bool super_isolated = false;
    int case_number = 0;  // 1..5 when super_isolated; 0 otherwise
    std::string witness;
};
EllipticVerdict classify_elliptic(const BigInt& q, const BigInt& t);

struct AVVerdict {
    enum class Status {
        SuperIsolated,
        NotSuperIsolated,
        NotSimple,     // reducible charpoly: not handled
        NotOrdinary,   // out of scope for the ordinary test
        UnknownField,  // K = Q(pi) not matched by the catalog: no claim made
    };
    Status status = Status::UnknownField;
    bool verdict = false;  // true only for SuperIsolated
    std::string field_label;
    std::string witness;
    int failed_condition = 0;  // Weil-generator condition when NotSuperIsolated
};
// Honda-Tate test for ordinary simple abelian varieties: pi is a Weil
// generator for K = Q(pi) and K has class number 1. The catalog supplies the
// field data; pi is located inside the catalog field by exact reconstruction.
AVVerdict classify_ordinary_av(const FrobeniusData& fd, const Catalog& cat);

// exhaustive isomorphism test over Weierstrass coordinate changes (small q)
bool curves_isomorphic(const CurveModel& e1, const CurveModel& e2);

struct IsoClass {
    std::vector<FF> rep;  // (a1, a2, a3, a4, a6)
    BigInt npoints;
    std::string rep_text;
};
struct IsogenyClassReport {
    BigInt npoints;
    BigInt trace;
    std::vector<IsoClass> classes;
    bool singleton() const { return classes.size() == 1; }
};
struct IsogenyCensus {
    uint64_t q = 0;
    uint64_t curve_models = 0;     // nonsingular Weierstrass quintuples
    uint64_t iso_classes = 0;
    std::vector<IsogenyClassReport> isogeny_classes;  // grouped by point count
};
// full enumeration of elliptic curves over F_q up to isomorphism, grouped
// into isogeny classes by point count; q <= 16
IsogenyCensus isogeny_census(uint64_t q);

struct CmPrimeHit {
    BigInt b;       // the real-part parameter: p = b^2 + d/4 (even d), (b^2+d)/4 (odd d)
    BigInt p;
    WeilGeneratorRecord rec;
    size_t bits = 0;
    size_t hamming = 0;
};
// Weil generators a + omega of an imaginary quadratic field whose norm is a
// probable prime, nonzero trace, over the given parameter range
std::vector<CmPrimeHit> cm_prime_search(const CMField& fld, const BigInt& b_min, const BigInt& b_max);

}  // namespace sia

#endif
