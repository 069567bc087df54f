#ifndef SIA_ETACURVE_HPP
#define SIA_ETACURVE_HPP

#include "sia/bivar.hpp"
#include "sia/weilsearch.hpp"

namespace sia {

// norm-form plane curve attached to a monogenic generator eta of O_F:
// N_{F/Q}(x + y*eta - eta^2) = |disc_K| / disc_F^2
struct EtaCurve {
    CMFieldPtr fld;
    size_t eta_index = 0;
    NFElement eta;     // in F
    BivarPoly f;       // defining polynomial, = norm form minus rhs
    BigInt H;          // max |coefficient|
    BigInt rhs;        // |disc_K| / disc_F^2
};

struct IntegralPoint {
    BigInt A, B;
    friend bool operator==(const IntegralPoint& a, const IntegralPoint& b) {
        return a.A == b.A && a.B == b.B;
    }
};

// affine change of variables between two eta-curves:
// f_{eta1}(A1 x + A2 y - A3, B1 x + B2 y - B3) = f_{eta2}(x, y)
struct EtaTransform {
    BigInt A1, A2, A3, B1, B2, B3;
    NFElement v;  // the unit of F realizing the map
    IntegralPoint apply(const IntegralPoint& p) const;
};

EtaCurve build_eta_curve(const CMFieldPtr& fld, size_t eta_index);
EtaTransform eta_transform(const CMFieldPtr& fld, size_t eta1_index, size_t eta2_index);

// all integral points with |A|, |B| <= bound, sorted by (B, A)
std::vector<IntegralPoint> integral_points_box(const EtaCurve& c, const BigInt& bound);

// Weil generators above an integral point: u^2 = (A + B eta - eta^2)/delta,
// candidates +-u, kept when the three-condition test passes
std::vector<WeilGeneratorRecord> lift_point(const EtaCurve& c, const IntegralPoint& p);

// the integral point attached to a Weil generator record: 4*Omega*conj(Omega)
// = A + B eta
IntegralPoint point_of_record(const CMField& fld, const WeilGeneratorRecord& rec);

// full sextic pipeline: box-search the reference curve (first T entry), map
// the points to every other eta-curve by the affine transforms, lift
struct SexticSearch {
    EtaCurve reference;
    std::vector<IntegralPoint> reference_points;
    std::vector<WeilGeneratorRecord> generators;  // sorted by coordinates
};
SexticSearch sextic_weil_search(const CMFieldPtr& fld, const BigInt& box);

// Baker-Coates style height-bound report for g = 3 fields
struct BakerCoatesReport {
    std::vector<BigInt> per_eta_H;
    BigInt H_max;
    long kappa = 0;
    int norm_exponent = 0;  // 2 deg K
    double zeta2_lo = 0, zeta2_hi = 0;
    std::string point_height_bound;  // symbolic
    std::string count_bound;         // symbolic
};
BakerCoatesReport baker_coates_report(const CMFieldPtr& fld);

}  // namespace sia

#endif
