#ifndef SIA_CMFIELD_HPP
#define SIA_CMFIELD_HPP

#include "sia/numberfield.hpp"

#include <map>
#include <optional>
#include <string>

namespace sia {

// A CM field K of degree 2g with totally real subfield F of degree g,
// complex conjugation, and the order data used by the search machinery.
// Catalog-supplied parts (gamma, T, units, class number) are optional;
// predicates that need a missing datum throw.
class CMField {
public:
    std::string label;
    FieldPtr K;
    FieldPtr F;
    NFElement F_in_K;   // image of F's generator in K; generates O_F
    NFElement conj_gen; // image of K's generator under complex conjugation

    std::optional<NFElement> gamma;      // O_K = O_F[gamma]
    std::vector<NFElement> T;            // in F; one representative per translation class
    std::vector<NFElement> fund_units;   // in F; rank g-1 when present
    BigInt disc_K;
    BigInt disc_F;
    long class_number = 0;  // 0 = unknown
    long kappa = 0;         // number of roots of unity; 0 = unknown
    std::string cm_curve;   // optional global model used by the CM construction
    std::map<std::string, std::string> provenance;

    int g() const { return F->degree(); }
    int deg() const { return K->degree(); }

    // complex conjugation on K
    NFElement conj(const NFElement& a) const;
    bool fixed_by_conj(const NFElement& a) const;

    // F <-> K transport
    NFElement to_K(const NFElement& a_in_F) const;
    std::optional<NFElement> to_F(const NFElement& a_in_K) const;

    NFElement gamma_or_throw() const;
    NFElement diff_gamma() const;   // gamma - conj(gamma)
    NFElement delta_F() const;      // (gamma - conj gamma)(conj gamma - gamma), as element of F

    // integral basis {eta0^i * gamma^j : 0 <= i < g, j in {0,1}}, eta0 = F_in_K
    const std::vector<NFElement>& integral_basis() const;
    // coordinates over the integral basis (rational in general; integer for
    // elements of O_K)
    std::vector<Rational> integral_coords(const NFElement& a_in_K) const;

    // cheap structural checks run at load time
    void validate_structure() const;

private:
    mutable std::vector<NFElement> basis_cache_;
    mutable QMatrix basis_inv_cache_;
    mutable std::mutex mu_;
    const QMatrix& basis_inverse() const;
};

using CMFieldPtr = std::shared_ptr<const CMField>;

// verified Weil generator together with its decomposition data
struct WeilGeneratorRecord {
    NFElement alpha;   // in K
    NFElement u;       // in F, unit
    NFElement eta;     // in F, member of T
    size_t eta_index = 0;
    BigInt a;
    BigInt q;          // alpha * conj(alpha)
};

// outcome of the three-condition test, naming the first failing condition
struct WeilGeneratorCheck {
    bool ok = false;
    int failed_condition = 0;  // 0 = all pass; 1..3 otherwise
    std::string detail;
    std::optional<BigInt> q;   // set when condition 1 holds
};

// alpha*conj(alpha) when it is a rational integer; requires alpha integral
std::optional<BigInt> is_weil_number(const CMField& fld, const NFElement& alpha);

// the equivalent three-condition characterization:
//   (1) alpha*conj(alpha) in Z
//   (2) Z[alpha+conj(alpha)] = O_F, tested via disc(minpoly) = disc_F at degree g
//   (3) (alpha-conj(alpha))/(gamma-conj(gamma)) is a unit of O_F
WeilGeneratorCheck is_weil_generator(const CMField& fld, const NFElement& alpha);

// unique (u, eta, a) with alpha = (u(gamma-conj gamma) + eta + a)/2
WeilGeneratorRecord decompose(const CMField& fld, const NFElement& alpha);

// rebuild alpha from a record via the closed form; exact
NFElement recompose(const CMField& fld, const WeilGeneratorRecord& rec);

struct CandidateExpansion {
    Rational a;                      // -2 * coefficient of eta
    std::vector<Rational> residuals; // coefficients of eta^2..eta^(g-1)
    NFElement omega;                 // (u(gamma-conj gamma) + eta)/2, in K
    NFElement alpha;                 // omega - a1
};

// expansion of Omega*conj(Omega) over the basis {1, eta, ..., eta^(g-1)} of F
CandidateExpansion a_from_u_eta(const CMField& fld, const NFElement& u_in_F, const NFElement& eta_in_F);

// integral coordinates reduced mod 4, entries in [0,4)
std::vector<BigInt> mod4_class(const CMField& fld, const NFElement& a_in_K);

// smallest prime p < 2^g with more embeddings F -> Q_p than Z[x] -> F_p
// admits (certified p-adic root count of F's defining polynomial > p);
// such a prime certifies that F is not monogenic
std::optional<uint64_t> monogenic_obstruction(const CMField& fld);

// certified count of roots of f in Z_p (Hensel-ball separation)
int count_padic_roots(const QPoly& f, uint64_t p);

// relative discriminant and different of an element over F:
// ((a - conj a)^2, a - conj a); both zero when a lies in F
std::pair<NFElement, NFElement> element_disc_diff(const CMField& fld, const NFElement& a);

}  // namespace sia

#endif
