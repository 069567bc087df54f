#ifndef SIA_NUMBERFIELD_HPP
#define SIA_NUMBERFIELD_HPP

#include "sia/interval.hpp"
#include "sia/poly.hpp"
#include "sia/roots.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace sia {

// ---- small exact linear algebra over Q ----
using QMatrix = std::vector<std::vector<Rational>>;  // rows

// solve A x = b for possibly overdetermined consistent systems (m >= n);
// returns nullopt when inconsistent or rank-deficient
std::optional<std::vector<Rational>> qmat_solve(QMatrix a, std::vector<Rational> b);
Rational qmat_det(QMatrix a);
std::optional<QMatrix> qmat_inverse(QMatrix a);

// row Hermite form of an integer matrix; returns the nonzero rows (a basis
// of the row lattice), count = rank
std::vector<std::vector<BigInt>> hnf_rows(std::vector<std::vector<BigInt>> m);

class NFElement;

// Number field Q[x]/(m), m monic irreducible with integer coefficients.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static std::shared_ptr<const NumberField> create(const QPoly& defining_poly);

    const QPoly& defining_poly() const { return poly_; }
    int degree() const { return deg_; }
    int real_embeddings_count() const { return r1_; }
    int complex_pairs() const { return r2_; }
    bool is_totally_real() const { return r2_ == 0; }

    // isolating intervals of the real roots of the defining polynomial,
    // refined to width <= eps, ascending
    std::vector<QInterval> real_roots(const Rational& eps) const;

    NFElement zero() const;
    NFElement one() const;
    NFElement generator() const;
    NFElement from_rational(const Rational& v) const;
    NFElement element(std::vector<Rational> coords) const;

private:
    explicit NumberField(const QPoly& p);
    QPoly poly_;
    int deg_;
    int r1_, r2_;
    mutable std::mutex mu_;
    mutable std::vector<QInterval> root_cache_;  // memoized isolation, refined on demand
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElement {
public:
    NFElement() = default;
    NFElement(FieldPtr fld, std::vector<Rational> coords);

    const FieldPtr& field() const { return fld_; }
    const std::vector<Rational>& coords() const { return coords_; }
    Rational coord(size_t i) const { return i < coords_.size() ? coords_[i] : Rational(0); }
    QPoly as_poly() const { return QPoly(coords_); }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational

    NFElement operator-() const;
    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    NFElement operator*(const Rational& s) const;
    NFElement operator+(const Rational& s) const;
    NFElement inverse() const;
    NFElement pow(uint64_t e) const;

    friend bool operator==(const NFElement& a, const NFElement& b);
    friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }
    // lexicographic coordinate order, for deterministic output
    static bool coord_less(const NFElement& a, const NFElement& b);

    // substitute this element's polynomial at the given element (same field):
    // used to apply automorphisms given a generator image
    NFElement substitute_generator(const NFElement& generator_image) const;

    QPoly char_poly() const;  // degree n, monic
    QPoly min_poly() const;   // monic squarefree
    Rational norm() const;
    Rational trace() const;
    bool is_integral() const;

    // max |sigma(a)| over all complex embeddings, certified enclosure;
    // prec_bits >= 64, relative width <= 2^(-prec_bits/2)
    QInterval height(unsigned prec_bits = 64) const;

    // interval values of the element at each real embedding of the field,
    // ascending by embedding, each of width <= eps-ish (refined as needed)
    std::vector<QInterval> real_embedding_values(const Rational& eps) const;

    std::string to_string(std::string_view var = "z") const;

private:
    FieldPtr fld_;
    std::vector<Rational> coords_;
    void check_same_field(const NFElement& o) const;
};

// coordinates of target in the Q-span of basis, if any
std::optional<std::vector<Rational>> express_in_basis(const std::vector<NFElement>& basis,
                                                      const NFElement& target);

// discriminant of the Z-module spanned by the given elements (must have full
// rank = field degree): det of the trace form on an HNF basis
Rational module_discriminant(const std::vector<NFElement>& gens);

// square root in a totally real field: v with v*v == w and integer
// coordinates over the power basis (exact verification; certified-interval
// reconstruction). Returns one of +-v; nullopt when no such root exists.
std::optional<NFElement> sqrt_in_totally_real(const NFElement& w);

// element of the field with prescribed integer coordinates matching the given
// target values at the real embeddings (one value per embedding, in embedding
// order); used to locate algebraic integers from numerical data. Exactness
// comes from the final verification predicate.
std::optional<NFElement> reconstruct_integer_coords(
    const FieldPtr& fld, const std::vector<double>& embedding_targets);

}  // namespace sia

#endif
