#ifndef SIA_ROOTS_HPP
#define SIA_ROOTS_HPP

#include "sia/interval.hpp"
#include "sia/poly.hpp"

#include <vector>

namespace sia {

// Sturm sequence of a squarefree-ized polynomial.
class SturmChain {
public:
    explicit SturmChain(const QPoly& f);

    // number of real roots in (a, b]
    int count_roots(const Rational& a, const Rational& b) const;
    int sign_changes_at(const Rational& v) const;
    int total_real_roots() const;

    const QPoly& poly() const { return f_; }

private:
    QPoly f_;  // squarefree part
    std::vector<QPoly> chain_;
};

// Isolating intervals for all real roots, sorted ascending. Intervals are
// half-open in spirit (roots counted in (lo, hi]); exact rational roots are
// returned as degenerate [r, r] intervals.
std::vector<QInterval> isolate_real_roots(const QPoly& f);

// Bisect an isolating interval until width <= eps (no-op for point intervals).
QInterval refine_root(const SturmChain& chain, QInterval iv, const Rational& eps);

// Cauchy bound: all complex roots have modulus < bound
Rational cauchy_root_bound(const QPoly& f);

// Largest real root of f, via isolation + refinement to width <= eps.
// Throws if f has no real root.
QInterval largest_real_root(const QPoly& f, const Rational& eps);

// power sums p_1..p_k of the roots of monic f, by Newton's identities
std::vector<Rational> root_power_sums(const QPoly& f, size_t k);

// monic polynomial of degree n with prescribed power sums p_1..p_n
QPoly poly_from_power_sums(const std::vector<Rational>& p);

// Interval evaluation of f over iv.
QInterval eval_interval(const QPoly& f, const QInterval& iv);

}  // namespace sia

#endif
