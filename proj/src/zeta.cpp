#include "sia/zeta.hpp"

#include "sia/errors.hpp"

#include <stdexcept>

namespace sia {

FrobeniusData frobenius_from_counts(const BigInt& q, int genus, const std::vector<BigInt>& counts) {
    if (static_cast<int>(counts.size()) < genus)
        throw std::invalid_argument("frobenius_from_counts: need counts up to the genus");
    FrobeniusData fd;
    fd.q = q;
    fd.genus = genus;
    fd.counts.assign(counts.begin(), counts.begin() + genus);

    // power sums s_i = q^i + 1 - #C(F_{q^i}); Hasse-Weil sanity
    std::vector<Rational> s;
    for (int i = 1; i <= genus; ++i) {
        BigInt qi = BigInt::pow(q, static_cast<uint64_t>(i));
        BigInt si = qi + BigInt(1) - fd.counts[static_cast<size_t>(i - 1)];
        BigInt bound2 = BigInt(4 * genus * genus) * qi;  // (2g q^{i/2})^2
        if (si * si > bound2)
            throw std::domain_error("frobenius_from_counts: count violates the Hasse-Weil bound");
        s.emplace_back(si);
    }
    fd.trace = s[0].num();

    // L(t) = prod (1 - alpha_j t) * (conjugate part): b_k via Newton
    std::vector<Rational> b(static_cast<size_t>(2 * genus) + 1, Rational(0));
    b[0] = Rational(1);
    for (int k = 1; k <= genus; ++k) {
        Rational acc = s[static_cast<size_t>(k - 1)];
        for (int i = 1; i < k; ++i) acc += b[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i - 1)];
        b[static_cast<size_t>(k)] = -acc / Rational(k);
        if (!b[static_cast<size_t>(k)].is_integer())
            throw std::domain_error("frobenius_from_counts: non-integral L-polynomial coefficient");
    }
    // functional equation b_{2g-i} = q^{g-i} b_i
    for (int i = genus - 1; i >= 0; --i)
        b[static_cast<size_t>(2 * genus - i)] =
            b[static_cast<size_t>(i)] * Rational(BigInt::pow(q, static_cast<uint64_t>(genus - i)));

    // charpoly P(x) = x^{2g} L(1/x): ascending coefficient j is b_{2g-j}
    std::vector<Rational> cp(static_cast<size_t>(2 * genus) + 1);
    for (int j = 0; j <= 2 * genus; ++j) cp[static_cast<size_t>(j)] = b[static_cast<size_t>(2 * genus - j)];
    fd.charpoly = QPoly(std::move(cp));
    return fd;
}

FrobeniusData frobenius_charpoly(const CurveModel& c, const CountOptions& opt) {
    std::vector<BigInt> counts;
    for (int i = 1; i <= c.genus; ++i) counts.push_back(count_points(c, static_cast<unsigned>(i), opt));
    return frobenius_from_counts(BigInt(static_cast<int64_t>(c.field.q())), c.genus, counts);
}

QPoly zeta_numerator(const FrobeniusData& fd) {
    // reverse of the charpoly coefficients
    std::vector<Rational> out(fd.charpoly.coeffs().rbegin(), fd.charpoly.coeffs().rend());
    return QPoly(std::move(out));
}

std::vector<BigInt> extension_trace(const CurveModel& elliptic, unsigned a_max, const CountOptions& opt) {
    if (elliptic.genus != 1) throw std::domain_error("extension_trace: elliptic curve required");
    BigInt q(static_cast<int64_t>(elliptic.field.q()));
    BigInt n1 = count_points(elliptic, 1, opt);
    BigInt t1 = q + BigInt(1) - n1;
    // t_a = alpha^a + beta^a: t_0 = 2, t_{a+1} = t_1 t_a - q t_{a-1}
    std::vector<BigInt> out;
    BigInt prev(2), cur = t1;
    for (unsigned a = 1; a <= a_max; ++a) {
        out.push_back(cur);
        BigInt next = t1 * cur - q * prev;
        prev = cur;
        cur = next;
    }
    // direct-count cross-check for the extensions within budget
    for (unsigned a = 2; a <= a_max; ++a) {
        BigInt qa = BigInt::pow(q, a);
        if (qa > BigInt(static_cast<int64_t>(opt.budget))) break;
        BigInt na = count_points(elliptic, a, opt);
        if (na != qa + BigInt(1) - out[a - 1])
            throw std::logic_error("extension_trace: recurrence disagrees with the direct count");
    }
    return out;
}

}  // namespace sia
