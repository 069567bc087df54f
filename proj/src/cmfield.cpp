#include "sia/cmfield.hpp"

#include "sia/primality.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sia {

NFElement CMField::conj(const NFElement& a) const { return a.substitute_generator(conj_gen); }

bool CMField::fixed_by_conj(const NFElement& a) const { return conj(a) == a; }

NFElement CMField::to_K(const NFElement& a_in_F) const {
    NFElement acc = K->zero();
    const auto& c = a_in_F.coords();
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * F_in_K;
        acc = acc + c[i];
    }
    return acc;
}

std::optional<NFElement> CMField::to_F(const NFElement& a_in_K) const {
    std::vector<NFElement> powers;
    NFElement p = K->one();
    for (int i = 0; i < g(); ++i) {
        powers.push_back(p);
        p = p * F_in_K;
    }
    auto coords = express_in_basis(powers, a_in_K);
    if (!coords) return std::nullopt;
    return F->element(std::move(*coords));
}

NFElement CMField::gamma_or_throw() const {
    if (!gamma) throw std::domain_error(label + ": catalog record has no relative generator gamma");
    return *gamma;
}

NFElement CMField::diff_gamma() const {
    NFElement gm = gamma_or_throw();
    return gm - conj(gm);
}

NFElement CMField::delta_F() const {
    NFElement d = diff_gamma();
    NFElement delta_K = d * conj(d);  // (gamma - conj gamma)(conj gamma - gamma)
    auto f = to_F(delta_K);
    if (!f) throw std::domain_error(label + ": delta is not in F (corrupt conjugation data)");
    return *f;
}

const std::vector<NFElement>& CMField::integral_basis() const {
    std::lock_guard<std::mutex> lk(mu_);
    if (basis_cache_.empty()) {
        NFElement gm = gamma_or_throw();
        NFElement pw = K->one();
        std::vector<NFElement> b;
        for (int i = 0; i < g(); ++i) {
            b.push_back(pw);
            pw = pw * F_in_K;
        }
        for (int i = 0; i < g(); ++i) b.push_back(b[static_cast<size_t>(i)] * gm);
        basis_cache_ = std::move(b);
    }
    return basis_cache_;
}

const QMatrix& CMField::basis_inverse() const {
    const auto& basis = integral_basis();
    std::lock_guard<std::mutex> lk(mu_);
    if (basis_inv_cache_.empty()) {
        size_t n = static_cast<size_t>(deg());
        QMatrix m(n, std::vector<Rational>(n, Rational(0)));
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) m[i][j] = basis[j].coord(i);
        auto inv = qmat_inverse(std::move(m));
        if (!inv) throw std::domain_error(label + ": integral basis is singular (corrupt catalog)");
        basis_inv_cache_ = std::move(*inv);
    }
    return basis_inv_cache_;
}

std::vector<Rational> CMField::integral_coords(const NFElement& a_in_K) const {
    const QMatrix& inv = basis_inverse();
    size_t n = static_cast<size_t>(deg());
    std::vector<Rational> out(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i] += inv[i][j] * a_in_K.coord(j);
    return out;
}

void CMField::validate_structure() const {
    if (K->degree() != 2 * F->degree()) throw std::domain_error(label + ": [K:Q] != 2[F:Q]");
    if (!F->is_totally_real()) throw std::domain_error(label + ": F is not totally real");
    if (K->real_embeddings_count() != 0) throw std::domain_error(label + ": K is not totally imaginary");
    // F_in_K is a root of F's defining polynomial
    QPoly mf = F->defining_poly();
    NFElement val = K->zero();
    for (size_t i = mf.coeffs().size(); i-- > 0;) {
        val = val * F_in_K;
        val = val + mf.at(i);
    }
    if (!val.is_zero()) throw std::domain_error(label + ": F_in_K is not a root of F's polynomial");
    // conjugation is a nontrivial involution fixing F
    NFElement gen = K->generator();
    if (conj_gen == gen) throw std::domain_error(label + ": conjugation is the identity");
    QPoly mk = K->defining_poly();
    NFElement mkc = K->zero();
    for (size_t i = mk.coeffs().size(); i-- > 0;) {
        mkc = mkc * conj_gen;
        mkc = mkc + mk.at(i);
    }
    if (!mkc.is_zero()) throw std::domain_error(label + ": conj image is not a root of K's polynomial");
    if (conj(conj_gen) != gen) throw std::domain_error(label + ": conjugation is not an involution");
    if (!fixed_by_conj(F_in_K)) throw std::domain_error(label + ": conjugation does not fix F");
    if (gamma && !gamma->is_integral()) throw std::domain_error(label + ": gamma is not integral");
    if (gamma && fixed_by_conj(*gamma)) throw std::domain_error(label + ": gamma is fixed by conjugation");
}

std::optional<BigInt> is_weil_number(const CMField& fld, const NFElement& alpha) {
    if (!alpha.is_integral()) throw std::domain_error("is_weil_number: input not integral");
    NFElement n = alpha * fld.conj(alpha);
    if (!n.is_rational()) return std::nullopt;
    Rational v = n.rational_value();
    if (!v.is_integer()) return std::nullopt;  // cannot happen for integral alpha; defensive against bad data
    return v.num();
}

WeilGeneratorCheck is_weil_generator(const CMField& fld, const NFElement& alpha) {
    WeilGeneratorCheck out;
    if (!alpha.is_integral()) throw std::domain_error("is_weil_generator: input not integral");

    auto q = is_weil_number(fld, alpha);
    if (!q) {
        out.failed_condition = 1;
        out.detail = "alpha*conj(alpha) is not a rational integer";
        return out;
    }
    out.q = *q;

    NFElement s = alpha + fld.conj(alpha);
    QPoly mp = s.min_poly();
    if (mp.degree() != fld.g()) {
        out.failed_condition = 2;
        out.detail = "alpha+conj(alpha) does not generate F (degree " + std::to_string(mp.degree()) + ")";
        return out;
    }
    Rational disc = poly_discriminant(mp);
    if (!disc.is_integer() || disc.num() != fld.disc_F) {
        out.failed_condition = 2;
        out.detail = "disc Z[alpha+conj(alpha)] = " + disc.to_string() + " != disc F = " + fld.disc_F.to_string();
        return out;
    }

    NFElement d = alpha - fld.conj(alpha);
    NFElement dg = fld.diff_gamma();
    NFElement u = d / dg;
    if (!fld.fixed_by_conj(u) || !u.is_integral()) {
        out.failed_condition = 3;
        out.detail = "(alpha-conj alpha)/(gamma-conj gamma) is not in O_F";
        return out;
    }
    Rational nu = u.norm();  // norm from K: square of the F-norm
    if (!(nu.is_one())) {
        out.failed_condition = 3;
        out.detail = "(alpha-conj alpha)/(gamma-conj gamma) has norm " + nu.to_string() + ", not a unit";
        return out;
    }
    out.ok = true;
    return out;
}

WeilGeneratorRecord decompose(const CMField& fld, const NFElement& alpha) {
    auto chk = is_weil_generator(fld, alpha);
    if (!chk.ok) throw std::domain_error("decompose: not a Weil generator (condition " +
                                         std::to_string(chk.failed_condition) + ")");
    if (fld.T.empty()) throw std::domain_error(fld.label + ": catalog record has no T data");
    WeilGeneratorRecord rec;
    rec.alpha = alpha;
    rec.q = *chk.q;
    NFElement u_K = (alpha - fld.conj(alpha)) / fld.diff_gamma();
    auto u_F = fld.to_F(u_K);
    if (!u_F) throw std::domain_error("decompose: unit is not in F");
    rec.u = *u_F;

    NFElement s_K = alpha + fld.conj(alpha);
    auto s_F = fld.to_F(s_K);
    if (!s_F) throw std::domain_error("decompose: trace part is not in F");
    for (size_t i = 0; i < fld.T.size(); ++i) {
        NFElement diff = *s_F - fld.T[i];
        if (!diff.is_rational()) continue;
        Rational c = diff.rational_value();
        if (!c.is_integer()) continue;
        rec.eta = fld.T[i];
        rec.eta_index = i;
        rec.a = c.num();
        return rec;
    }
    throw std::domain_error(fld.label + ": alpha+conj(alpha) matches no T representative mod Z (corrupt catalog T)");
}

NFElement recompose(const CMField& fld, const WeilGeneratorRecord& rec) {
    NFElement num = fld.to_K(rec.u) * fld.diff_gamma() + fld.to_K(rec.eta) + Rational(rec.a);
    return num * Rational(1, 2);
}

CandidateExpansion a_from_u_eta(const CMField& fld, const NFElement& u_in_F, const NFElement& eta_in_F) {
    CandidateExpansion out;
    NFElement omega = (fld.to_K(u_in_F) * fld.diff_gamma() + fld.to_K(eta_in_F)) * Rational(1, 2);
    out.omega = omega;
    NFElement prod_K = omega * fld.conj(omega);
    auto prod_F = fld.to_F(prod_K);
    if (!prod_F) throw std::domain_error("a_from_u_eta: Omega*conj(Omega) is not in F");
    // coefficients over {1, eta, ..., eta^(g-1)}
    std::vector<NFElement> powers;
    NFElement p = fld.F->one();
    for (int i = 0; i < fld.g(); ++i) {
        powers.push_back(p);
        p = p * eta_in_F;
    }
    auto coeffs = express_in_basis(powers, *prod_F);
    if (!coeffs) throw std::domain_error("a_from_u_eta: eta is not a primitive element (corrupt catalog)");
    Rational a1 = fld.g() >= 2 ? (*coeffs)[1] : Rational(0);
    out.a = a1 * Rational(-2);
    for (size_t i = 2; i < coeffs->size(); ++i) out.residuals.push_back((*coeffs)[i]);
    out.alpha = omega + (-a1);
    return out;
}

std::vector<BigInt> mod4_class(const CMField& fld, const NFElement& a_in_K) {
    if (!a_in_K.is_integral()) throw std::domain_error("mod4_class: input not integral");
    auto coords = fld.integral_coords(a_in_K);
    std::vector<BigInt> out;
    out.reserve(coords.size());
    BigInt four(4);
    for (const auto& c : coords) {
        if (!c.is_integer())
            throw std::domain_error("mod4_class: integral element has non-integer coordinates (corrupt catalog)");
        out.push_back(c.num().mod_floor(four));
    }
    return out;
}

namespace {

int padic_valuation(const BigInt& v, const BigInt& p, int cap) {
    if (v.is_zero()) return cap;
    BigInt t = v;
    int n = 0;
    while (n < cap) {
        auto [q, r] = BigInt::divmod(t, p);
        if (!r.is_zero()) break;
        t = q;
        ++n;
    }
    return n;
}

}  // namespace

int count_padic_roots(const QPoly& f, uint64_t p) {
    QPoly fp = f.squarefree_part();
    QPoly fd = fp.derivative();
    BigInt bp(static_cast<int64_t>(p));
    Rational dsc = poly_discriminant(fp);
    int vdisc = padic_valuation(dsc.num(), bp, 64);
    int kmax = 2 * vdisc + 6;

    // lift the full residue tree to depth kmax, then certify the leaves;
    // early certification would miss a second root sharing a shallow class
    std::vector<BigInt> level;
    for (uint64_t r = 0; r < p; ++r) {
        BigInt br(static_cast<int64_t>(r));
        if (padic_valuation(fp.eval(Rational(br)).num(), bp, 1) >= 1) level.push_back(br);
    }
    for (int k = 1; k < kmax; ++k) {
        std::vector<BigInt> next;
        BigInt step = BigInt::pow(bp, static_cast<uint64_t>(k));
        for (const auto& r : level) {
            for (uint64_t c = 0; c < p; ++c) {
                BigInt r2 = r + step * BigInt(static_cast<int64_t>(c));
                if (padic_valuation(fp.eval(Rational(r2)).num(), bp, k + 1) >= k + 1) next.push_back(r2);
            }
        }
        level = std::move(next);
        if (level.size() > 4096) throw std::runtime_error("count_padic_roots: lifting tree too large");
    }
    struct Certified {
        BigInt r;
        int ball_exp;  // the root agrees with r mod p^ball_exp
    };
    std::vector<Certified> certified;
    for (const auto& r : level) {
        int vf = padic_valuation(fp.eval(Rational(r)).num(), bp, kmax + 64);
        int vd = padic_valuation(fd.eval(Rational(r)).num(), bp, kmax + 64);
        if (vf > 2 * vd) certified.push_back({r, vf - vd});
    }
    // count pairwise-separated Hensel balls; merging possibly-equal pairs keeps
    // the result a sound lower bound
    std::vector<bool> used(certified.size(), false);
    int count = 0;
    for (size_t i = 0; i < certified.size(); ++i) {
        if (used[i]) continue;
        ++count;
        for (size_t j = i + 1; j < certified.size(); ++j) {
            if (used[j]) continue;
            int vdiff = padic_valuation(certified[i].r - certified[j].r, bp, 256);
            if (vdiff >= std::min(certified[i].ball_exp, certified[j].ball_exp)) used[j] = true;
        }
    }
    return count;
}

std::pair<NFElement, NFElement> element_disc_diff(const CMField& fld, const NFElement& a) {
    NFElement diff = a - fld.conj(a);
    return {diff * diff, diff};
}

std::optional<uint64_t> monogenic_obstruction(const CMField& fld) {
    if (fld.g() < 2) throw std::domain_error("monogenic_obstruction: g >= 2 required");
    uint64_t bound = 1ull << fld.g();
    for (uint64_t p : first_primes(64)) {
        if (p >= bound) break;
        if (p > static_cast<uint64_t>(fld.g())) continue;  // root count <= g can never exceed p
        int roots = count_padic_roots(fld.F->defining_poly(), p);
        if (roots > static_cast<int>(p)) return p;
    }
    return std::nullopt;
}

}  // namespace sia
