#include "sia/classify.hpp"

#include "sia/primality.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace sia {

EllipticVerdict classify_elliptic(const BigInt& q, const BigInt& t) {
    EllipticVerdict out;
    auto [p64, a] = prime_power_split(q);
    BigInt p(static_cast<int64_t>(p64));
    if (t * t > BigInt(4) * q) throw std::domain_error("classify_elliptic: |t| exceeds the Hasse bound");

    static const int64_t cm_discs[] = {-3, -4, -7, -8, -11, -19, -43, -67, -163};
    std::ostringstream w;

    // case 1: ordinary with class-number-1 CM discriminant
    if (!(t % p).is_zero()) {
        BigInt d = t * t - BigInt(4) * q;
        for (int64_t cd : cm_discs) {
            if (d == BigInt(cd)) {
                out.super_isolated = true;
                out.case_number = 1;
                w << "ordinary, t^2 - 4q = " << d << " is a class-number-1 discriminant";
                out.witness = w.str();
                return out;
            }
        }
        w << "ordinary, t^2 - 4q = " << d << " is not a class-number-1 discriminant";
        out.witness = w.str();
        return out;
    }
    // supersingular cases
    if ((p64 == 2 || p64 == 3 || p64 == 5 || p64 == 7 || p64 == 13) && t * t == BigInt(4) * q) {
        out.super_isolated = true;
        out.case_number = 2;
        out.witness = "t^2 = 4q with p in {2,3,5,7,13}";
        return out;
    }
    if ((p64 == 2 || p64 == 3) && t * t == BigInt::pow(p, a + 1)) {
        out.super_isolated = true;
        out.case_number = 3;
        out.witness = "t^2 = p^(a+1) with p in {2,3}";
        return out;
    }
    if (p64 == 2 && t.is_zero()) {
        out.super_isolated = true;
        out.case_number = 4;
        out.witness = "p = 2 and t = 0";
        return out;
    }
    if (p64 == 3 && t * t == q) {
        out.super_isolated = true;
        out.case_number = 5;
        out.witness = "p = 3 and t^2 = q";
        return out;
    }
    out.witness = "supersingular trace matches none of the isolated cases";
    return out;
}

namespace {

// real Weil polynomial: the monic degree-g h with x^g h(x + q/x) = f
std::optional<QPoly> real_weil_poly(const QPoly& f, const BigInt& q, int g) {
    // P_i = x^{g-i} (x^2 + q)^i, f = sum c_i P_i with c_g = 1
    std::vector<QPoly> basis;
    QPoly x2q({Rational(q), Rational(0), Rational(1)});
    for (int i = 0; i <= g; ++i) {
        QPoly p = QPoly::monomial(Rational(1), static_cast<size_t>(g - i));
        for (int k = 0; k < i; ++k) p = p * x2q;
        basis.push_back(p);
    }
    std::vector<Rational> c(static_cast<size_t>(g) + 1, Rational(0));
    c[static_cast<size_t>(g)] = Rational(1);
    QPoly rem = f - basis[static_cast<size_t>(g)];
    for (int i = g - 1; i >= 0; --i) {
        // coefficient of x^{g+i} in rem determines c_i
        Rational ci = rem.at(static_cast<size_t>(g + i));
        c[static_cast<size_t>(i)] = ci;
        if (!ci.is_zero()) rem -= basis[static_cast<size_t>(i)].scaled(ci);
    }
    if (!rem.is_zero()) return std::nullopt;  // not a q-symmetric polynomial
    std::vector<Rational> h(static_cast<size_t>(g) + 1);
    for (int i = 0; i <= g; ++i) h[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
    return QPoly(std::move(h));
}

// locate s in O_F with the given minimal polynomial, by embedding matching
std::optional<NFElement> find_root_in_F(const FieldPtr& F, const QPoly& target_minpoly) {
    int g = F->degree();
    if (target_minpoly.degree() != g) return std::nullopt;
    auto sroots = isolate_real_roots(target_minpoly);
    if (static_cast<int>(sroots.size()) != g) return std::nullopt;
    SturmChain chain(target_minpoly);
    std::vector<double> svals;
    for (auto iv : sroots) svals.push_back(refine_root(chain, iv, Rational(1, 1ll << 44)).mid().to_double());
    // try assignments of target roots to embeddings (g! small)
    std::vector<size_t> perm(static_cast<size_t>(g));
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        std::vector<double> targets(static_cast<size_t>(g));
        for (size_t j = 0; j < perm.size(); ++j) targets[j] = svals[perm[j]];
        auto cand = reconstruct_integer_coords(F, targets);
        if (!cand) continue;
        QPoly mp = cand->min_poly();
        if (mp == target_minpoly) return cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace

AVVerdict classify_ordinary_av(const FrobeniusData& fd, const Catalog& cat) {
    AVVerdict out;
    const QPoly& f = fd.charpoly;
    int g = fd.genus;
    const BigInt& q = fd.q;

    if (!is_irreducible_over_Q(f)) {
        out.status = AVVerdict::Status::NotSimple;
        out.witness = "characteristic polynomial is reducible; the variety is not simple (not handled)";
        return out;
    }
    auto [p64, pe] = prime_power_split(q);
    (void)pe;
    BigInt p(static_cast<int64_t>(p64));
    Rational mid = f.at(static_cast<size_t>(g));
    if ((mid.num() % p).is_zero()) {
        out.status = AVVerdict::Status::NotOrdinary;
        out.witness = "middle coefficient " + mid.to_string() + " is divisible by p = " + p.to_string() +
                      ": not ordinary, outside the scope of the ordinary test";
        return out;
    }

    auto fF = real_weil_poly(f, q, g);
    if (!fF) {
        out.status = AVVerdict::Status::NotSimple;
        out.witness = "charpoly is not q-symmetric (not a Weil polynomial)";
        return out;
    }

    for (const auto& fld : cat.fields()) {
        if (fld->deg() != 2 * g || !fld->gamma) continue;
        auto s = find_root_in_F(fld->F, *fF);
        if (!s) continue;
        // pi = (s + v (gamma - conj gamma))/2 with v^2 = (s^2 - 4q)/(gamma - conj gamma)^2
        NFElement sK = fld->to_K(*s);
        NFElement dg = fld->diff_gamma();
        NFElement wK = (sK * sK + Rational(BigInt(-4) * q)) / (dg * dg);
        auto wF = fld->to_F(wK);
        if (!wF) continue;
        auto v = sqrt_in_totally_real(*wF);
        if (!v) continue;
        NFElement pi = (sK + fld->to_K(*v) * dg) * Rational(1, 2);
        if (pi.char_poly() != f) {
            pi = (sK - fld->to_K(*v) * dg) * Rational(1, 2);
            if (pi.char_poly() != f) continue;
        }
        // located pi inside the catalog field
        out.field_label = fld->label;
        auto chk = is_weil_generator(*fld, pi);
        if (!chk.ok) {
            out.status = AVVerdict::Status::NotSuperIsolated;
            out.failed_condition = chk.failed_condition;
            out.witness = "pi found in " + fld->label + " but is not a Weil generator: " + chk.detail;
            return out;
        }
        if (fld->class_number == 1) {
            out.status = AVVerdict::Status::SuperIsolated;
            out.verdict = true;
            out.witness = "pi is a Weil generator for " + fld->label + " (q = " + chk.q->to_string() +
                          ") and the class number is 1";
            return out;
        }
        if (fld->class_number == 0) {
            out.status = AVVerdict::Status::UnknownField;
            out.witness = "pi is a Weil generator for " + fld->label +
                          " but its class number is not in the catalog: no claim made";
            return out;
        }
        out.status = AVVerdict::Status::NotSuperIsolated;
        out.witness = "pi is a Weil generator for " + fld->label + " but the class number is " +
                      std::to_string(fld->class_number);
        return out;
    }
    out.status = AVVerdict::Status::UnknownField;
    out.witness = "Q(pi) does not match any catalog field: no claim made";
    return out;
}

// ---- elliptic curve census ----

namespace {

struct WeierstrassOps {
    const FiniteField& k;

    uint64_t pack(const std::array<FF, 5>& a) const {
        uint64_t idx = 0;
        for (int i = 4; i >= 0; --i) idx = idx * k.q() + k.index(a[static_cast<size_t>(i)]);
        return idx;
    }

    bool nonsingular(const std::array<FF, 5>& c) const {
        const FF &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &a6 = c[4];
        FF b2 = k.add(k.mul(a1, a1), k.mul(k.from_int(4), a2));
        FF b4 = k.add(k.mul(k.from_int(2), a4), k.mul(a1, a3));
        FF b6 = k.add(k.mul(a3, a3), k.mul(k.from_int(4), a6));
        FF b8 = k.add(k.add(k.mul(k.mul(a1, a1), a6), k.mul(k.from_int(4), k.mul(a2, a6))),
                      k.sub(k.mul(a2, k.mul(a3, a3)), k.add(k.mul(a1, k.mul(a3, a4)), k.mul(a4, a4))));
        FF disc = k.sub(k.mul(k.from_int(9), k.mul(b2, k.mul(b4, b6))),
                        k.add(k.add(k.mul(k.mul(b2, b2), b8), k.mul(k.from_int(8), k.mul(b4, k.mul(b4, b4)))),
                              k.mul(k.from_int(27), k.mul(b6, b6))));
        return !k.is_zero(disc);
    }

    // image of (a1,...,a6) under x = u^2 x' + r, y = u^3 y' + s u^2 x' + t
    std::array<FF, 5> transform(const std::array<FF, 5>& c, const FF& u, const FF& r, const FF& s,
                                const FF& t) const {
        const FF &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &a6 = c[4];
        FF iu = k.inv(u), iu2 = k.mul(iu, iu);
        FF na1 = k.mul(k.add(a1, k.mul(k.from_int(2), s)), iu);
        FF na2 = k.mul(k.add(k.sub(a2, k.mul(s, a1)), k.sub(k.mul(k.from_int(3), r), k.mul(s, s))),
                       k.mul(iu, iu));
        FF na3 = k.mul(k.add(a3, k.add(k.mul(r, a1), k.mul(k.from_int(2), t))), k.mul(iu2, iu));
        FF na4 = k.mul(
            k.sub(k.add(k.sub(a4, k.mul(s, a3)), k.add(k.mul(k.from_int(2), k.mul(r, a2)),
                                                       k.mul(k.from_int(3), k.mul(r, r)))),
                  k.add(k.mul(k.add(t, k.mul(r, s)), a1), k.mul(k.from_int(2), k.mul(s, t)))),
            k.mul(iu2, iu2));
        FF na6 = k.mul(
            k.sub(k.add(a6, k.add(k.mul(r, a4), k.add(k.mul(k.mul(r, r), a2), k.mul(r, k.mul(r, r))))),
                  k.add(k.mul(t, a3), k.add(k.mul(t, t), k.mul(r, k.mul(t, a1))))),
            k.mul(k.mul(iu2, iu2), iu2));
        return {na1, na2, na3, na4, na6};
    }
};

BigInt curve_count(const FiniteField& k, const std::array<FF, 5>& c) {
    std::vector<FF> h = {c[2], c[0]};                  // a3 + a1 x
    std::vector<FF> f = {c[4], c[3], c[1], k.one()};   // x^3 + a2 x^2 + a4 x + a6
    CurveModel m = CurveModel::make_ff(k, h, f);
    return count_points(m, 1);
}

}  // namespace

IsogenyCensus isogeny_census(uint64_t q) {
    if (q > 16) throw BudgetExceededError("isogeny_census: q <= 16 required");
    auto [p, a] = prime_power_split(BigInt(static_cast<int64_t>(q)));
    FiniteField k = FiniteField::make(p, a);
    WeierstrassOps ops{k};

    uint64_t q5 = 1;
    for (int i = 0; i < 5; ++i) q5 *= q;
    std::vector<uint8_t> seen(q5, 0);

    IsogenyCensus out;
    out.q = q;
    std::map<int64_t, IsogenyClassReport> by_count;

    std::array<FF, 5> c{k.zero(), k.zero(), k.zero(), k.zero(), k.zero()};
    for (uint64_t idx = 0; idx < q5; ++idx) {
        uint64_t rest = idx;
        for (int i = 0; i < 5; ++i) {
            c[static_cast<size_t>(i)] = k.from_index(rest % q);
            rest /= q;
        }
        if (seen[idx]) continue;
        if (!ops.nonsingular(c)) {
            seen[idx] = 1;
            continue;
        }
        ++out.curve_models;
        ++out.iso_classes;
        // orbit walk marks every isomorphic model
        uint64_t orbit_models = 0;
        FF u = k.one();
        do {
            if (k.is_zero(u)) continue;
            FF r = k.zero();
            do {
                FF s = k.zero();
                do {
                    FF t = k.zero();
                    do {
                        auto img = ops.transform(c, u, r, s, t);
                        uint64_t pidx = ops.pack(img);
                        if (!seen[pidx]) {
                            seen[pidx] = 1;
                            ++orbit_models;
                        }
                    } while (k.next(t));
                } while (k.next(s));
            } while (k.next(r));
        } while (k.next(u));
        out.curve_models += orbit_models - 1;

        IsoClass cls;
        cls.rep = {c[0], c[1], c[2], c[3], c[4]};
        cls.npoints = curve_count(k, c);
        {
            std::vector<FF> h = {c[2], c[0]};
            std::vector<FF> f = {c[4], c[3], c[1], k.one()};
            cls.rep_text = CurveModel::make_ff(k, h, f).to_string();
        }
        auto& grp = by_count[cls.npoints.to_int64()];
        grp.npoints = cls.npoints;
        grp.trace = BigInt(static_cast<int64_t>(q)) + BigInt(1) - cls.npoints;
        grp.classes.push_back(std::move(cls));
    }
    for (auto& [n, grp] : by_count) out.isogeny_classes.push_back(std::move(grp));
    return out;
}

bool curves_isomorphic(const CurveModel& e1, const CurveModel& e2) {
    if (e1.kind != CurveKind::EllipticWeierstrass || e2.kind != CurveKind::EllipticWeierstrass)
        throw std::domain_error("curves_isomorphic: elliptic curves required");
    const FiniteField& k = e1.field;
    if (k.q() != e2.field.q() || k.p() != e2.field.p())
        throw std::domain_error("curves_isomorphic: same base field required");
    if (k.q() > 64) throw BudgetExceededError("curves_isomorphic: exhaustive search capped at q <= 64");
    WeierstrassOps ops{k};
    std::array<FF, 5> c1{e1.a1(), e1.a2(), e1.a3(), e1.a4(), e1.a6()};
    std::array<FF, 5> c2{e2.a1(), e2.a2(), e2.a3(), e2.a4(), e2.a6()};
    FF u = k.one();
    do {
        if (k.is_zero(u)) continue;
        FF r = k.zero();
        do {
            FF s = k.zero();
            do {
                FF t = k.zero();
                do {
                    if (ops.transform(c1, u, r, s, t) == c2) return true;
                } while (k.next(t));
            } while (k.next(s));
        } while (k.next(r));
    } while (k.next(u));
    return false;
}

std::vector<CmPrimeHit> cm_prime_search(const CMField& fld, const BigInt& b_min, const BigInt& b_max) {
    if (fld.g() != 1) throw std::domain_error("cm_prime_search: imaginary quadratic field required");
    NFElement omega = fld.gamma_or_throw();
    BigInt d = -fld.disc_K;
    bool even_d = d.is_even();
    std::vector<CmPrimeHit> out;
    for (BigInt b = b_min; b <= b_max; b += BigInt(1)) {
        BigInt a;
        if (even_d) {
            a = b - d / BigInt(2);
        } else {
            if (b.is_even()) continue;  // alpha = ((2a+d) + sqrt(-d))/2 needs odd parameter
            a = (b - d) / BigInt(2);
        }
        NFElement alpha = omega + Rational(a);
        // trace = 2b (even d) or b (odd d); require nonzero
        if (b.is_zero()) continue;
        NFElement nm = alpha * fld.conj(alpha);
        BigInt pval = nm.rational_value().num();
        if (!is_probable_prime(pval)) continue;
        CmPrimeHit hit;
        hit.b = b;
        hit.p = pval;
        hit.rec = decompose(fld, alpha);
        hit.bits = pval.bit_length();
        hit.hamming = pval.popcount();
        out.push_back(std::move(hit));
    }
    return out;
}

}  // namespace sia
