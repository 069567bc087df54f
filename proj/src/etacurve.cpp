#include "sia/etacurve.hpp"

#include "sia/modpoly.hpp"
#include "sia/primality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sia {

IntegralPoint EtaTransform::apply(const IntegralPoint& p) const {
    return {A1 * p.A + A2 * p.B - A3, B1 * p.A + B2 * p.B - B3};
}

EtaCurve build_eta_curve(const CMFieldPtr& fldp, size_t eta_index) {
    const CMField& fld = *fldp;
    if (fld.g() < 3) throw std::domain_error("build_eta_curve: deg F >= 3 required");
    if (eta_index >= fld.T.size()) throw std::domain_error("build_eta_curve: eta index out of range");
    EtaCurve out;
    out.fld = fldp;
    out.eta_index = eta_index;
    out.eta = fld.T[eta_index];

    BigInt df2 = fld.disc_F * fld.disc_F;
    auto [rhs_q, rhs_r] = BigInt::divmod(fld.disc_K.abs(), df2);
    if (!rhs_r.is_zero())
        throw std::domain_error(fld.label + ": disc_F^2 does not divide |disc_K| (corrupt catalog)");
    out.rhs = rhs_q;

    // norm form N(x + y eta - eta^2) as Res_t(minpoly_eta(t), x + y t - t^2),
    // by interpolation over an integer grid
    QPoly meta = out.eta.min_poly();
    int g = fld.g();
    size_t n = static_cast<size_t>(g);
    std::vector<std::vector<Rational>> vals(n + 1, std::vector<Rational>(n + 1));
    for (size_t ix = 0; ix <= n; ++ix)
        for (size_t iy = 0; iy <= n; ++iy) {
            QPoly lin({Rational(static_cast<int64_t>(ix)), Rational(static_cast<int64_t>(iy))});
            QPoly arg = lin - QPoly::monomial(Rational(1), 2);  // x + y t - t^2
            vals[ix][iy] = poly_resultant(meta, arg);
        }
    // 2D Lagrange on the grid {0..g} x {0..g}
    auto lagrange_basis = [&](size_t k) {
        QPoly b = QPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t l = 0; l <= n; ++l) {
            if (l == k) continue;
            b = b * QPoly({Rational(-static_cast<int64_t>(l)), Rational(1)});
            denom *= Rational(static_cast<int64_t>(k) - static_cast<int64_t>(l));
        }
        return b.scaled(denom.reciprocal());
    };
    std::vector<QPoly> bx(n + 1), by(n + 1);
    for (size_t k = 0; k <= n; ++k) bx[k] = by[k] = lagrange_basis(k);

    BivarPoly f(n, n);
    {
        std::vector<std::vector<Rational>> acc(n + 1, std::vector<Rational>(n + 1, Rational(0)));
        for (size_t ix = 0; ix <= n; ++ix)
            for (size_t iy = 0; iy <= n; ++iy) {
                if (vals[ix][iy].is_zero()) continue;
                for (size_t i = 0; i <= n; ++i)
                    for (size_t j = 0; j <= n; ++j) acc[i][j] += vals[ix][iy] * bx[ix].at(i) * by[iy].at(j);
            }
        for (size_t i = 0; i <= n; ++i)
            for (size_t j = 0; j <= n; ++j) {
                if (!acc[i][j].is_integer())
                    throw std::logic_error("build_eta_curve: non-integral norm form coefficient");
                f.set(i, j, acc[i][j].num());
            }
    }
    if (!f.at(n, 0).is_one()) throw std::logic_error("build_eta_curve: norm form is not monic in x");
    f.set(0, 0, f.at(0, 0) - out.rhs);
    f.trim();
    out.f = f;
    out.H = f.max_abs_coeff();
    return out;
}

namespace {

// the construction from the change-of-basis matrix: v with
//   v = A1 + B1 e1,  v e2 = A2 + B2 e1,  v e2^2 = A3 + B3 e1 + e1^2.
// The resulting affine map satisfies f_{e1} o t = N(v) * (norm form of e2)
// - rhs, so it carries C_{e2} to C_{e1} exactly when N(v) = +1.
std::optional<EtaTransform> direct_transform(const CMField& fld, size_t eta1_index, size_t eta2_index) {
    const NFElement& e1 = fld.T.at(eta1_index);
    const NFElement& e2 = fld.T.at(eta2_index);
    const FieldPtr& F = fld.F;

    std::vector<NFElement> b1 = {F->one(), e1, e1 * e1};
    std::vector<NFElement> b2 = {F->one(), e2, e2 * e2};
    QMatrix P(3, std::vector<Rational>(3));
    for (size_t j = 0; j < 3; ++j) {
        auto coords = express_in_basis(b1, b2[j]);
        if (!coords) throw std::domain_error("eta_transform: eta does not generate F (corrupt catalog)");
        for (size_t i = 0; i < 3; ++i) {
            if (!(*coords)[i].is_integer())
                throw std::domain_error("eta_transform: change of basis is not integral (corrupt catalog)");
            P[i][j] = (*coords)[i];
        }
    }
    auto Pinv_opt = qmat_inverse(P);
    if (!Pinv_opt) throw std::domain_error("eta_transform: change of basis matrix is singular");
    const QMatrix& Pi = *Pinv_opt;

    // v = Pinv_{3,3} - Pinv_{3,2} [e1^3]_3 + Pinv_{3,2} e1
    auto e1cubed = express_in_basis(b1, e1 * e1 * e1);
    if (!e1cubed) throw std::logic_error("eta_transform: cannot expand eta1^3");
    Rational top = (*e1cubed)[2];
    NFElement v = F->from_rational(Pi[2][2] - Pi[2][1] * top) + e1 * Pi[2][1];

    auto expand = [&](const NFElement& w) {
        auto c = express_in_basis(b1, w);
        if (!c) throw std::logic_error("eta_transform: expansion failed");
        return *c;
    };
    auto cv = expand(v);
    auto cve2 = expand(v * e2);
    auto cve22 = expand(v * e2 * e2);
    if (!cv[2].is_zero() || !cve2[2].is_zero() || !(cve22[2] == Rational(1))) return std::nullopt;
    for (const Rational& r : {cv[0], cv[1], cve2[0], cve2[1], cve22[0], cve22[1]})
        if (!r.is_integer()) return std::nullopt;

    if (!(v.norm() == Rational(1))) return std::nullopt;  // norm -1 flips the right-hand side

    EtaTransform t;
    t.A1 = cv[0].num();
    t.B1 = cv[1].num();
    t.A2 = cve2[0].num();
    t.B2 = cve2[1].num();
    t.A3 = cve22[0].num();
    t.B3 = cve22[1].num();
    t.v = v;
    return t;
}

// index of the T representative equivalent to -T[i] modulo integer translation,
// and the translation k with T[partner] = k - T[i]
std::optional<std::pair<size_t, BigInt>> negation_partner(const CMField& fld, size_t i) {
    for (size_t j = 0; j < fld.T.size(); ++j) {
        NFElement s = fld.T[j] + fld.T[i];
        if (s.is_rational() && s.rational_value().is_integer())
            return std::make_pair(j, s.rational_value().num());
    }
    return std::nullopt;
}

}  // namespace

EtaTransform eta_transform(const CMFieldPtr& fldp, size_t eta1_index, size_t eta2_index) {
    const CMField& fld = *fldp;
    if (fld.g() != 3) throw std::domain_error("eta_transform: sextic machinery requires g = 3");

    std::optional<EtaTransform> t = direct_transform(fld, eta1_index, eta2_index);
    if (!t) {
        // norm -1 route: go through the negation partner of eta2 and compose
        // with the exact curve symmetry f_{eta2} o B = f_{partner},
        // B(x, y) = (x + k y - k^2, 2k - y)
        auto partner = negation_partner(fld, eta2_index);
        if (!partner) throw std::domain_error(fld.label + ": T is not closed under negation classes");
        auto [jc, k] = *partner;
        std::optional<EtaTransform> t2 = direct_transform(fld, eta1_index, jc);
        if (!t2) throw std::logic_error("eta_transform: no unit of norm +1 for either representative");
        // compose t2 with B: M(x, y) = t2(x + k y - k^2, 2k - y)
        EtaTransform m;
        m.A1 = t2->A1;
        m.A2 = t2->A1 * k - t2->A2;
        m.A3 = t2->A1 * k * k - t2->A2 * BigInt(2) * k + t2->A3;
        m.B1 = t2->B1;
        m.B2 = t2->B1 * k - t2->B2;
        m.B3 = t2->B1 * k * k - t2->B2 * BigInt(2) * k + t2->B3;
        m.v = t2->v;
        t = m;
    }

    // exact verification of the defining identity
    EtaCurve c1 = build_eta_curve(fldp, eta1_index);
    EtaCurve c2 = build_eta_curve(fldp, eta2_index);
    BivarPoly composed = c1.f.compose_affine(t->A1, t->A2, t->A3, t->B1, t->B2, t->B3);
    if (!(composed == c2.f)) throw std::logic_error("eta_transform: composed polynomial identity failed");
    return *t;
}

std::vector<IntegralPoint> integral_points_box(const EtaCurve& c, const BigInt& bound) {
    if (bound.is_negative()) throw std::domain_error("integral_points_box: bound >= 0 required");
    std::vector<IntegralPoint> out;
    for (BigInt B = -bound; B <= bound; B += BigInt(1)) {
        QPoly row = c.f.at_y(B);  // monic degree g in A
        if (row.degree() < 1) continue;
        // integer roots of a monic integer polynomial inside [-bound, bound]
        auto roots = isolate_real_roots(row);
        SturmChain chain(row);
        for (auto iv : roots) {
            iv = refine_root(chain, iv, Rational(1, 4));
            BigInt lo = (iv.lo - Rational(1, 2)).ceil();
            BigInt hi = (iv.hi + Rational(1, 2)).floor();
            for (BigInt A = lo; A <= hi; A += BigInt(1)) {
                if (A.abs() > bound) continue;
                if (row.eval(Rational(A)).is_zero()) {
                    IntegralPoint p{A, B};
                    bool dup = false;
                    for (const auto& e : out)
                        if (e == p) dup = true;
                    if (!dup) out.push_back(p);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IntegralPoint& a, const IntegralPoint& b) {
        if (a.B != b.B) return a.B < b.B;
        return a.A < b.A;
    });
    return out;
}

std::vector<WeilGeneratorRecord> lift_point(const EtaCurve& c, const IntegralPoint& p) {
    const CMField& fld = *c.fld;
    if (!c.f.eval(p.A, p.B).is_zero()) throw std::domain_error("lift_point: not a point of the curve");
    NFElement eta = c.eta;
    NFElement delta = fld.delta_F();
    NFElement w = (eta * Rational(p.B) + Rational(p.A) - eta * eta) / delta;
    auto u0 = sqrt_in_totally_real(w);
    std::vector<WeilGeneratorRecord> out;
    if (!u0) return out;
    for (int sgn = 0; sgn < 2; ++sgn) {
        NFElement u = sgn == 0 ? *u0 : -*u0;
        Rational nu = u.norm();
        if (!(nu == Rational(1) || nu == Rational(-1))) break;  // not a unit: no lift for either sign
        CandidateExpansion ce = a_from_u_eta(fld, u, eta);
        bool residuals_zero = true;
        for (const auto& r : ce.residuals)
            if (!r.is_zero()) residuals_zero = false;
        if (!residuals_zero || !ce.alpha.is_integral()) continue;
        auto chk = is_weil_generator(fld, ce.alpha);
        if (!chk.ok) continue;
        WeilGeneratorRecord rec;
        rec.alpha = ce.alpha;
        rec.u = u;
        rec.eta = eta;
        rec.eta_index = c.eta_index;
        rec.a = ce.a.num();
        rec.q = *chk.q;
        out.push_back(std::move(rec));
    }
    return out;
}

IntegralPoint point_of_record(const CMField& fld, const WeilGeneratorRecord& rec) {
    NFElement omega = (fld.to_K(rec.u) * fld.diff_gamma() + fld.to_K(rec.eta)) * Rational(1, 2);
    NFElement prod = omega * fld.conj(omega) * Rational(4);
    auto inF = fld.to_F(prod);
    if (!inF) throw std::logic_error("point_of_record: 4*Omega*conj(Omega) not in F");
    auto coords = express_in_basis({fld.F->one(), rec.eta}, *inF);
    if (!coords) throw std::logic_error("point_of_record: value is outside the Z-span of {1, eta}");
    if (!(*coords)[0].is_integer() || !(*coords)[1].is_integer())
        throw std::logic_error("point_of_record: non-integral point");
    return {(*coords)[0].num(), (*coords)[1].num()};
}

SexticSearch sextic_weil_search(const CMFieldPtr& fldp, const BigInt& box) {
    const CMField& fld = *fldp;
    if (fld.T.empty()) throw std::domain_error(fld.label + ": catalog record has no T data");
    SexticSearch out;
    out.reference = build_eta_curve(fldp, 0);
    out.reference_points = integral_points_box(out.reference, box);
    for (size_t ti = 0; ti < fld.T.size(); ++ti) {
        EtaCurve ci = ti == 0 ? out.reference : build_eta_curve(fldp, ti);
        std::vector<IntegralPoint> pts;
        if (ti == 0) {
            pts = out.reference_points;
        } else {
            // the affine map with f_{T[ti]} o v = f_{T[0]} carries the
            // reference points onto C_{T[ti]}
            EtaTransform tr = eta_transform(fldp, ti, 0);
            for (const auto& p : out.reference_points) {
                IntegralPoint q = tr.apply(p);
                if (!ci.f.eval(q.A, q.B).is_zero())
                    throw std::logic_error("sextic_weil_search: transformed point left the curve");
                pts.push_back(q);
            }
        }
        for (const auto& q : pts) {
            auto recs = lift_point(ci, q);
            for (auto& r : recs) out.generators.push_back(std::move(r));
        }
    }
    std::sort(out.generators.begin(), out.generators.end(),
              [](const WeilGeneratorRecord& a, const WeilGeneratorRecord& b) {
                  return NFElement::coord_less(a.alpha, b.alpha);
              });
    out.generators.erase(std::unique(out.generators.begin(), out.generators.end(),
                                     [](const WeilGeneratorRecord& a, const WeilGeneratorRecord& b) {
                                         return a.alpha == b.alpha;
                                     }),
                         out.generators.end());
    return out;
}

BakerCoatesReport baker_coates_report(const CMFieldPtr& fldp) {
    const CMField& fld = *fldp;
    if (fld.g() != 3) throw std::domain_error("baker_coates_report: g = 3 required");
    BakerCoatesReport out;
    for (size_t i = 0; i < fld.T.size(); ++i) {
        EtaCurve c = build_eta_curve(fldp, i);
        out.per_eta_H.push_back(c.H);
        if (c.H > out.H_max) out.H_max = c.H;
    }
    out.kappa = fld.kappa;
    out.norm_exponent = 2 * fld.deg();

    // zeta_K(2) by a truncated Euler product; ramified or index-obstructed
    // primes and the tail contribute interval factors
    double lo = 1.0, hi = 1.0;
    const QPoly& mk = fld.K->defining_poly();
    BigInt lcd = poly_discriminant(mk).num();
    int n = fld.deg();
    for (uint64_t p : first_primes(1229)) {  // primes below 10^4
        double pinv2 = 1.0 / (static_cast<double>(p) * static_cast<double>(p));
        if ((lcd % BigInt(static_cast<int64_t>(p))).is_zero()) {
            hi *= std::pow(1.0 - pinv2, -n);
            continue;
        }
        ModPoly mp = ModPoly::from_qpoly(mk, p);
        for (int d : mp.factor_degrees()) {
            double f = 1.0 / (1.0 - std::pow(pinv2, d));
            lo *= f;
            hi *= f;
        }
    }
    // tail over p > 10^4: each local factor is in [1, (1-p^-2)^-n]
    double tail = std::exp(static_cast<double>(n) * 2.0 * 1.0 / 10000.0);
    hi *= tail;
    out.zeta2_lo = lo;
    out.zeta2_hi = hi;

    std::ostringstream hb;
    hb << "exp(exp(exp(2*" << out.H_max.to_string() << ")))^(10^(3^10))";
    out.point_height_bound = hb.str();
    std::ostringstream cb;
    cb << out.kappa << " * zeta_K(2) * (" << hb.str() << ")^" << out.norm_exponent;
    out.count_bound = cb.str();
    return out;
}

}  // namespace sia
