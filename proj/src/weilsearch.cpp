#include "sia/weilsearch.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace sia {

bool height_le(const NFElement& u_in_F, const Rational& bound) {
    if (bound.sign() <= 0) return false;
    if (u_in_F.is_zero()) return true;
    if (u_in_F.is_rational()) return u_in_F.rational_value().abs() <= bound;
    QPoly m = u_in_F.min_poly();
    // h(u) <= B iff no conjugate lies outside [-B, B]
    SturmChain chain(m);
    Rational big = cauchy_root_bound(m) + Rational(1);
    if (bound >= big) return true;
    int above = chain.count_roots(bound, big);
    int below = chain.count_roots(-big, -bound);
    if (m.eval(-bound).is_zero()) --below;  // a root exactly at -B is within the bound
    return above == 0 && below == 0;
}

std::vector<NFElement> enumerate_units(const CMField& fld, const Rational& bound) {
    std::vector<NFElement> out;
    if (bound < Rational(1)) return out;  // every unit has height >= 1
    NFElement one = fld.F->one();
    size_t rank = fld.fund_units.size();
    if (fld.g() >= 2 && static_cast<int>(rank) != fld.g() - 1)
        throw std::domain_error(fld.label + ": catalog fundamental units missing or wrong rank");

    if (rank == 0) {
        out.push_back(one);
        out.push_back(-one);
        return out;
    }

    double logB = std::log(std::max(1.0, bound.to_double()));
    // exponent box from the inverse of the leading (r x r) log-embedding block;
    // sound under cancellation, with the exact height filter behind it
    size_t g = static_cast<size_t>(fld.g());
    std::vector<std::vector<double>> logs(rank, std::vector<double>(g));
    for (size_t i = 0; i < rank; ++i) {
        auto vals = fld.fund_units[i].real_embedding_values(Rational(1, 1 << 30));
        if (vals.size() != g) throw std::domain_error(fld.label + ": unit is not totally real");
        for (size_t j = 0; j < g; ++j) logs[i][j] = std::log(std::abs(vals[j].mid().to_double()));
    }
    std::vector<int64_t> box(rank, 0);
    if (rank == 1) {
        double h0 = 0;
        for (size_t j = 0; j < g; ++j) h0 = std::max(h0, logs[0][j]);
        box[0] = static_cast<int64_t>(std::ceil(logB / h0 * 1.01)) + 1;
    } else if (rank == 2) {
        double det = logs[0][0] * logs[1][1] - logs[0][1] * logs[1][0];
        if (std::abs(det) < 1e-12) throw std::domain_error(fld.label + ": degenerate unit lattice");
        double inv[2][2] = {{logs[1][1] / det, -logs[1][0] / det}, {-logs[0][1] / det, logs[0][0] / det}};
        double span = static_cast<double>(g - 1) * logB + 1e-9;
        for (size_t i = 0; i < 2; ++i) {
            double norm1 = std::abs(inv[i][0]) + std::abs(inv[i][1]);
            box[i] = static_cast<int64_t>(std::ceil(norm1 * span * 1.01)) + 1;
        }
    } else {
        throw std::domain_error("enumerate_units: unit rank > 2 not supported");
    }

    // lexicographic on (|k1|, ..., |kr|, signs), both global signs emitted
    std::vector<std::vector<int64_t>> exps;
    std::vector<int64_t> cur(rank, 0);
    std::function<void(size_t)> walk = [&](size_t i) {
        if (i == rank) {
            exps.push_back(cur);
            return;
        }
        for (int64_t a = 0; a <= box[i]; ++a) {
            cur[i] = a;
            walk(i + 1);
            if (a != 0) {
                cur[i] = -a;
                walk(i + 1);
            }
        }
    };
    walk(0);
    std::stable_sort(exps.begin(), exps.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (std::llabs(a[i]) != std::llabs(b[i])) return std::llabs(a[i]) < std::llabs(b[i]);
        }
        return a < b;
    });

    for (const auto& k : exps) {
        NFElement u = one;
        for (size_t i = 0; i < rank; ++i) {
            if (k[i] == 0) continue;
            NFElement base = k[i] > 0 ? fld.fund_units[i] : fld.fund_units[i].inverse();
            u = u * base.pow(static_cast<uint64_t>(std::llabs(k[i])));
        }
        if (!height_le(u, bound)) continue;
        out.push_back(u);
        out.push_back(-u);
    }
    return out;
}

std::vector<WeilGeneratorRecord> algorithm1(const CMField& fld, const Rational& bound) {
    if (fld.g() < 2) throw std::domain_error("algorithm1: g >= 2 required");
    if (fld.T.empty()) throw std::domain_error(fld.label + ": catalog record has no T data");
    fld.gamma_or_throw();
    std::vector<WeilGeneratorRecord> out;
    for (const NFElement& u : enumerate_units(fld, bound)) {
        for (size_t ti = 0; ti < fld.T.size(); ++ti) {
            CandidateExpansion ce = a_from_u_eta(fld, u, fld.T[ti]);
            bool residuals_zero = true;
            for (const auto& r : ce.residuals)
                if (!r.is_zero()) {
                    residuals_zero = false;
                    break;
                }
            if (!residuals_zero) continue;
            if (!ce.alpha.is_integral()) continue;
            auto chk = is_weil_generator(fld, ce.alpha);
            assert(chk.ok);
            if (!chk.ok) continue;
            WeilGeneratorRecord rec;
            rec.alpha = ce.alpha;
            rec.u = u;
            rec.eta = fld.T[ti];
            rec.eta_index = ti;
            Rational a = ce.a;
            assert(a.is_integer());
            rec.a = a.num();
            rec.q = *chk.q;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<WeilGeneratorRecord> quadratic_weil_gens(const CMField& fld, const BigInt& height_max) {
    if (fld.g() != 1) throw std::domain_error("quadratic_weil_gens: imaginary quadratic field required");
    NFElement omega = fld.gamma_or_throw();
    std::vector<WeilGeneratorRecord> out;
    // h(a + omega)^2 = (a + d/2)^2 + d/4 with -d = disc_K; condition (2a+d)^2 <= 4N^2 - d
    BigInt d = -fld.disc_K;
    BigInt lim2 = BigInt(4) * height_max * height_max - d;
    if (lim2.is_negative()) return out;
    BigInt s = BigInt::isqrt(lim2);
    // 2a+d in [-s, s]
    BigInt amin = -BigInt::fdivmod(s + d, BigInt(2)).first;                // ceil((-s-d)/2)
    BigInt amax = BigInt::fdivmod(s - d, BigInt(2)).first;                 // floor((s-d)/2)
    for (BigInt a = amin; a <= amax; a += BigInt(1)) {
        NFElement alpha = omega + Rational(a);
        for (int sgn = 0; sgn < 2; ++sgn) {
            NFElement cand = sgn == 0 ? alpha : fld.conj(alpha);
            WeilGeneratorRecord rec = decompose(fld, cand);
            out.push_back(std::move(rec));
        }
    }
    return out;
}

BigInt quadratic_weil_count(const CMField& fld, const BigInt& height_max) {
    if (fld.g() != 1) throw std::domain_error("quadratic_weil_count: imaginary quadratic field required");
    BigInt d = -fld.disc_K;
    BigInt lim2 = BigInt(4) * height_max * height_max - d;
    if (lim2.is_negative()) return BigInt(0);
    BigInt s = BigInt::isqrt(lim2);
    BigInt amin = -BigInt::fdivmod(s + d, BigInt(2)).first;
    BigInt amax = BigInt::fdivmod(s - d, BigInt(2)).first;
    if (amax < amin) return BigInt(0);
    return (amax - amin + BigInt(1)) * BigInt(2);
}

namespace {

NFElement reduce_mod4(const CMField& fld, const NFElement& a) {
    auto coords = fld.integral_coords(a);
    const auto& basis = fld.integral_basis();
    NFElement out = fld.K->zero();
    BigInt four(4);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].is_integer()) throw std::domain_error("reduce_mod4: non-integral element");
        out = out + basis[i] * Rational(coords[i].num().mod_floor(four));
    }
    return out;
}

}  // namespace

QuarticCongruence quartic_congruence(const CMField& fld) {
    if (fld.g() != 2) throw std::domain_error("quartic_congruence: quartic CM field required");
    if (fld.fund_units.empty() || fld.T.empty())
        throw std::domain_error(fld.label + ": catalog fundamental unit / T data required");
    QuarticCongruence out;
    NFElement u0K = fld.to_K(fld.fund_units[0]);
    if (!u0K.is_integral()) throw std::domain_error("quartic_congruence: u0 not integral (corrupt catalog)");
    NFElement one = fld.K->one();
    NFElement w = reduce_mod4(fld, u0K);
    uint64_t m = 1;
    const uint64_t guard = 1ull << 16;
    while (!(w == one)) {
        w = reduce_mod4(fld, w * u0K);
        ++m;
        if (m > guard) throw std::domain_error("quartic_congruence: u0 not invertible mod 4 (corrupt catalog)");
    }
    out.order_m = m;

    const NFElement& eta0 = fld.T[0];
    NFElement uk = fld.F->one();
    for (uint64_t k = 0; k < m; ++k) {
        CandidateExpansion ce = a_from_u_eta(fld, uk, eta0);
        NFElement four_alpha = ce.alpha * Rational(4);
        auto cls = mod4_class(fld, four_alpha);
        bool zero = true;
        for (const auto& c : cls)
            if (!c.is_zero()) {
                zero = false;
                break;
            }
        if (zero) out.admissible.push_back(k);
        out.table.push_back(std::move(cls));
        uk = uk * fld.fund_units[0];
    }
    out.density_c6 = Rational(static_cast<int64_t>(out.admissible.size()), static_cast<int64_t>(m));
    double h0 = fld.fund_units[0].height(96).mid().to_double();
    out.rho = 4.0 * out.density_c6.to_double() / std::log(h0);
    return out;
}

std::vector<CensusRow> census(const CMField& fld, const std::vector<BigInt>& grid, const Rational& bound) {
    std::vector<CensusRow> out;
    if (fld.g() == 1) {
        for (const auto& N : grid) {
            CensusRow row;
            row.N = N;
            row.count = static_cast<uint64_t>(quadratic_weil_count(fld, N).to_int64());
            row.predicted = 4.0 * N.to_double();
            out.push_back(row);
        }
        return out;
    }
    if (fld.g() != 2) throw std::domain_error("census: supported for g = 1 and g = 2 fields");
    auto recs = algorithm1(fld, bound);
    QuarticCongruence qc = quartic_congruence(fld);
    for (const auto& N : grid) {
        CensusRow row;
        row.N = N;
        BigInt n2 = N * N;
        uint64_t cnt = 0;
        for (const auto& r : recs)
            if (r.q <= n2) ++cnt;
        row.count = cnt;
        row.predicted = N.is_zero() ? 0.0 : qc.rho * std::log(N.to_double());
        out.push_back(row);
    }
    return out;
}

std::pair<double, double> quartic_height_law(const CMField& fld, const std::vector<WeilGeneratorRecord>& recs) {
    (void)fld;
    double lo = 0, hi = 0;
    bool first = true;
    for (const auto& r : recs) {
        double hu = r.u.height(80).mid().to_double();
        if (hu < 2.0) continue;
        double ha = std::sqrt(BigInt(r.q).to_double());
        double ratio = ha / (hu * hu);
        if (first) {
            lo = hi = ratio;
            first = false;
        } else {
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    return {lo, hi};
}

}  // namespace sia
