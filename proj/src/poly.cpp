#include "sia/poly.hpp"

#include "sia/modpoly.hpp"
#include "sia/primality.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <ostream>
#include <stdexcept>

namespace sia {

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly QPoly::constant(Rational v) {
    QPoly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

QPoly QPoly::x() { return QPoly({Rational(0), Rational(1)}); }

QPoly QPoly::monomial(Rational coeff, size_t deg) {
    QPoly p;
    if (!coeff.is_zero()) {
        p.c_.assign(deg + 1, Rational(0));
        p.c_[deg] = std::move(coeff);
    }
    return p;
}

QPoly QPoly::from_int_coeffs(const std::vector<int64_t>& ascending) {
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (int64_t v : ascending) c.emplace_back(v);
    return QPoly(std::move(c));
}

bool QPoly::is_integer_poly() const {
    for (const auto& v : c_)
        if (!v.is_integer()) return false;
    return true;
}

const Rational& QPoly::lc() const {
    static const Rational zero(0);
    return c_.empty() ? zero : c_.back();
}

Rational QPoly::eval(const Rational& v) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
}

QPoly QPoly::derivative() const {
    QPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<int64_t>(i));
    r.trim();
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().reciprocal());
}

QPoly QPoly::scaled(const Rational& s) const {
    QPoly r = *this;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
}

QPoly QPoly::reflect() const {
    QPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

QPoly QPoly::translate(const Rational& t) const {
    // Horner in (x + t)
    QPoly r;
    QPoly xt({t, Rational(1)});
    for (size_t i = c_.size(); i-- > 0;) {
        r = r * xt;
        r += QPoly::constant(c_[i]);
    }
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    QPoly q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    Rational binv = b.lc().reciprocal();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - b.degree());
        Rational f = r.lc() * binv;
        q.c_[shift] = f;
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[shift + i] -= f * b.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

QPoly QPoly::squarefree_part() const {
    if (degree() <= 1) return monic();
    QPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return monic();
    return quo(*this, g).monic();
}

std::pair<Rational, QPoly> QPoly::primitive_form() const {
    if (is_zero()) return {Rational(0), QPoly()};
    BigInt den(1);
    for (const auto& v : c_) den = den / BigInt::gcd(den, v.den()) * v.den();
    BigInt num(0);
    for (const auto& v : c_) num = BigInt::gcd(num, v.num() * (den / v.den()));
    Rational content(num, den);
    if (lc().is_negative()) content = -content;
    return {content, scaled(content.reciprocal())};
}

// ---- string io ----

std::string QPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& v = c_[i];
        if (v.is_zero()) continue;
        Rational a = v.abs();
        if (first) {
            if (v.is_negative()) out += "-";
            first = false;
        } else {
            out += v.is_negative() ? " - " : " + ";
        }
        bool unit = a.is_one() && i > 0;
        if (!unit) out += a.to_string();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) {
                out += "^";
                out += std::to_string(i);
            }
        }
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("polynomial parse: expected number");
        return std::string(s.substr(start, i - start));
    }

    // term := [coeff]['*'] [x ['^' k]]
    void term(std::map<size_t, Rational>& acc, int sign) {
        skip_ws();
        Rational coeff(1);
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string numpart = number();
            if (eat('/')) {
                std::string denpart = number();
                coeff = Rational(BigInt::from_string(numpart), BigInt::from_string(denpart));
            } else {
                coeff = Rational(BigInt::from_string(numpart));
            }
            have_coeff = true;
        }
        size_t deg = 0;
        bool star = eat('*');
        skip_ws();
        if (i < s.size() && (s[i] == 'x' || s[i] == 'z' || s[i] == 't')) {
            ++i;
            deg = 1;
            if (eat('^')) deg = static_cast<size_t>(std::stoull(number()));
        } else {
            if (star) throw std::invalid_argument("polynomial parse: dangling '*'");
            if (!have_coeff) throw std::invalid_argument("polynomial parse: expected term");
        }
        if (sign < 0) coeff = -coeff;
        acc[deg] += coeff;
    }

    QPoly run() {
        std::map<size_t, Rational> acc;
        int sign = 1;
        skip_ws();
        if (eat('-')) sign = -1;
        else eat('+');
        term(acc, sign);
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else throw std::invalid_argument("polynomial parse: expected '+' or '-'");
            term(acc, sign);
        }
        size_t maxdeg = 0;
        for (auto& [d, v] : acc)
            if (!v.is_zero()) maxdeg = std::max(maxdeg, d);
        std::vector<Rational> c(maxdeg + 1, Rational(0));
        for (auto& [d, v] : acc) c[d] = v;
        return QPoly(std::move(c));
    }
};

}  // namespace

QPoly QPoly::parse(std::string_view s) {
    PolyParser p{s};
    return p.run();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

// ---- resultant / discriminant ----

namespace {

// integer polynomial helpers for the subresultant chain
using ZP = std::vector<BigInt>;  // ascending, trimmed

int zdeg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZP& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZP zscale(const ZP& p, const BigInt& s) {
    ZP r = p;
    for (auto& v : r) v *= s;
    ztrim(r);
    return r;
}

ZP zdiv_exact(const ZP& p, const BigInt& s) {
    ZP r = p;
    for (auto& v : r) {
        auto [q, rem] = BigInt::divmod(v, s);
        assert(rem.is_zero());
        v = q;
    }
    return r;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b
ZP zprem(ZP a, const ZP& b) {
    int db = zdeg(b);
    const BigInt& bl = b.back();
    int delta = zdeg(a) - db;
    a = zscale(a, BigInt::pow(bl, static_cast<uint64_t>(delta + 1)));
    while (zdeg(a) >= db) {
        BigInt f = a.back() / bl;
        size_t shift = static_cast<size_t>(zdeg(a) - db);
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        ztrim(a);
    }
    return a;
}

BigInt zpow_exact_quot(const BigInt& g, const BigInt& h, int delta) {
    // g^delta / h^(delta-1), exact
    BigInt num = BigInt::pow(g, static_cast<uint64_t>(delta));
    if (delta <= 1) return delta == 1 ? num : num * h;  // delta==0: h^1 * g^0 = h
    BigInt den = BigInt::pow(h, static_cast<uint64_t>(delta - 1));
    auto [q, r] = BigInt::divmod(num, den);
    assert(r.is_zero());
    return q;
}

// resultant of primitive integer polynomials, both nonzero
BigInt zresultant(ZP a, ZP b) {
    int s = 1;
    if (zdeg(a) < zdeg(b)) {
        if ((zdeg(a) & 1) && (zdeg(b) & 1)) s = -s;
        std::swap(a, b);
    }
    if (zdeg(b) < 0) throw std::domain_error("resultant: zero polynomial");
    if (zdeg(b) == 0) return BigInt::pow(b[0], static_cast<uint64_t>(zdeg(a))) * BigInt(s);
    BigInt g(1), h(1);
    while (true) {
        int da = zdeg(a), db = zdeg(b);
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        ZP r = zprem(a, b);
        a = std::move(b);
        // divide by g*h^delta
        BigInt divisor = g * BigInt::pow(h, static_cast<uint64_t>(delta));
        if (r.empty()) return BigInt(0);
        b = zdiv_exact(r, divisor);
        g = a.back();
        h = zpow_exact_quot(g, h, delta);
        if (zdeg(b) == 0) break;
    }
    // res = s * lc(b)^(deg a) / h^(deg a - 1)
    int da = zdeg(a);
    BigInt num = BigInt::pow(b[0], static_cast<uint64_t>(da));
    BigInt den = BigInt::pow(h, static_cast<uint64_t>(da - 1));
    auto [q, r] = BigInt::divmod(num, den);
    assert(r.is_zero());
    return q * BigInt(s);
}

ZP to_zp(const QPoly& p) {
    ZP r;
    r.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        assert(v.is_integer());
        r.push_back(v.num());
    }
    return r;
}

}  // namespace

Rational poly_resultant(const QPoly& f, const QPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("resultant: both arguments zero");
    if (f.is_zero() || g.is_zero()) return Rational(0);
    if (f.is_constant() && g.is_constant()) return Rational(1);
    if (f.is_constant()) return Rational::pow(f.lc(), g.degree());
    if (g.is_constant()) return Rational::pow(g.lc(), f.degree());

    auto [cf, pf] = f.primitive_form();
    auto [cg, pg] = g.primitive_form();
    BigInt rz = zresultant(to_zp(pf), to_zp(pg));
    return Rational(rz) * Rational::pow(cf, g.degree()) * Rational::pow(cg, f.degree());
}

Rational poly_discriminant(const QPoly& f) {
    int n = f.degree();
    if (n < 1) throw std::domain_error("discriminant: degree must be >= 1");
    if (n == 1) return Rational(1);
    Rational res = poly_resultant(f, f.derivative());
    Rational d = res / f.lc();
    if ((static_cast<int64_t>(n) * (n - 1) / 2) % 2) d = -d;
    return d;
}

// ---- irreducibility over Q ----

namespace {

// all sums of sub-multisets of ds, as a bitmask over 0..n
uint32_t degree_sums(const std::vector<int>& ds) {
    uint32_t mask = 1;
    for (int d : ds) mask |= mask << d;
    return mask;
}

// complete Kronecker-style search for a monic integer factor of degree d of
// the primitive integer polynomial f (monic after sign normalization is not
// assumed; lc divides candidates are restricted to the monic case when f is
// monic, otherwise both signs of lc divisors are explored via value tuples).
bool has_factor_of_degree(const QPoly& f, int d) {
    // choose d+1 evaluation points with nonzero values
    std::vector<int64_t> pts;
    std::vector<BigInt> vals;
    for (int64_t j = 0; static_cast<int>(pts.size()) < d + 1; j = j <= 0 ? 1 - j : -j) {
        Rational v = f.eval(Rational(j));
        if (v.is_zero()) return true;  // linear factor found directly
        pts.push_back(j);
        vals.push_back(v.num());
        if (j > 64) throw std::runtime_error("irreducibility: evaluation points exhausted");
    }
    // divisor lists
    std::vector<std::vector<BigInt>> divs(vals.size());
    for (size_t k = 0; k < vals.size(); ++k) {
        BigInt m = vals[k].abs();
        if (!m.fits_int64()) throw std::runtime_error("irreducibility: factor search value too large");
        for (uint64_t dv : divisors_u64(static_cast<uint64_t>(m.to_int64()))) {
            divs[k].push_back(BigInt(static_cast<int64_t>(dv)));
            divs[k].push_back(BigInt(-static_cast<int64_t>(dv)));
        }
    }
    uint64_t combos = 1;
    for (auto& dl : divs) {
        combos *= dl.size();
        if (combos > 4000000ull) throw std::runtime_error("irreducibility: factor search too large");
    }
    // Lagrange interpolation through (pts[k], tuple[k]); check integer poly of
    // degree exactly d dividing f
    std::vector<size_t> idx(divs.size(), 0);
    while (true) {
        QPoly g;
        for (size_t k = 0; k < pts.size(); ++k) {
            QPoly basis = QPoly::constant(Rational(1));
            Rational denom(1);
            for (size_t l = 0; l < pts.size(); ++l) {
                if (l == k) continue;
                basis = basis * QPoly({Rational(-pts[l]), Rational(1)});
                denom *= Rational(pts[k] - pts[l]);
            }
            g += basis.scaled(Rational(divs[k][idx[k]]) / denom);
        }
        if (g.degree() == d && g.is_integer_poly()) {
            auto [q, r] = QPoly::divmod(f, g);
            if (r.is_zero() && q.is_integer_poly()) return true;
        }
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == divs[k].size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
    return false;
}

}  // namespace

bool is_irreducible_over_Q(const QPoly& f) {
    if (!f.is_integer_poly()) throw std::domain_error("is_irreducible: integer coefficients required");
    int n = f.degree();
    if (n > 12) throw std::domain_error("is_irreducible: degree cap 12 exceeded");
    if (n <= 0) return false;
    if (n == 1) return true;

    auto [cont, prim] = f.primitive_form();
    (void)cont;
    // repeated factors => reducible at deg >= 2
    if (QPoly::gcd(prim, prim.derivative()).degree() > 0) return false;

    BigInt lcd = prim.lc().num() * poly_discriminant(prim).num();
    uint32_t possible = ~0u;
    int good_primes = 0;
    for (uint64_t p : first_primes(120)) {
        if ((lcd % BigInt(static_cast<int64_t>(p))).is_zero()) continue;
        ModPoly fp = ModPoly::from_qpoly(prim, p);
        std::vector<int> ds = fp.factor_degrees();
        if (ds.size() == 1) return true;  // irreducible mod p certifies
        possible &= degree_sums(ds);
        if ((possible & ((1u << n) - 2u)) == 0) return true;  // no proper degree survives
        if (++good_primes >= 40) break;
    }
    for (int d = 1; d <= n / 2; ++d) {
        if (!(possible >> d & 1)) continue;
        if (has_factor_of_degree(prim, d)) return false;
    }
    return true;
}

}  // namespace sia
