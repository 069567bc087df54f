#include "sia/curve.hpp"

#include "sia/errors.hpp"
#include "sia/primality.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace sia {

namespace {

int ffdeg(const FiniteField& k, const std::vector<FF>& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (!k.is_zero(p[i])) return static_cast<int>(i);
    return -1;
}

FF coeff_at(const FiniteField& k, const std::vector<FF>& p, size_t i) {
    return i < p.size() ? p[i] : k.zero();
}

std::vector<FF> ffp_trim(const FiniteField& k, std::vector<FF> p) {
    while (!p.empty() && k.is_zero(p.back())) p.pop_back();
    return p;
}

std::vector<FF> ffp_add(const FiniteField& k, const std::vector<FF>& x, const std::vector<FF>& y) {
    std::vector<FF> r(std::max(x.size(), y.size()), k.zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = k.add(coeff_at(k, x, i), coeff_at(k, y, i));
    return ffp_trim(k, r);
}

std::vector<FF> ffp_mul(const FiniteField& k, const std::vector<FF>& x, const std::vector<FF>& y) {
    if (x.empty() || y.empty()) return {};
    std::vector<FF> r(x.size() + y.size() - 1, k.zero());
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(x[i], y[j]));
    return ffp_trim(k, r);
}

std::vector<FF> ffp_scale(const FiniteField& k, const std::vector<FF>& x, const FF& s) {
    std::vector<FF> r = x;
    for (auto& c : r) c = k.mul(c, s);
    return ffp_trim(k, r);
}

std::vector<FF> ffp_rem(const FiniteField& k, std::vector<FF> x, const std::vector<FF>& y) {
    int dy = ffdeg(k, y);
    if (dy < 0) throw std::domain_error("ffp_rem: division by zero");
    FF inv_lc = k.inv(y[static_cast<size_t>(dy)]);
    while (true) {
        x = ffp_trim(k, x);
        int dx = ffdeg(k, x);
        if (dx < dy) return x;
        FF f = k.mul(x[static_cast<size_t>(dx)], inv_lc);
        size_t shift = static_cast<size_t>(dx - dy);
        for (size_t i = 0; i <= static_cast<size_t>(dy); ++i)
            x[shift + i] = k.sub(x[shift + i], k.mul(f, y[i]));
    }
}

std::vector<FF> ffp_gcd(const FiniteField& k, std::vector<FF> x, std::vector<FF> y) {
    x = ffp_trim(k, x);
    y = ffp_trim(k, y);
    while (!y.empty()) {
        auto r = ffp_rem(k, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::vector<FF> ffp_derivative(const FiniteField& k, const std::vector<FF>& x) {
    std::vector<FF> r;
    for (size_t i = 1; i < x.size(); ++i) r.push_back(k.mul(x[i], k.from_int(i % k.p())));
    return ffp_trim(k, r);
}

// --- curve text parser ---

struct CurveParser {
    const std::string& s;
    size_t i = 0;
    const FiniteField* fld = nullptr;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(const char* w) {
        ws();
        size_t n = std::strlen(w);
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    uint64_t number() {
        ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw CurveSyntaxError("expected number at position " + std::to_string(start));
        return std::stoull(s.substr(start, i - start));
    }

    // term := [int] ['*'] [g ['^' k]] ['*'] [x ['^' k]] in any sane order
    void term(std::vector<FF>& acc, int sign) {
        ws();
        uint64_t coeff = 1;
        FF gpart = fld->one();
        size_t xdeg = 0;
        bool any = false;
        while (true) {
            ws();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = mulmod_u64(coeff % fld->p(), number() % fld->p(), fld->p());
                any = true;
            } else if (i < s.size() && s[i] == 'x') {
                ++i;
                size_t d = 1;
                if (eat('^')) d = number();
                xdeg += d;
                any = true;
            } else if (i < s.size() && s[i] == 'g') {
                ++i;
                size_t d = 1;
                if (eat('^')) d = number();
                if (fld->a() < 2) throw CurveSyntaxError("generator symbol over a prime field");
                gpart = fld->mul(gpart, fld->pow(fld->gen(), d));
                any = true;
            } else {
                break;
            }
            ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            // juxtaposition not allowed beyond this point unless next char continues a term
            if (i < s.size() && (s[i] == 'x' || s[i] == 'g')) continue;
            break;
        }
        if (!any) throw CurveSyntaxError("expected term at position " + std::to_string(i));
        FF v = fld->mul(fld->from_int(coeff), gpart);
        if (sign < 0) v = fld->neg(v);
        if (acc.size() <= xdeg) acc.resize(xdeg + 1, fld->zero());
        acc[xdeg] = fld->add(acc[xdeg], v);
    }

    std::vector<FF> poly() {
        std::vector<FF> acc;
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        term(acc, sign);
        while (true) {
            ws();
            if (i >= s.size()) break;
            if (s.compare(i, 4, "over") == 0) break;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else if (s[i] == '=' || s[i] == '*') break;
            else throw CurveSyntaxError("unexpected character at position " + std::to_string(i));
            term(acc, sign);
        }
        return acc;
    }
};

}  // namespace

CurveModel CurveModel::parse(const std::string& text) {
    // split "lhs = rhs over GF(...)"
    size_t over = text.rfind("over");
    if (over == std::string::npos) throw CurveSyntaxError("missing 'over GF(p^a)'");
    size_t eq = text.find('=');
    if (eq == std::string::npos || eq > over) throw CurveSyntaxError("missing '='");
    std::string lhs = text.substr(0, eq);
    std::string rhs = text.substr(eq + 1, over - eq - 1);
    std::string gf = text.substr(over + 4);

    // field
    uint64_t p = 0;
    unsigned a = 1;
    {
        size_t open = gf.find('(');
        size_t close = gf.rfind(')');
        if (open == std::string::npos || close == std::string::npos || gf.find("GF") == std::string::npos)
            throw CurveSyntaxError("malformed field: expected GF(p) or GF(p^a)");
        std::string inner = gf.substr(open + 1, close - open - 1);
        size_t caret = inner.find('^');
        try {
            if (caret == std::string::npos) {
                BigInt q = BigInt::from_string(inner);
                auto [pp, aa] = prime_power_split(q);
                p = pp;
                a = aa;
            } else {
                p = std::stoull(inner.substr(0, caret));
                a = static_cast<unsigned>(std::stoul(inner.substr(caret + 1)));
            }
        } catch (const BudgetExceededError&) {
            throw;
        } catch (const std::exception& e) {
            throw CurveSyntaxError(std::string("malformed field size: ") + e.what());
        }
    }
    FiniteField fld = FiniteField::make(p, a);

    // lhs: y^2 followed by y-terms: "+ y", "+ x*y", "+ (x^5+x^3+1)*y", "+ x*y + y"
    std::vector<FF> hpoly;
    {
        std::string rest;
        for (char ch : lhs)
            if (!std::isspace(static_cast<unsigned char>(ch))) rest.push_back(ch);
        if (rest.compare(0, 3, "y^2") != 0) throw CurveSyntaxError("left side must start with y^2");
        rest = rest.substr(3);
        size_t pos = 0;
        while (pos < rest.size()) {
            int sign = 1;
            if (rest[pos] == '+') sign = 1;
            else if (rest[pos] == '-') sign = -1;
            else throw CurveSyntaxError("left side must be y^2 + h(x)*y");
            ++pos;
            // take a piece up to the next top-level sign
            int depth = 0;
            size_t start = pos;
            while (pos < rest.size() && (depth > 0 || (rest[pos] != '+' && rest[pos] != '-'))) {
                if (rest[pos] == '(') ++depth;
                if (rest[pos] == ')') --depth;
                ++pos;
            }
            std::string piece = rest.substr(start, pos - start);
            if (piece.empty() || piece.back() != 'y')
                throw CurveSyntaxError("every left-side term besides y^2 must carry y");
            piece.pop_back();
            if (!piece.empty() && piece.back() == '*') piece.pop_back();
            if (!piece.empty() && piece.front() == '(' && piece.back() == ')')
                piece = piece.substr(1, piece.size() - 2);
            std::vector<FF> part;
            if (piece.empty()) {
                part = {fld.one()};
            } else {
                CurveParser hp{piece, 0, &fld};
                part = hp.poly();
            }
            if (sign < 0)
                for (auto& cf : part) cf = fld.neg(cf);
            hpoly = ffp_add(fld, hpoly, part);
        }
    }

    CurveParser fp{rhs, 0, &fld};
    std::vector<FF> fpoly = fp.poly();
    return make_ff(fld, std::move(hpoly), std::move(fpoly));
}

CurveModel CurveModel::make(const FiniteField& fld, const std::vector<int64_t>& h_coeffs,
                            const std::vector<int64_t>& f_coeffs) {
    std::vector<FF> h, f;
    for (int64_t c : h_coeffs) {
        int64_t m = c % static_cast<int64_t>(fld.p());
        if (m < 0) m += static_cast<int64_t>(fld.p());
        h.push_back(fld.from_int(static_cast<uint64_t>(m)));
    }
    for (int64_t c : f_coeffs) {
        int64_t m = c % static_cast<int64_t>(fld.p());
        if (m < 0) m += static_cast<int64_t>(fld.p());
        f.push_back(fld.from_int(static_cast<uint64_t>(m)));
    }
    return make_ff(fld, std::move(h), std::move(f));
}

CurveModel CurveModel::make_ff(const FiniteField& fld, std::vector<FF> h_coeffs, std::vector<FF> f_coeffs) {
    CurveModel c;
    c.field = fld;
    c.h = ffp_trim(fld, std::move(h_coeffs));
    c.f = ffp_trim(fld, std::move(f_coeffs));
    int df = ffdeg(fld, c.f);
    int dh = ffdeg(fld, c.h);
    if (df < 3) throw CurveSyntaxError("f(x) must have degree >= 3");
    int genus = std::max((df + 1) / 2 - 1, dh - 1);
    c.genus = genus;
    c.kind = (genus == 1 && df == 3 && dh <= 1) ? CurveKind::EllipticWeierstrass : CurveKind::Hyperelliptic;
    if (df > 2 * genus + 2 || dh > genus + 1) throw CurveSyntaxError("inconsistent degrees for a hyperelliptic model");
    if (!c.is_smooth()) throw CurveSyntaxError("singular curve model");
    return c;
}

int CurveModel::deg_h() const { return ffdeg(field, h); }
int CurveModel::deg_f() const { return ffdeg(field, f); }

FF CurveModel::a1() const { return coeff_at(field, h, 1); }
FF CurveModel::a3() const { return coeff_at(field, h, 0); }
FF CurveModel::a2() const { return coeff_at(field, f, 2); }
FF CurveModel::a4() const { return coeff_at(field, f, 1); }
FF CurveModel::a6() const { return coeff_at(field, f, 0); }

bool CurveModel::is_smooth() const {
    const FiniteField& k = field;
    if (kind == CurveKind::EllipticWeierstrass) {
        // standard discriminant, valid in every characteristic; f must be monic
        if (!k.eq(coeff_at(k, f, 3), k.one())) return false;
        FF b2 = k.add(k.mul(a1(), a1()), k.mul(k.from_int(4), a2()));
        FF b4 = k.add(k.mul(k.from_int(2), a4()), k.mul(a1(), a3()));
        FF b6 = k.add(k.mul(a3(), a3()), k.mul(k.from_int(4), a6()));
        FF b8 = k.add(k.add(k.mul(k.mul(a1(), a1()), a6()), k.mul(k.from_int(4), k.mul(a2(), a6()))),
                      k.sub(k.mul(a2(), k.mul(a3(), a3())),
                            k.add(k.mul(a1(), k.mul(a3(), a4())), k.mul(a4(), a4()))));
        FF disc = k.sub(k.mul(k.from_int(9), k.mul(b2, k.mul(b4, b6))),
                        k.add(k.add(k.mul(k.mul(b2, b2), b8), k.mul(k.from_int(8), k.mul(b4, k.mul(b4, b4)))),
                              k.mul(k.from_int(27), k.mul(b6, b6))));
        return !k.is_zero(disc);
    }
    if (k.p() != 2) {
        // complete the square: y'^2 = f + h^2/4 must be squarefree
        FF quarter = k.inv(k.from_int(4));
        std::vector<FF> g = ffp_add(k, f, ffp_scale(k, ffp_mul(k, h, h), quarter));
        auto gd = ffp_derivative(k, g);
        if (ffp_trim(k, g).empty()) return false;
        if (gd.empty()) return false;  // p | all exponents: inseparable
        return ffdeg(k, ffp_gcd(k, g, gd)) <= 0;
    }
    // characteristic 2: singular iff h and f'^2 + f h'^2 share a root, or h = 0
    if (ffp_trim(k, h).empty()) return false;
    auto fd = ffp_derivative(k, f);
    auto hd = ffp_derivative(k, h);
    auto lhs = ffp_add(k, ffp_mul(k, fd, fd), ffp_mul(k, f, ffp_mul(k, hd, hd)));
    return ffdeg(k, ffp_gcd(k, h, lhs)) <= 0;
}

std::string CurveModel::to_string() const {
    std::ostringstream os;
    os << "y^2";
    int dh = deg_h();
    if (dh >= 0) {
        os << " + (";
        bool first = true;
        for (int i = dh; i >= 0; --i) {
            FF c = coeff_at(field, h, static_cast<size_t>(i));
            if (field.is_zero(c)) continue;
            if (!first) os << " + ";
            os << field.to_string(c);
            if (i >= 1) os << "*x";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        os << ")*y";
    }
    os << " = ";
    bool first = true;
    for (int i = deg_f(); i >= 0; --i) {
        FF c = coeff_at(field, f, static_cast<size_t>(i));
        if (field.is_zero(c)) continue;
        if (!first) os << " + ";
        os << field.to_string(c);
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    os << " over GF(" << field.p();
    if (field.a() > 1) os << "^" << field.a();
    os << ")";
    return os.str();
}

}  // namespace sia
