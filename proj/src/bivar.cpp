#include "sia/bivar.hpp"

#include <sstream>

namespace sia {

BivarPoly::BivarPoly(size_t deg_x, size_t deg_y)
    : c_(deg_x + 1, std::vector<BigInt>(deg_y + 1, BigInt(0))) {}

const BigInt& BivarPoly::at(size_t i, size_t j) const {
    static const BigInt zero(0);
    if (i >= c_.size() || j >= c_[i].size()) return zero;
    return c_[i][j];
}

void BivarPoly::set(size_t i, size_t j, BigInt v) {
    if (i >= c_.size() || j >= c_[0].size()) {
        size_t nx = std::max(c_.size(), i + 1);
        size_t ny = std::max(c_.empty() ? 0 : c_[0].size(), j + 1);
        std::vector<std::vector<BigInt>> nc(nx, std::vector<BigInt>(ny, BigInt(0)));
        for (size_t a = 0; a < c_.size(); ++a)
            for (size_t b = 0; b < c_[a].size(); ++b) nc[a][b] = c_[a][b];
        c_ = std::move(nc);
    }
    c_[i][j] = std::move(v);
}

BigInt BivarPoly::eval(const BigInt& x, const BigInt& y) const {
    BigInt out(0);
    for (size_t i = c_.size(); i-- > 0;) {
        BigInt row(0);
        for (size_t j = c_[i].size(); j-- > 0;) row = row * y + c_[i][j];
        out = out * x + row;
    }
    return out;
}

QPoly BivarPoly::at_y(const BigInt& y) const {
    std::vector<Rational> coeffs;
    for (size_t i = 0; i < c_.size(); ++i) {
        BigInt row(0);
        for (size_t j = c_[i].size(); j-- > 0;) row = row * y + c_[i][j];
        coeffs.emplace_back(row);
    }
    return QPoly(std::move(coeffs));
}

BivarPoly BivarPoly::compose_affine(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& b1,
                                    const BigInt& b2, const BigInt& b3) const {
    // substitute x -> a1 x + a2 y - a3, y -> b1 x + b2 y - b3 by power tables
    size_t dx = deg_x(), dy = deg_y();
    auto lin_pows = [&](const BigInt& l1, const BigInt& l2, const BigInt& l0, size_t top) {
        // (l1 x + l2 y + l0)^k for k = 0..top
        std::vector<BivarPoly> pows;
        BivarPoly one(0, 0);
        one.set(0, 0, BigInt(1));
        pows.push_back(one);
        BivarPoly lin(1, 1);
        lin.set(1, 0, l1);
        lin.set(0, 1, l2);
        lin.set(0, 0, l0);
        for (size_t k = 1; k <= top; ++k) {
            const BivarPoly& prev = pows.back();
            BivarPoly next(k, k);
            for (size_t i = 0; i <= prev.deg_x(); ++i)
                for (size_t j = 0; j <= prev.deg_y(); ++j) {
                    const BigInt& pv = prev.at(i, j);
                    if (pv.is_zero()) continue;
                    next.set(i + 1, j, next.at(i + 1, j) + pv * l1);
                    next.set(i, j + 1, next.at(i, j + 1) + pv * l2);
                    next.set(i, j, next.at(i, j) + pv * l0);
                }
            pows.push_back(std::move(next));
        }
        return pows;
    };
    auto xp = lin_pows(a1, a2, -a3, dx);
    auto yp = lin_pows(b1, b2, -b3, dy);
    BivarPoly out(dx + dy, dx + dy);
    for (size_t i = 0; i <= dx; ++i) {
        for (size_t j = 0; j <= dy; ++j) {
            const BigInt& v = at(i, j);
            if (v.is_zero()) continue;
            const BivarPoly& xi = xp[i];
            const BivarPoly& yj = yp[j];
            for (size_t p = 0; p <= xi.deg_x(); ++p)
                for (size_t q = 0; q <= xi.deg_y(); ++q) {
                    const BigInt& xv = xi.at(p, q);
                    if (xv.is_zero()) continue;
                    for (size_t r = 0; r <= yj.deg_x(); ++r)
                        for (size_t s = 0; s <= yj.deg_y(); ++s) {
                            const BigInt& yv = yj.at(r, s);
                            if (yv.is_zero()) continue;
                            out.set(p + r, q + s, out.at(p + r, q + s) + v * xv * yv);
                        }
                }
        }
    }
    out.trim();
    return out;
}

void BivarPoly::trim() {
    size_t dx = 0, dy = 0;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j)
            if (!c_[i][j].is_zero()) {
                dx = std::max(dx, i);
                dy = std::max(dy, j);
            }
    std::vector<std::vector<BigInt>> nc(dx + 1, std::vector<BigInt>(dy + 1, BigInt(0)));
    for (size_t i = 0; i <= dx; ++i)
        for (size_t j = 0; j <= dy && j < c_[i].size(); ++j)
            if (i < c_.size()) nc[i][j] = c_[i][j];
    c_ = std::move(nc);
}

BigInt BivarPoly::max_abs_coeff() const {
    BigInt m(0);
    for (size_t i = 0; i <= deg_x(); ++i)
        for (size_t j = 0; j <= deg_y(); ++j) {
            BigInt a = at(i, j).abs();
            if (a > m) m = a;
        }
    return m;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
    size_t dx = std::max(a.c_.size(), b.c_.size());
    size_t dy = std::max(a.c_.empty() ? 0 : a.c_[0].size(), b.c_.empty() ? 0 : b.c_[0].size());
    for (size_t i = 0; i < dx; ++i)
        for (size_t j = 0; j < dy; ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

std::string BivarPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    // descending total degree, then x-degree, for readability
    size_t dx = deg_x(), dy = deg_y();
    for (size_t total = dx + dy + 1; total-- > 0;) {
        for (size_t i = std::min(total, dx) + 1; i-- > 0;) {
            size_t j = total - i;
            if (j > dy) continue;
            const BigInt& v = at(i, j);
            if (v.is_zero()) continue;
            BigInt av = v.abs();
            if (first) {
                if (v.is_negative()) os << "-";
                first = false;
            } else {
                os << (v.is_negative() ? " - " : " + ");
            }
            bool unit = av.is_one() && (i + j > 0);
            if (!unit) os << av.to_string();
            if (i > 0) {
                if (!unit) os << "*";
                os << "x";
                if (i > 1) os << "^" << i;
                unit = false;
            }
            if (j > 0) {
                if (i > 0 || !av.is_one()) os << "*";
                os << "y";
                if (j > 1) os << "^" << j;
            }
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace sia
