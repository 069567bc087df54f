#include "sia/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sia {

// ---- linear algebra ----

std::optional<std::vector<Rational>> qmat_solve(QMatrix a, std::vector<Rational> b) {
    size_t m = a.size();
    if (m == 0) return std::nullopt;
    size_t n = a[0].size();
    if (b.size() != m) throw std::invalid_argument("qmat_solve: size mismatch");
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t sel = row;
        while (sel < m && a[sel][col].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[row]);
        std::swap(b[sel], b[row]);
        Rational inv = a[row][col].reciprocal();
        for (size_t j = col; j < n; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() < n) return std::nullopt;  // rank deficient
    for (size_t i = row; i < m; ++i)
        if (!b[i].is_zero()) return std::nullopt;  // inconsistent
    std::vector<Rational> x(n, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

Rational qmat_det(QMatrix a) {
    size_t n = a.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a[sel][col].is_zero()) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].reciprocal();
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Rational f = a[i][col] * inv;
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

std::optional<QMatrix> qmat_inverse(QMatrix a) {
    size_t n = a.size();
    QMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a[sel][col].is_zero()) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[sel], a[col]);
        std::swap(inv[sel], inv[col]);
        Rational f = a[col][col].reciprocal();
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= f;
            inv[col][j] *= f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational g = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[col][j];
                inv[i][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<std::vector<BigInt>> hnf_rows(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return m;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // reduce column c below row r by gcd elimination
        while (true) {
            size_t piv = rows;
            for (size_t i = r; i < rows; ++i) {
                if (m[i][c].is_zero()) continue;
                if (piv == rows || m[i][c].abs() < m[piv][c].abs()) piv = i;
            }
            if (piv == rows) break;
            std::swap(m[piv], m[r]);
            bool done = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c].is_zero()) continue;
                BigInt q = BigInt::fdivmod(m[i][c], m[r][c]).first;
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (!m[i][c].is_zero()) done = false;
            }
            if (done) break;
        }
        if (!m[r][c].is_zero()) {
            if (m[r][c].is_negative())
                for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
            // reduce rows above
            for (size_t i = 0; i < r; ++i) {
                BigInt q = BigInt::fdivmod(m[i][c], m[r][c]).first;
                if (q.is_zero()) continue;
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
            }
            ++r;
        }
    }
    m.resize(r);
    return m;
}

// ---- NumberField ----

NumberField::NumberField(const QPoly& p) : poly_(p) {
    deg_ = p.degree();
    SturmChain chain(poly_);
    r1_ = chain.total_real_roots();
    r2_ = (deg_ - r1_) / 2;
}

std::shared_ptr<const NumberField> NumberField::create(const QPoly& defining_poly) {
    if (defining_poly.degree() < 1) throw std::domain_error("NumberField: degree must be >= 1");
    if (!defining_poly.is_integer_poly() || !defining_poly.is_monic())
        throw std::domain_error("NumberField: monic integer defining polynomial required");
    if (!is_irreducible_over_Q(defining_poly))
        throw std::domain_error("NumberField: defining polynomial is reducible");
    return std::shared_ptr<const NumberField>(new NumberField(defining_poly));
}

std::vector<QInterval> NumberField::real_roots(const Rational& eps) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (root_cache_.empty() && r1_ > 0) root_cache_ = isolate_real_roots(poly_);
    SturmChain chain(poly_);
    for (auto& iv : root_cache_) iv = refine_root(chain, iv, eps);
    return root_cache_;
}

NFElement NumberField::zero() const { return from_rational(Rational(0)); }
NFElement NumberField::one() const { return from_rational(Rational(1)); }

NFElement NumberField::generator() const {
    std::vector<Rational> c(static_cast<size_t>(deg_), Rational(0));
    if (deg_ == 1) {
        // x - c has root c
        c[0] = -poly_.at(0);
    } else {
        c[1] = Rational(1);
    }
    return NFElement(shared_from_this(), std::move(c));
}

NFElement NumberField::from_rational(const Rational& v) const {
    std::vector<Rational> c(static_cast<size_t>(deg_), Rational(0));
    c[0] = v;
    return NFElement(shared_from_this(), std::move(c));
}

NFElement NumberField::element(std::vector<Rational> coords) const {
    return NFElement(shared_from_this(), std::move(coords));
}

// ---- NFElement ----

NFElement::NFElement(FieldPtr fld, std::vector<Rational> coords) : fld_(std::move(fld)), coords_(std::move(coords)) {
    if (!fld_) throw std::invalid_argument("NFElement: null field");
    if (static_cast<int>(coords_.size()) != fld_->degree())
        throw std::invalid_argument("NFElement: coordinate count != field degree");
}

void NFElement::check_same_field(const NFElement& o) const {
    if (fld_ == o.fld_) return;
    if (fld_ && o.fld_ && fld_->defining_poly() == o.fld_->defining_poly()) return;
    throw std::domain_error("NFElement: field mismatch");
}

bool NFElement::is_zero() const {
    for (const auto& v : coords_)
        if (!v.is_zero()) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

Rational NFElement::rational_value() const {
    if (!is_rational()) throw std::domain_error("NFElement: not rational");
    return coords_.empty() ? Rational(0) : coords_[0];
}

NFElement NFElement::operator-() const {
    NFElement r = *this;
    for (auto& v : r.coords_) v = -v;
    return r;
}

NFElement operator+(const NFElement& a, const NFElement& b) {
    a.check_same_field(b);
    NFElement r = a;
    for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
}

NFElement operator-(const NFElement& a, const NFElement& b) {
    a.check_same_field(b);
    NFElement r = a;
    for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
    return r;
}

NFElement operator*(const NFElement& a, const NFElement& b) {
    a.check_same_field(b);
    QPoly prod = QPoly(a.coords_) * QPoly(b.coords_);
    QPoly red = QPoly::rem(prod, a.fld_->defining_poly());
    std::vector<Rational> c(static_cast<size_t>(a.fld_->degree()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = red.at(i);
    return NFElement(a.fld_, std::move(c));
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw std::domain_error("NFElement: division by zero");
    // extended euclid in Q[x]: u*a + v*m = 1
    QPoly a = as_poly(), m = fld_->defining_poly();
    QPoly r0 = m, r1 = a;
    QPoly s0 = QPoly(), s1 = QPoly::constant(Rational(1));  // coefficients of a
    while (r1.degree() > 0) {
        auto [q, r2] = QPoly::divmod(r0, r1);
        QPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) throw std::domain_error("NFElement: not invertible (reducible modulus?)");
    QPoly inv = s1.scaled(r1.lc().reciprocal());
    inv = QPoly::rem(inv, m);
    std::vector<Rational> c(static_cast<size_t>(fld_->degree()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = inv.at(i);
    return NFElement(fld_, std::move(c));
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

NFElement NFElement::operator*(const Rational& s) const {
    NFElement r = *this;
    for (auto& v : r.coords_) v *= s;
    return r;
}

NFElement NFElement::operator+(const Rational& s) const {
    NFElement r = *this;
    r.coords_[0] += s;
    return r;
}

NFElement NFElement::pow(uint64_t e) const {
    NFElement r = fld_->one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool operator==(const NFElement& a, const NFElement& b) {
    a.check_same_field(b);
    return a.coords_ == b.coords_;
}

bool NFElement::coord_less(const NFElement& a, const NFElement& b) {
    for (size_t i = 0; i < a.coords_.size(); ++i) {
        int c = a.coords_[i].compare(b.coords_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

NFElement NFElement::substitute_generator(const NFElement& generator_image) const {
    NFElement acc = fld_->zero();
    for (size_t i = coords_.size(); i-- > 0;) {
        acc = acc * generator_image;
        acc = acc + coords_[i];
    }
    return acc;
}

QPoly NFElement::char_poly() const {
    int n = fld_->degree();
    // Res_y(m(y), x - a(y)) interpolated at x = 0..n
    std::vector<Rational> xs, ys;
    QPoly apoly = as_poly();
    for (int j = 0; j <= n; ++j) {
        QPoly g = QPoly::constant(Rational(j)) - apoly;
        Rational val;
        if (g.is_zero())
            val = Rational(0);
        else
            val = poly_resultant(fld_->defining_poly(), g);
        xs.emplace_back(j);
        ys.push_back(val);
    }
    // Lagrange interpolation
    QPoly out;
    for (size_t k = 0; k < xs.size(); ++k) {
        if (ys[k].is_zero()) continue;
        QPoly basis = QPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t l = 0; l < xs.size(); ++l) {
            if (l == k) continue;
            basis = basis * QPoly({-xs[l], Rational(1)});
            denom *= xs[k] - xs[l];
        }
        out += basis.scaled(ys[k] / denom);
    }
    return out;
}

QPoly NFElement::min_poly() const {
    if (is_zero()) return QPoly::x();
    return char_poly().squarefree_part();
}

Rational NFElement::norm() const {
    QPoly cp = char_poly();
    Rational c0 = cp.at(0);
    return fld_->degree() % 2 ? -c0 : c0;
}

Rational NFElement::trace() const {
    QPoly cp = char_poly();
    return -cp.at(static_cast<size_t>(fld_->degree() - 1));
}

bool NFElement::is_integral() const { return char_poly().is_integer_poly(); }

std::vector<QInterval> NFElement::real_embedding_values(const Rational& eps) const {
    // evaluate the coordinate polynomial on refined root intervals; widths
    // shrink linearly with root width, so refine until small enough
    QPoly a = as_poly();
    Rational root_eps = eps;
    for (int rounds = 0; rounds < 64; ++rounds) {
        auto roots = fld_->real_roots(root_eps);
        std::vector<QInterval> vals;
        vals.reserve(roots.size());
        bool ok = true;
        for (const auto& rt : roots) {
            QInterval v = eval_interval(a, rt);
            if (v.width() > eps) {
                ok = false;
                break;
            }
            vals.push_back(v);
        }
        if (ok) return vals;
        root_eps = root_eps * Rational(1, 64);
    }
    throw std::runtime_error("real_embedding_values: refinement failed to converge");
}

QInterval NFElement::height(unsigned prec_bits) const {
    if (prec_bits < 64) prec_bits = 64;
    if (is_zero()) return QInterval(Rational(0));
    if (is_rational()) return QInterval(coords_[0].abs());

    QPoly mp = min_poly();
    int d = mp.degree();
    Rational two_pow = Rational::pow(Rational(2), static_cast<int64_t>(prec_bits / 2 + 2)).reciprocal();

    if (fld_->is_totally_real()) {
        // all conjugates are the real roots of the minimal polynomial
        SturmChain chain(mp);
        auto roots = isolate_real_roots(mp);
        // refine until the max-|value| enclosure is relatively tight
        Rational eps(1, 16);
        while (true) {
            // max of interval values: [max lo_i, max hi_i]
            QInterval best(Rational(0));
            for (auto iv : roots) {
                iv = refine_root(chain, iv, eps);
                QInterval a = iv.abs();
                best = QInterval(best.lo > a.lo ? best.lo : a.lo, best.hi > a.hi ? best.hi : a.hi);
            }
            if (best.width() <= best.hi * two_pow) return best;
            eps = eps * Rational(1, 1024);
        }
    }

    // general case: largest real root of the composed-product polynomial
    // (power sums of products are squares of the power sums), which equals
    // the squared maximal modulus of the conjugates
    std::vector<Rational> ps = root_power_sums(mp, static_cast<size_t>(d) * static_cast<size_t>(d));
    for (auto& v : ps) v *= v;
    QPoly g = poly_from_power_sums(ps);
    QPoly gs = g.squarefree_part();
    SturmChain chain(gs);
    auto roots = isolate_real_roots(gs);
    if (roots.empty()) throw std::runtime_error("height: composed polynomial has no real root");
    QInterval top = roots.back();
    Rational eps(1, 16);
    while (true) {
        top = refine_root(chain, top, eps);
        QInterval h2 = top.abs();
        QInterval h = sqrt_interval(h2, prec_bits + 4);
        if (h.width() <= h.hi * two_pow) return h;
        eps = eps * Rational(1, 1024);
    }
}

std::string NFElement::to_string(std::string_view var) const {
    return as_poly().to_string(var);
}

std::optional<std::vector<Rational>> express_in_basis(const std::vector<NFElement>& basis,
                                                      const NFElement& target) {
    if (basis.empty()) return std::nullopt;
    size_t n = basis[0].coords().size();
    QMatrix a(n, std::vector<Rational>(basis.size(), Rational(0)));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < n; ++i) a[i][j] = basis[j].coord(i);
    std::vector<Rational> b(n, Rational(0));
    for (size_t i = 0; i < n; ++i) b[i] = target.coord(i);
    return qmat_solve(std::move(a), std::move(b));
}

Rational module_discriminant(const std::vector<NFElement>& gens) {
    if (gens.empty()) throw std::invalid_argument("module_discriminant: empty generating set");
    size_t n = static_cast<size_t>(gens[0].field()->degree());
    // clear denominators, HNF the coordinate rows, then trace-form determinant
    BigInt den(1);
    for (const auto& g : gens)
        for (const auto& c : g.coords()) den = den / BigInt::gcd(den, c.den()) * c.den();
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<BigInt> row(n);
        for (size_t i = 0; i < n; ++i) {
            const Rational& c = g.coord(i);
            row[i] = c.num() * (den / c.den());
        }
        rows.push_back(std::move(row));
    }
    auto basis = hnf_rows(std::move(rows));
    if (basis.size() != n) throw std::domain_error("module_discriminant: module does not have full rank");
    const FieldPtr& fld = gens[0].field();
    std::vector<NFElement> bel;
    Rational dinv = Rational(den).reciprocal();
    for (const auto& row : basis) {
        std::vector<Rational> c(n);
        for (size_t i = 0; i < n; ++i) c[i] = Rational(row[i]) * dinv;
        bel.push_back(fld->element(std::move(c)));
    }
    QMatrix gram(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            gram[i][j] = gram[j][i] = (bel[i] * bel[j]).trace();
        }
    return qmat_det(std::move(gram));
}

}  // namespace sia

namespace sia {

std::optional<NFElement> reconstruct_integer_coords(const FieldPtr& fld,
                                                    const std::vector<double>& embedding_targets) {
    size_t n = static_cast<size_t>(fld->degree());
    if (embedding_targets.size() != n || !fld->is_totally_real()) return std::nullopt;
    auto roots = fld->real_roots(Rational(1, 1ll << 40));
    if (roots.size() != n) return std::nullopt;
    // Vandermonde solve in doubles, rounded to integers; caller verifies
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0));
    for (size_t j = 0; j < n; ++j) {
        double th = roots[j].mid().to_double();
        double pw = 1;
        for (size_t i = 0; i < n; ++i) {
            m[j][i] = pw;
            pw *= th;
        }
        m[j][n] = embedding_targets[j];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-12) return std::nullopt;
        std::swap(m[piv], m[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = m[r][col] / m[col][col];
            for (size_t i = col; i <= n; ++i) m[r][i] -= f * m[col][i];
        }
    }
    std::vector<Rational> coords(n);
    for (size_t i = 0; i < n; ++i) {
        double v = m[i][n] / m[i][i];
        double rv = std::nearbyint(v);
        if (std::abs(v - rv) > 0.25 || std::abs(rv) > 9e15) return std::nullopt;
        coords[i] = Rational(static_cast<int64_t>(rv));
    }
    return fld->element(std::move(coords));
}

std::optional<NFElement> sqrt_in_totally_real(const NFElement& w) {
    const FieldPtr& fld = w.field();
    if (!fld->is_totally_real()) throw std::domain_error("sqrt_in_totally_real: field not totally real");
    if (w.is_zero()) return fld->zero();
    size_t g = static_cast<size_t>(fld->degree());
    auto vals = w.real_embedding_values(Rational(1, 1ll << 48));
    std::vector<double> mags(g);
    for (size_t j = 0; j < g; ++j) {
        if (vals[j].hi.sign() < 0) return std::nullopt;  // not totally positive
        double v = vals[j].mid().to_double();
        if (v < 0) v = 0;
        mags[j] = std::sqrt(v);
    }
    // sign choices per embedding, global sign fixed on the first
    for (uint64_t mask = 0; mask < (1ull << (g - 1)); ++mask) {
        std::vector<double> target(g);
        target[0] = mags[0];
        for (size_t j = 1; j < g; ++j) target[j] = (mask >> (j - 1)) & 1 ? -mags[j] : mags[j];
        auto cand = reconstruct_integer_coords(fld, target);
        if (!cand) continue;
        if (*cand * *cand == w) return cand;
    }
    return std::nullopt;
}

}  // namespace sia
