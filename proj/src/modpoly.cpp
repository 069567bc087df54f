#include "sia/modpoly.hpp"

#include "sia/primality.hpp"

#include <cassert>
#include <stdexcept>

namespace sia {

namespace {
uint64_t inv_mod(uint64_t a, uint64_t p) {
    // extended euclid
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}
}  // namespace

ModPoly::ModPoly(uint64_t p, std::vector<uint64_t> ascending) : p_(p), c_(std::move(ascending)) {
    for (auto& v : c_) v %= p_;
    trim();
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::from_qpoly(const QPoly& f, uint64_t p) {
    std::vector<uint64_t> c;
    c.reserve(f.coeffs().size());
    BigInt bp(static_cast<int64_t>(p));
    for (const auto& v : f.coeffs()) {
        if (!v.is_integer()) throw std::domain_error("ModPoly: integer coefficients required");
        c.push_back(static_cast<uint64_t>(v.num().mod_floor(bp).to_int64()));
    }
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::xpoly(uint64_t p) { return ModPoly(p, {0, 1}); }

ModPoly ModPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    uint64_t inv = inv_mod(lc(), p_);
    ModPoly r = *this;
    for (auto& v : r.c_) v = static_cast<uint64_t>((static_cast<unsigned __int128>(v) * inv) % p_);
    return r;
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_, {});
    std::vector<uint64_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = static_cast<uint64_t>((static_cast<unsigned __int128>(c_[i]) * (i % p_)) % p_);
    return ModPoly(p_, std::move(r));
}

uint64_t ModPoly::eval(uint64_t x) const {
    unsigned __int128 r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = (r * x + c_[i]) % p_;
    return static_cast<uint64_t>(r);
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    assert(a.p_ == b.p_ || a.is_zero() || b.is_zero());
    uint64_t p = a.p_ ? a.p_ : b.p_;
    std::vector<uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.at(i) + b.at(i)) % p;
    return ModPoly(p, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    assert(a.p_ == b.p_ || a.is_zero() || b.is_zero());
    uint64_t p = a.p_ ? a.p_ : b.p_;
    std::vector<uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.at(i) + p - b.at(i)) % p;
    return ModPoly(p, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_ ? a.p_ : b.p_, {});
    uint64_t p = a.p_;
    std::vector<uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        unsigned __int128 ai = a.c_[i];
        for (size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] = static_cast<uint64_t>((ai * b.c_[j] + c[i + j]) % p);
        }
    }
    return ModPoly(p, std::move(c));
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw std::domain_error("ModPoly: division by zero");
    uint64_t p = b.p_;
    if (a.degree() < b.degree()) return {ModPoly(p, {}), a};
    uint64_t binv = inv_mod(b.lc(), p);
    std::vector<uint64_t> r = a.c_;
    const size_t db = b.c_.size() - 1;
    std::vector<uint64_t> q(r.size() - db, 0);
    for (size_t top = r.size(); top-- > db;) {
        if (r[top] == 0) continue;
        uint64_t f = static_cast<uint64_t>((static_cast<unsigned __int128>(r[top]) * binv) % p);
        size_t shift = top - db;
        q[shift] = f;
        for (size_t i = 0; i <= db; ++i) {
            uint64_t sub = static_cast<uint64_t>((static_cast<unsigned __int128>(f) * b.c_[i]) % p);
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
    }
    r.resize(db);
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly ModPoly::powmod(uint64_t e, const ModPoly& f) const {
    ModPoly r(p_, {1});
    ModPoly base = rem(*this, f);
    while (e) {
        if (e & 1) r = rem(r * base, f);
        e >>= 1;
        if (e) base = rem(base * base, f);
    }
    return r;
}

ModPoly ModPoly::frobenius_pow(const ModPoly& f, unsigned k) const {
    ModPoly r = rem(*this, f);
    for (unsigned i = 0; i < k; ++i) r = r.powmod(p_, f);
    return r;
}

std::vector<int> ModPoly::factor_degrees() const {
    ModPoly g = monic();
    if (g.degree() <= 0) throw std::domain_error("factor_degrees: degree must be positive");
    {
        ModPoly d = g.derivative();
        if (d.is_zero() || gcd(g, d).degree() > 0)
            throw std::domain_error("factor_degrees: squarefree input required");
    }
    std::vector<int> out;
    ModPoly h = xpoly(p_);  // x^(p^d) mod g, incrementally
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {
            out.push_back(g.degree());
            break;
        }
        h = h.powmod(p_, g);
        ModPoly split = gcd(h - xpoly(p_), g);
        if (split.degree() > 0) {
            for (int i = 0; i < split.degree() / d; ++i) out.push_back(d);
            g = divmod(g, split).first;
            h = rem(h, g);
        }
    }
    return out;
}

bool ModPoly::is_irreducible() const {
    int n = degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    ModPoly f = monic();
    ModPoly xp = rem(xpoly(p_), f);
    // Rabin: x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n
    ModPoly xq = xp.frobenius_pow(f, static_cast<unsigned>(n));
    if (!(xq - xp).is_zero()) return false;
    for (const auto& [r, e] : factor_u64(static_cast<uint64_t>(n))) {
        (void)e;
        ModPoly xr = xp.frobenius_pow(f, static_cast<unsigned>(n) / static_cast<unsigned>(r));
        if (gcd(xr - xp, f).degree() != 0) return false;
    }
    return true;
}

}  // namespace sia
