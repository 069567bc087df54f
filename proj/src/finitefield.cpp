#include "sia/finitefield.hpp"

#include "sia/errors.hpp"
#include "sia/primality.hpp"

#include <sstream>
#include <stdexcept>

namespace sia {

namespace {

// conventional moduli for the small fields the worked examples use
const std::vector<uint64_t>* fixed_modulus(uint64_t p, unsigned a) {
    static const std::vector<std::pair<std::pair<uint64_t, unsigned>, std::vector<uint64_t>>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{7, 2}, {3, 6, 1}},
    };
    for (const auto& [key, mod] : table)
        if (key.first == p && key.second == a) return &mod;
    return nullptr;
}

}  // namespace

FiniteField FiniteField::make(uint64_t p, unsigned a) {
    if (a == 0) throw std::domain_error("FiniteField: a >= 1 required");
    if (p < 2 || !is_prime_u64(p)) throw std::domain_error("FiniteField: p must be prime");
    FiniteField f;
    f.p_ = p;
    f.a_ = a;
    f.q_ = 1;
    for (unsigned i = 0; i < a; ++i) {
        if (f.q_ > (1ull << 62) / p) throw BudgetExceededError("FiniteField: p^a too large");
        f.q_ *= p;
    }
    if (a == 1) return f;
    if (const auto* fixed = fixed_modulus(p, a)) {
        f.mod_ = *fixed;
        if (!ModPoly(p, f.mod_).is_irreducible())
            throw std::logic_error("FiniteField: fixed modulus table entry is reducible");
        return f;
    }
    // lexicographically smallest monic irreducible (constant term first)
    std::vector<uint64_t> cand(a + 1, 0);
    cand[a] = 1;
    while (true) {
        if (ModPoly(p, cand).is_irreducible()) {
            f.mod_ = cand;
            return f;
        }
        size_t i = 0;
        while (i < a && ++cand[i] == p) {
            cand[i] = 0;
            ++i;
        }
        if (i == a) throw std::logic_error("FiniteField: no irreducible modulus found");
    }
}

FF FiniteField::one() const {
    FF x(a_, 0);
    x[0] = 1 % p_;
    return x;
}

FF FiniteField::from_int(uint64_t v) const {
    FF x(a_, 0);
    x[0] = v % p_;
    return x;
}

FF FiniteField::gen() const {
    if (a_ < 2) throw std::domain_error("FiniteField: prime field has no extension generator");
    FF x(a_, 0);
    x[1] = 1;
    return x;
}

FF FiniteField::add(const FF& x, const FF& y) const {
    FF r(a_);
    for (unsigned i = 0; i < a_; ++i) r[i] = (x[i] + y[i]) % p_;
    return r;
}

FF FiniteField::sub(const FF& x, const FF& y) const {
    FF r(a_);
    for (unsigned i = 0; i < a_; ++i) r[i] = (x[i] + p_ - y[i]) % p_;
    return r;
}

FF FiniteField::neg(const FF& x) const {
    FF r(a_);
    for (unsigned i = 0; i < a_; ++i) r[i] = (p_ - x[i]) % p_;
    return r;
}

FF FiniteField::mul(const FF& x, const FF& y) const {
    if (a_ == 1) return {mulmod_u64(x[0], y[0], p_)};
    std::vector<uint64_t> prod(2 * a_ - 1, 0);
    for (unsigned i = 0; i < a_; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < a_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<unsigned __int128>(x[i]) * y[j]) % p_;
    }
    // reduce by the monic modulus
    for (size_t d = prod.size(); d-- > a_;) {
        uint64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (unsigned j = 0; j < a_; ++j) {
            uint64_t sub_ = mulmod_u64(c, mod_[j], p_);
            prod[d - a_ + j] = (prod[d - a_ + j] + p_ - sub_) % p_;
        }
    }
    prod.resize(a_);
    return prod;
}

bool FiniteField::is_zero(const FF& x) const {
    for (uint64_t v : x)
        if (v) return false;
    return true;
}

FF FiniteField::pow(FF x, uint64_t e) const {
    FF r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        e >>= 1;
        if (e) x = mul(x, x);
    }
    return r;
}

FF FiniteField::inv(const FF& x) const {
    if (is_zero(x)) throw std::domain_error("FiniteField: inverse of zero");
    return pow(x, q_ - 2);
}

uint64_t FiniteField::index(const FF& x) const {
    uint64_t idx = 0;
    for (unsigned i = a_; i-- > 0;) idx = idx * p_ + x[i];
    return idx;
}

FF FiniteField::from_index(uint64_t idx) const {
    FF x(a_);
    for (unsigned i = 0; i < a_; ++i) {
        x[i] = idx % p_;
        idx /= p_;
    }
    return x;
}

bool FiniteField::next(FF& x) const {
    for (unsigned i = 0; i < a_; ++i) {
        if (++x[i] < p_) return true;
        x[i] = 0;
    }
    return false;
}

uint64_t FiniteField::trace_to_prime(const FF& x) const {
    FF s = zero(), w = x;
    for (unsigned i = 0; i < a_; ++i) {
        s = add(s, w);
        if (i + 1 < a_) w = pow(w, p_);
    }
    return s[0];  // lands in the prime field
}

int FiniteField::chi(const FF& x) const {
    if (p_ == 2) throw std::domain_error("FiniteField: chi undefined in characteristic 2");
    if (is_zero(x)) return 0;
    FF t = pow(x, (q_ - 1) / 2);
    return t == one() ? 1 : -1;
}

FF FiniteField::embed_subfield_gen(const FiniteField& sub) const {
    if (sub.p() != p_ || a_ % sub.a() != 0)
        throw std::domain_error("FiniteField: not an extension of the given field");
    if (sub.a() == 1) return one();
    // scan for the first root of the subfield modulus, in index order
    FF x = zero();
    do {
        FF acc = zero();
        for (size_t i = sub.modulus().size(); i-- > 0;) {
            acc = mul(acc, x);
            acc = add(acc, from_int(sub.modulus()[i]));
        }
        if (is_zero(acc)) return x;
    } while (next(x));
    throw std::logic_error("FiniteField: subfield modulus has no root (impossible)");
}

FF FiniteField::embed(const FiniteField& sub, const FF& x, const FF& sub_gen_image) const {
    (void)sub;
    FF acc = zero();
    for (size_t i = x.size(); i-- > 0;) {
        acc = mul(acc, sub_gen_image);
        acc = add(acc, from_int(x[i]));
    }
    return acc;
}

std::string FiniteField::to_string(const FF& x, std::string_view gen_symbol) const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < a_; ++i) {
        if (!x[i]) continue;
        if (!first) os << " + ";
        if (x[i] != 1 || i == 0) os << x[i];
        if (i > 0) {
            if (x[i] != 1) os << "*";
            os << gen_symbol;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace sia
