#include "sia/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sia {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(int64_t v) {
    if (v < 0) {
        neg_ = true;
        uint64_t m = ~static_cast<uint64_t>(v) + 1;  // |v| without overflow at INT64_MIN
        limbs_.push_back(static_cast<uint32_t>(m));
        if (m >> 32) limbs_.push_back(static_cast<uint32_t>(m >> 32));
    } else if (v > 0) {
        uint64_t m = static_cast<uint64_t>(v);
        limbs_.push_back(static_cast<uint32_t>(m));
        if (m >> 32) limbs_.push_back(static_cast<uint32_t>(m >> 32));
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[x.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    assert(cmp_mag(a, b) >= 0);
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = ai * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t s = r[k] + carry;
            r[k] = static_cast<uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    assert(!b.empty());
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // normalize so that the top limb of the divisor has its high bit set
    int shift = 0;
    {
        uint32_t top = b.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
    }
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        if (shift == 0) {
            out.assign(v.begin(), v.end());
            out.push_back(0);
            return out;
        }
        uint32_t carry = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] = (v[i] << shift) | carry;
            carry = static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift));
        }
        out[v.size()] = carry;
        return out;
    };
    std::vector<uint32_t> u = shl(a);           // length m+1 guaranteed extra limb
    std::vector<uint32_t> v = shl(b);
    while (!v.empty() && v.back() == 0) v.pop_back();
    const size_t n = v.size();
    const size_t m = u.size() - n;  // u has exactly a.size()+1 limbs

    q.assign(m, 0);
    const uint64_t vtop = v[n - 1];
    const uint64_t vsecond = n >= 2 ? v[n - 2] : 0;

    for (size_t j = m; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop;
        uint64_t rhat = num % vtop;
        if (qhat >= kBase) {
            qhat = kBase - 1;
            rhat = num - qhat * vtop;
        }
        while (rhat < kBase && qhat * vsecond > ((rhat << 32) | (n >= 2 ? u[j + n - 2] : 0))) {
            --qhat;
            rhat += vtop;
        }
        // u[j .. j+n] -= qhat * v
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add v back
            t += static_cast<int64_t>(kBase);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
            t &= 0xffffffff;
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    // denormalize remainder
    r.assign(u.begin(), u.begin() + n);
    if (shift) {
        uint32_t carry = 0;
        for (size_t i = r.size(); i-- > 0;) {
            uint32_t cur = r[i];
            r[i] = (cur >> shift) | carry;
            carry = static_cast<uint32_t>(static_cast<uint64_t>(cur) << (32 - shift));
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (neg_ == o.neg_) {
        limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) {
            limbs_.clear();
            neg_ = false;
        } else if (c > 0) {
            limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            limbs_ = sub_mag(o.limbs_, limbs_);
            neg_ = o.neg_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    BigInt t = o;
    if (!t.is_zero()) t.neg_ = !t.neg_;
    return *this += t;
}

BigInt BigInt::mul(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    r.neg_ = !r.limbs_.empty() && (a.neg_ != b.neg_);
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    *this = mul(*this, o);
    return *this;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt q, r;
    divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
    q.neg_ = !q.limbs_.empty() && (a.neg_ != b.neg_);
    r.neg_ = !r.limbs_.empty() && a.neg_;
    return {q, r};
}

std::pair<BigInt, BigInt> BigInt::fdivmod(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod(a, b);
    if (r.is_negative()) {
        if (b.is_negative()) {
            r -= b;
            q += BigInt(1);
        } else {
            r += b;
            q -= BigInt(1);
        }
    }
    return {q, r};
}

BigInt& BigInt::operator/=(const BigInt& o) {
    *this = divmod(*this, o).first;
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    *this = divmod(*this, o).second;
    return *this;
}

int BigInt::compare(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return neg_ ? -c : c;
}

BigInt BigInt::operator<<(unsigned bits) const {
    if (is_zero() || bits == 0) return *this;
    BigInt r;
    r.neg_ = neg_;
    size_t limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(limbs_[i]) << bit_shift;
        r.limbs_[i + limb_shift] |= static_cast<uint32_t>(v);
        r.limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator>>(unsigned bits) const {
    size_t limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return BigInt();
    BigInt r;
    r.neg_ = neg_;
    r.limbs_.assign(limbs_.begin() + limb_shift, limbs_.end());
    if (bit_shift) {
        for (size_t i = 0; i < r.limbs_.size(); ++i) {
            uint64_t hi = i + 1 < r.limbs_.size() ? r.limbs_[i + 1] : 0;
            r.limbs_[i] = static_cast<uint32_t>(((hi << 32) | r.limbs_[i]) >> bit_shift);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, uint64_t e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

BigInt BigInt::modpow(const BigInt& base, const BigInt& e, const BigInt& m) {
    if (m.is_zero()) throw std::domain_error("BigInt: modpow modulus zero");
    if (e.is_negative()) throw std::domain_error("BigInt: modpow negative exponent");
    BigInt r(1), b = base.mod_floor(m);
    size_t nbits = e.bit_length();
    for (size_t i = 0; i < nbits; ++i) {
        if (e.bit(i)) r = mul(r, b).mod_floor(m);
        if (i + 1 < nbits) b = mul(b, b).mod_floor(m);
    }
    return r;
}

BigInt BigInt::isqrt(const BigInt& n) {
    if (n.is_negative()) throw std::domain_error("BigInt: isqrt of negative");
    if (n.is_zero()) return BigInt();
    size_t bl = n.bit_length();
    BigInt x = BigInt(1) << static_cast<unsigned>(bl / 2 + 1);
    // Newton iteration, monotonically decreasing once above the root
    while (true) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    return x;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

size_t BigInt::popcount() const {
    if (neg_) throw std::domain_error("BigInt: popcount of negative");
    size_t n = 0;
    for (uint32_t l : limbs_) n += static_cast<size_t>(__builtin_popcount(l));
    return n;
}

bool BigInt::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t m = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
}

int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    uint64_t m = 0;
    if (!limbs_.empty()) m = limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<uint64_t>(limbs_[1]) << 32;
    return neg_ ? -static_cast<int64_t>(m - 1) - 1 : static_cast<int64_t>(m);
}

double BigInt::to_double() const {
    double r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return neg_ ? -r : r;
}

BigInt BigInt::from_string(std::string_view s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    // consume 9 decimal digits at a time
    while (i < s.size()) {
        uint32_t chunk = 0;
        int digits = 0;
        while (i < s.size() && digits < 9) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
            chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
            ++digits;
            ++i;
        }
        uint32_t scale = 1;
        for (int k = 0; k < digits; ++k) scale *= 10;
        r = mul(r, BigInt(static_cast<int64_t>(scale)));
        r += BigInt(static_cast<int64_t>(chunk));
    }
    if (neg && !r.is_zero()) r.neg_ = true;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> mag = limbs_;
    std::string out;
    const uint64_t chunk_div = 1000000000ull;
    std::vector<uint32_t> q(mag.size());
    while (!mag.empty()) {
        uint64_t rem = 0;
        q.assign(mag.size(), 0);
        for (size_t i = mag.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag[i];
            q[i] = static_cast<uint32_t>(cur / chunk_div);
            rem = cur % chunk_div;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        mag = q;
        char buf[10];
        if (mag.empty()) {
            int n = snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(rem));
            out.append(buf, buf + n);
        } else {
            // interior chunk: zero-padded
            char pad[10];
            snprintf(pad, sizeof pad, "%09llu", static_cast<unsigned long long>(rem));
            out.append(pad, pad + 9);
        }
    }
    // digits were appended least-significant chunk first, in-chunk already correct
    // rebuild by reversing chunk order
    std::string res;
    if (neg_) res.push_back('-');
    size_t tail = out.size() % 9;
    size_t head_chunks = out.size() / 9;
    // out = [chunk0(9)][chunk1(9)]...[most significant (tail or 9)]
    if (tail) {
        res.append(out.end() - tail, out.end());
    } else if (head_chunks) {
        res.append(out.end() - 9, out.end());
        --head_chunks;
    }
    for (size_t c = head_chunks; c-- > 0;) {
        res.append(out.begin() + c * 9, out.begin() + c * 9 + 9);
    }
    return res;
}

size_t BigInt::Hash::operator()(const BigInt& v) const {
    size_t h = v.neg_ ? 0x9e3779b97f4a7c15ull : 0;
    for (uint32_t l : v.limbs_) h = h * 1099511628211ull + l;
    return h;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace sia
