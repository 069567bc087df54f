#ifndef SIA_BIGINT_HPP
#define SIA_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <iosfwd>
#include <functional>

namespace sia {

// Arbitrary-precision signed integer, sign + magnitude over 32-bit limbs.
// Canonical form: no leading zero limbs; zero is the empty limb vector with
// positive sign. Division truncates toward zero (C99 semantics).
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    static BigInt from_string(std::string_view s);
    explicit BigInt(std::string_view s) : BigInt(from_string(s)) {}

    std::string to_string() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_negative() const { return neg_; }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1); }
    bool is_even() const { return !is_odd(); }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return mul(a, b); }
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    // quotient truncated toward zero, remainder has the sign of the dividend
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    static BigInt mul(const BigInt& a, const BigInt& b);

    // floor division / nonnegative remainder
    static std::pair<BigInt, BigInt> fdivmod(const BigInt& a, const BigInt& b);
    BigInt mod_floor(const BigInt& m) const { return fdivmod(*this, m).second; }

    int compare(const BigInt& o) const;
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    BigInt operator<<(unsigned bits) const;
    BigInt operator>>(unsigned bits) const;  // arithmetic shift of magnitude, sign kept

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, uint64_t e);
    static BigInt modpow(const BigInt& base, const BigInt& e, const BigInt& m);
    // floor(sqrt(n)), n >= 0
    static BigInt isqrt(const BigInt& n);

    size_t bit_length() const;
    // number of set bits; requires n >= 0
    size_t popcount() const;
    bool bit(size_t i) const;

    bool fits_int64() const;
    int64_t to_int64() const;  // throws if out of range
    double to_double() const;  // best-effort rounding

    size_t limb_count() const { return limbs_.size(); }

    struct Hash {
        size_t operator()(const BigInt& v) const;
    };

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    bool neg_ = false;
    std::vector<uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace sia

#endif
