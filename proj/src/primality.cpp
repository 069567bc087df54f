#include "sia/primality.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace sia {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = m == 1 ? 0 : 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin_u64(uint64_t n, uint64_t a) {
    if (a % n == 0) return true;
    uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// witness set proving primality for all n < 3.317e24 (covers u64)
constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

bool miller_rabin_big(const BigInt& n, const BigInt& a) {
    BigInt nm1 = n - BigInt(1);
    if (a.mod_floor(n).is_zero()) return true;
    BigInt d = nm1;
    int s = 0;
    while (d.is_even()) {
        d = d >> 1;
        ++s;
    }
    BigInt x = BigInt::modpow(a, d, n);
    if (x.is_one() || x == nm1) return true;
    for (int i = 1; i < s; ++i) {
        x = BigInt::mul(x, x).mod_floor(n);
        if (x == nm1) return true;
    }
    return false;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (uint64_t a : kWitnesses)
        if (!miller_rabin_u64(n, a)) return false;
    return true;
}

bool is_probable_prime(const BigInt& n) {
    if (n.is_negative()) throw std::domain_error("is_probable_prime: negative input");
    if (n.fits_int64()) return is_prime_u64(static_cast<uint64_t>(n.to_int64()));
    if (n.is_even()) return false;
    // deterministic below the verified Miller-Rabin bound 3.317e24
    static const BigInt kDetBound = BigInt::from_string("3317044064679887385961981");
    if (n < kDetBound) {
        for (uint64_t a : kWitnesses)
            if (!miller_rabin_big(n, BigInt(static_cast<int64_t>(a)))) return false;
        return true;
    }
    for (uint64_t a : kWitnesses)
        if (!miller_rabin_big(n, BigInt(static_cast<int64_t>(a)))) return false;
    uint64_t seed = BigInt::Hash()(n);
    BigInt span = n - BigInt(3);
    for (int i = 0; i < 64; ++i) {
        // derive a witness in [2, n-2] from the seeded stream
        BigInt w(0);
        for (int k = 0; k < static_cast<int>(n.bit_length() / 64 + 1); ++k)
            w = (w << 64) + BigInt(static_cast<int64_t>(splitmix64(seed) >> 1));
        w = w.mod_floor(span) + BigInt(2);
        if (!miller_rabin_big(n, w)) return false;
    }
    return true;
}

std::vector<uint64_t> first_primes(size_t n) {
    static std::vector<uint64_t> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    uint64_t cand = cache.empty() ? 2 : cache.back() + 1;
    while (cache.size() < n) {
        if (is_prime_u64(cand)) cache.push_back(cand);
        ++cand;
    }
    return std::vector<uint64_t>(cache.begin(), cache.begin() + static_cast<long>(n));
}

namespace {

uint64_t pollard_brent(uint64_t n) {
    if (!(n & 1)) return 2;
    uint64_t seed = n;
    while (true) {
        uint64_t y = splitmix64(seed) % n;
        uint64_t c = splitmix64(seed) % n;
        if (c == 0) c = 1;
        uint64_t m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                uint64_t lim = std::min(m, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(uint64_t n, std::map<uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[n]++;
        return;
    }
    uint64_t d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<uint64_t, int> factor_u64(uint64_t n) {
    std::map<uint64_t, int> out;
    if (n == 0) throw std::domain_error("factor_u64: zero");
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
    }
    factor_rec(n, out);
    return out;
}

std::vector<uint64_t> divisors_u64(uint64_t n) {
    auto f = factor_u64(n);
    std::vector<uint64_t> out{1};
    for (const auto& [p, e] : f) {
        size_t sz = out.size();
        uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<uint64_t, unsigned> prime_power_split(const BigInt& q) {
    if (q <= BigInt(1)) throw std::domain_error("prime_power_split: q must be > 1");
    if (!q.fits_int64()) throw std::domain_error("prime_power_split: q too large");
    uint64_t n = static_cast<uint64_t>(q.to_int64());
    auto f = factor_u64(n);
    if (f.size() != 1) throw std::domain_error("prime_power_split: not a prime power");
    return {f.begin()->first, static_cast<unsigned>(f.begin()->second)};
}

}  // namespace sia
