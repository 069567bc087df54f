#include <doctest.h>

#include "sia/primality.hpp"
#include "sia/rational.hpp"

#include <random>

using namespace sia;

namespace {
BigInt random_bigint(std::mt19937_64& rng, int limbs) {
    BigInt r(0);
    for (int i = 0; i < limbs; ++i) r = (r << 32) + BigInt(static_cast<int64_t>(rng() & 0xffffffffull));
    if (rng() & 1) r = -r;
    return r;
}
}  // namespace

TEST_CASE("bigint divmod identity") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 20000; ++i) {
        BigInt a = random_bigint(rng, 1 + static_cast<int>(rng() % 6));
        BigInt b = random_bigint(rng, 1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        auto [q, r] = BigInt::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // remainder carries the dividend sign
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint decimal round trip") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 2000; ++i) {
        BigInt a = random_bigint(rng, 1 + static_cast<int>(rng() % 8));
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
    CHECK(BigInt::from_string("0").to_string() == "0");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK(BigInt::from_string("00012").to_string() == "12");
    CHECK(BigInt(INT64_MIN).to_string() == "-9223372036854775808");
}

TEST_CASE("bigint shifts gcd isqrt") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 2000; ++i) {
        BigInt a = random_bigint(rng, 1 + static_cast<int>(rng() % 5)).abs();
        unsigned s = static_cast<unsigned>(rng() % 90);
        CHECK((a << s) >> s == a);
        BigInt b = random_bigint(rng, 1 + static_cast<int>(rng() % 5)).abs();
        BigInt g = BigInt::gcd(a, b);
        if (!g.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
        if (!a.is_zero()) {
            BigInt s2 = BigInt::isqrt(a);
            CHECK(s2 * s2 <= a);
            CHECK((s2 + BigInt(1)) * (s2 + BigInt(1)) > a);
        }
    }
}

TEST_CASE("bigint modpow and bit ops") {
    CHECK(BigInt::modpow(BigInt(3), BigInt(100), BigInt(101)) == BigInt(1));  // Fermat
    BigInt p = BigInt::pow(BigInt(2), 127) - BigInt(1);
    CHECK(BigInt::modpow(BigInt(5), p - BigInt(1), p) == BigInt(1));  // Mersenne prime
    CHECK(p.bit_length() == 127);
    CHECK(p.popcount() == 127);
    CHECK(BigInt(12).popcount() == 2);
}

TEST_CASE("miller-rabin agrees with trial division below 10^6") {
    std::vector<bool> sieve(1000001, true);
    sieve[0] = sieve[1] = false;
    for (uint64_t i = 2; i * i <= 1000000; ++i)
        if (sieve[i])
            for (uint64_t j = i * i; j <= 1000000; j += i) sieve[j] = false;
    for (uint64_t n = 0; n <= 1000000; ++n) CHECK(is_probable_prime(BigInt(static_cast<int64_t>(n))) == sieve[n]);
}

TEST_CASE("primality spot values") {
    CHECK(is_probable_prime(BigInt(11)));
    CHECK(is_probable_prime(BigInt(5465351)));
    CHECK(is_probable_prime(BigInt(38461)));
    CHECK_FALSE(is_probable_prime(BigInt(1)));
    CHECK_FALSE(is_probable_prime(BigInt::from_string("3317044064679887385961981")));  // 3*5*...
    // a 2^89-1 Mersenne prime
    CHECK(is_probable_prime(BigInt::pow(BigInt(2), 89) - BigInt(1)));
}

TEST_CASE("rational canonical form and arithmetic") {
    Rational r(BigInt(4), BigInt(-6));
    CHECK(r.num() == BigInt(-2));
    CHECK(r.den() == BigInt(3));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 2).floor() == BigInt(3));
    CHECK(Rational(-7, 2).floor() == BigInt(-4));
    CHECK(Rational(-7, 2).ceil() == BigInt(-3));
    CHECK(Rational::from_string("5/10") == Rational(1, 2));
    CHECK(Rational(1, 3).to_decimal(4) == "0.3333");
    std::mt19937_64 rng(99);
    for (int i = 0; i < 3000; ++i) {
        Rational a(static_cast<int64_t>(rng() % 2000) - 1000, static_cast<int64_t>(rng() % 999) + 1);
        Rational b(static_cast<int64_t>(rng() % 2000) - 1000, static_cast<int64_t>(rng() % 999) + 1);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(BigInt::gcd(a.num(), a.den()).is_one());
    }
}
