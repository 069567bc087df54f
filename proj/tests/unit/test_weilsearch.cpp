#include <doctest.h>

#include "sia/weilsearch.hpp"
#include "sia/catalog.hpp"

#include <cmath>
#include <set>

using namespace sia;

namespace {
const Catalog& cat() {
    static Catalog c = Catalog::load_file(SIA_CATALOG_PATH);
    return c;
}
}  // namespace

TEST_CASE("exact height comparison for units") {
    auto z5 = cat().find("Q(zeta5)");
    NFElement u0 = z5->fund_units[0];
    CHECK(height_le(u0, Rational(2)));
    CHECK_FALSE(height_le(u0, Rational(3, 2)));  // phi ~ 1.618 > 1.5
    CHECK(height_le(z5->F->one(), Rational(1)));
    CHECK_FALSE(height_le(z5->F->one(), Rational(1, 2)));
    // tie at an exact algebraic boundary: h(u0) = (1+sqrt5)/2 is irrational,
    // so rational bounds always decide; rational elements tie exactly
    CHECK(height_le(z5->F->from_rational(Rational(7)), Rational(7)));
}

TEST_CASE("unit enumeration") {
    auto z5 = cat().find("Q(zeta5)");
    auto u1 = enumerate_units(*z5, Rational(1));
    CHECK(u1.size() == 2);  // only the torsion units survive at B = 1
    auto u2 = enumerate_units(*z5, Rational(2));
    CHECK(u2.size() == 6);  // {+-1, +-u0, +-u0^-1}
    std::set<std::string> seen;
    for (const auto& u : u2) {
        CHECK(height_le(u, Rational(2)));
        CHECK(u.is_integral());
        CHECK((u.norm() == Rational(1) || u.norm() == Rational(-1)));
        CHECK(seen.insert(u.to_string()).second);  // no duplicates
    }
    CHECK(enumerate_units(*z5, Rational(1, 2)).empty());

    // rank-2 enumeration in the real cubic subfield data
    auto z9 = cat().find("Q(zeta9)");
    auto u9 = enumerate_units(*z9, Rational(4));
    std::set<std::string> seen9;
    for (const auto& u : u9) {
        CHECK(height_le(u, Rational(4)));
        CHECK(seen9.insert(u.to_string()).second);
    }
    CHECK(u9.size() >= 6);
}

TEST_CASE("algorithm1 on the quartic cyclotomic field") {
    auto z5 = cat().find("Q(zeta5)");
    auto r1 = algorithm1(*z5, Rational(1));
    CHECK(r1.size() == 4);
    auto r2 = algorithm1(*z5, Rational(2));
    CHECK(r2.size() == 8);
    bool has_gen = false;
    for (const auto& r : r2) {
        CHECK(is_weil_generator(*z5, r.alpha).ok);
        CHECK(recompose(*z5, r) == r.alpha);
        if (r.alpha == z5->K->generator()) has_gen = true;
    }
    CHECK(has_gen);
    // subset property under bound growth
    auto r3 = algorithm1(*z5, Rational(5));
    for (const auto& r : r2) {
        bool found = false;
        for (const auto& s : r3)
            if (s.alpha == r.alpha) found = true;
        CHECK(found);
    }
    CHECK(r3.size() > r2.size());
}

TEST_CASE("quadratic closed form") {
    auto qi = cat().find("Q(i)");
    auto gens = quadratic_weil_gens(*qi, BigInt(1));
    REQUIRE(gens.size() == 2);
    NFElement i = qi->K->element({Rational(-2), Rational(1)});
    std::set<std::string> got{gens[0].alpha.to_string(), gens[1].alpha.to_string()};
    CHECK(got.count(i.to_string()) == 1);
    CHECK(got.count((-i).to_string()) == 1);

    auto q2 = cat().find("Q(sqrt-2)");
    auto g4 = quadratic_weil_gens(*q2, BigInt(4));
    bool has_3ps2 = false;
    for (const auto& r : g4) {
        CHECK(is_weil_generator(*q2, r.alpha).ok);
        if (r.q == BigInt(11)) has_3ps2 = true;  // 3 +- sqrt(-2), norm 11, height sqrt(11) <= 4
    }
    CHECK(has_3ps2);
    CHECK(quadratic_weil_count(*q2, BigInt(4)) == BigInt(g4.size()));
    CHECK(quadratic_weil_count(*q2, BigInt(0)) == BigInt(0));

    for (int64_t n : {10, 100, 1000}) {
        BigInt c = quadratic_weil_count(*qi, BigInt(n));
        CHECK((c - BigInt(4 * n)).abs() <= BigInt(8));
    }
}

TEST_CASE("quartic congruence data") {
    auto z5 = cat().find("Q(zeta5)");
    auto qc = quartic_congruence(*z5);
    CHECK(qc.order_m == 6);
    CHECK(qc.admissible == std::vector<uint64_t>{0, 1, 3, 4});
    CHECK(qc.density_c6 == Rational(2, 3));
    double expected_rho = 8.0 / (3.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0));
    CHECK(qc.rho == doctest::Approx(expected_rho).epsilon(1e-9));
    // admissibility encodes k mod 3 != 2
    for (uint64_t k = 0; k < qc.order_m; ++k) {
        bool adm = false;
        for (uint64_t a : qc.admissible) adm |= (a == k);
        CHECK(adm == (k % 3 != 2));
    }
}

TEST_CASE("census counts") {
    auto z5 = cat().find("Q(zeta5)");
    std::vector<BigInt> grid = {BigInt(1), BigInt(4), BigInt(8), BigInt(100)};
    auto rows = census(*z5, grid, Rational(200));
    // hand-checked ladder: q = 1 (8 torsion-family generators), then 11, 61
    CHECK(rows[0].count == 8);
    CHECK(rows[1].count == 16);  // sqrt(11) <= 4
    CHECK(rows[2].count == 24);  // sqrt(61) <= 8
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].count >= rows[i - 1].count);

    auto qi = cat().find("Q(i)");
    auto qrows = census(*qi, {BigInt(10), BigInt(100)}, Rational(1));
    CHECK(qrows[0].count == 38);
    CHECK(qrows[0].predicted == doctest::Approx(40.0));
}

TEST_CASE("quartic height law") {
    auto z5 = cat().find("Q(zeta5)");
    auto recs = algorithm1(*z5, Rational(500));
    auto [lo, hi] = quartic_height_law(*z5, recs);
    CHECK(lo > 0);
    CHECK(hi / lo < 10.0);
}
