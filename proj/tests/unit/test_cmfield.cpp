#include <doctest.h>

#include "sia/catalog.hpp"

#include <random>

using namespace sia;

namespace {
const Catalog& cat() {
    static Catalog c = Catalog::load_file(SIA_CATALOG_PATH);
    return c;
}
}  // namespace

TEST_CASE("conjugation") {
    auto z5 = cat().find("Q(zeta5)");
    NFElement z = z5->K->generator();
    CHECK(z5->conj(z) == z.pow(4));
    // conjugation fixes T entries
    for (const auto& eta : z5->T) CHECK(z5->fixed_by_conj(z5->to_K(eta)));
    auto qi = cat().find("Q(i)");
    // omega = 2 + i, so i = omega - 2 and conj(i) = -i
    NFElement i = qi->K->element({Rational(-2), Rational(1)});
    CHECK(qi->conj(i) == -i);
    CHECK(qi->conj(i + Rational(3)) == -i + Rational(3));
}

TEST_CASE("weil numbers") {
    auto z5 = cat().find("Q(zeta5)");
    NFElement z = z5->K->generator();
    CHECK(*is_weil_number(*z5, z) == BigInt(1));
    CHECK_FALSE(is_weil_number(*z5, z + Rational(1)).has_value());
    auto qi = cat().find("Q(i)");
    NFElement i = qi->K->element({Rational(-2), Rational(1)});
    CHECK(*is_weil_number(*qi, i * Rational(2)) == BigInt(4));
    CHECK_THROWS(is_weil_number(*z5, z * Rational(1, 2)));  // non-integral
}

TEST_CASE("weil generator three-condition test") {
    auto qi = cat().find("Q(i)");
    NFElement i = qi->K->element({Rational(-2), Rational(1)});
    CHECK(is_weil_generator(*qi, i).ok);
    {
        auto chk = is_weil_generator(*qi, qi->K->from_rational(Rational(-1)));
        CHECK_FALSE(chk.ok);
        CHECK(chk.failed_condition == 3);
    }
    {
        auto chk = is_weil_generator(*qi, i * Rational(2));
        CHECK_FALSE(chk.ok);
        CHECK(chk.failed_condition == 3);
    }
    auto z5 = cat().find("Q(zeta5)");
    {
        auto chk = is_weil_generator(*z5, z5->K->generator() + Rational(1));
        CHECK_FALSE(chk.ok);
        CHECK(chk.failed_condition == 1);
    }
    {
        // norm and different conditions hold, generation of O_F fails
        NFElement bad = z5->K->element({Rational(-2), Rational(2), Rational(-4), Rational(-5)});
        auto chk = is_weil_generator(*z5, bad);
        CHECK_FALSE(chk.ok);
        CHECK(chk.failed_condition == 2);
    }
    {
        // the Frobenius generator of the F11 surface: s = eta0 - 5, u = phi^2
        NFElement eta0K = z5->to_K(z5->T[0]);
        NFElement u = z5->to_K(z5->T[0] + Rational(2));  // phi^2 = 2 + eta0
        NFElement pi = (u * z5->diff_gamma() + eta0K + Rational(-5)) * Rational(1, 2);
        CHECK(pi.char_poly() == QPoly::parse("121 + 121*x + 51*x^2 + 11*x^3 + x^4"));
        auto chk = is_weil_generator(*z5, pi);
        CHECK(chk.ok);
        CHECK(*chk.q == BigInt(11));
    }
}

TEST_CASE("decompose and recompose") {
    auto z5 = cat().find("Q(zeta5)");
    NFElement z = z5->K->generator();
    auto rec = decompose(*z5, z);
    CHECK(rec.u == z5->F->one());
    CHECK(rec.eta_index == 0);
    CHECK(rec.a == BigInt(0));
    CHECK(rec.q == BigInt(1));
    CHECK(recompose(*z5, rec) == z);
    // conjugate flips the sign of u
    auto recc = decompose(*z5, z5->conj(z));
    CHECK(recc.u == -rec.u);

    auto qi = cat().find("Q(i)");
    NFElement i = qi->K->element({Rational(-2), Rational(1)});
    auto rqi = decompose(*qi, i);
    CHECK(rqi.u == qi->F->one());
    CHECK(rqi.eta == qi->F->zero());
    CHECK(recompose(*qi, rqi) == i);
}

TEST_CASE("candidate expansion a(u, eta)") {
    auto z5 = cat().find("Q(zeta5)");
    NFElement eta0 = z5->T[0];
    auto ce = a_from_u_eta(*z5, eta0 * eta0, eta0);
    CHECK(ce.a == Rational(5, 2));
    auto ce1 = a_from_u_eta(*z5, z5->F->one(), eta0);
    CHECK(ce1.a == Rational(0));
    CHECK(ce1.alpha == z5->K->generator());
    CHECK(ce1.residuals.empty());  // g = 2: no residual coefficients

    // g = 3: residual coefficient present and zero exactly for lifting units
    auto z9 = cat().find("Q(zeta9)");
    auto ce9 = a_from_u_eta(*z9, z9->F->one(), z9->T[0]);
    REQUIRE(ce9.residuals.size() == 1);
    CHECK(ce9.residuals[0].is_zero());
    CHECK(ce9.alpha == z9->K->generator());
}

TEST_CASE("mod 4 classes") {
    auto z5 = cat().find("Q(zeta5)");
    NFElement any = z5->K->element({Rational(3), Rational(-1), Rational(7), Rational(2)});
    auto cls = mod4_class(*z5, any * Rational(4));
    for (const auto& c : cls) CHECK(c.is_zero());

    NFElement u0 = z5->fund_units[0];
    NFElement expected = z5->K->element({Rational(1), Rational(0), Rational(-2), Rational(-2)});
    auto expected_cls = mod4_class(*z5, expected);
    for (uint64_t k = 0; k <= 5; ++k) {
        auto ce = a_from_u_eta(*z5, u0.pow(k), z5->T[0]);
        auto c = mod4_class(*z5, ce.alpha * Rational(4));
        bool zero = true;
        for (const auto& v : c)
            if (!v.is_zero()) zero = false;
        if (k == 2 || k == 5) {
            CHECK(c == expected_cls);
        } else {
            CHECK(zero);
        }
    }
}

TEST_CASE("mod 4 class depends only on the unit mod 4") {
    auto z5 = cat().find("Q(zeta5)");
    std::mt19937_64 rng(7);
    NFElement u0 = z5->fund_units[0];
    for (int trial = 0; trial < 6; ++trial) {
        // u' = u + 4*beta for beta in O_F
        std::vector<Rational> bc;
        for (int i = 0; i < 2; ++i) bc.emplace_back(static_cast<int64_t>(rng() % 5) - 2);
        NFElement beta = z5->F->element(bc);
        NFElement u = u0.pow(1 + trial % 3);
        NFElement u2 = u + beta * Rational(4);
        auto c1 = a_from_u_eta(*z5, u, z5->T[0]);
        auto c2 = a_from_u_eta(*z5, u2, z5->T[0]);
        Rational diff = c1.a - c2.a;
        CHECK(diff.is_integer());
        CHECK(diff.num().is_even());
        CHECK(mod4_class(*z5, c1.alpha * Rational(4)) == mod4_class(*z5, c2.alpha * Rational(4)));
    }
}

TEST_CASE("monogenic obstruction") {
    auto ob = cat().find("sextic-x6+12x4+17x2+2");
    auto p = monogenic_obstruction(*ob);
    REQUIRE(p.has_value());
    CHECK(*p == 2);
    CHECK(count_padic_roots(ob->F->defining_poly(), 2) == 3);
    CHECK_FALSE(monogenic_obstruction(*cat().find("Q(zeta9)")).has_value());
    CHECK_FALSE(monogenic_obstruction(*cat().find("Q(zeta7)")).has_value());
    CHECK_FALSE(monogenic_obstruction(*cat().find("Q(zeta5)")).has_value());
}

TEST_CASE("element disc and diff") {
    auto qi = cat().find("Q(i)");
    auto [d5, f5] = element_disc_diff(*qi, qi->K->from_rational(Rational(5)));
    CHECK(d5.is_zero());
    CHECK(f5.is_zero());
    NFElement i = qi->K->element({Rational(-2), Rational(1)});
    auto [di, fi] = element_disc_diff(*qi, i);
    CHECK(di == qi->K->from_rational(Rational(-4)));
    CHECK(fi == i * Rational(2));
    auto z5 = cat().find("Q(zeta5)");
    NFElement z = z5->K->generator();
    auto [dz, fz] = element_disc_diff(*z5, z);
    CHECK(fz == z - z.pow(4));
    CHECK(dz == fz * fz);
}

TEST_CASE("weil generator closure under negation and conjugation") {
    auto z5 = cat().find("Q(zeta5)");
    NFElement z = z5->K->generator();
    CHECK(is_weil_generator(*z5, -z).ok);
    CHECK(is_weil_generator(*z5, z5->conj(z)).ok);
    // root-of-unity multiples need not stay generators: i is one, i^2 is not
    auto qi = cat().find("Q(i)");
    NFElement i = qi->K->element({Rational(-2), Rational(1)});
    CHECK(is_weil_generator(*qi, i).ok);
    CHECK_FALSE(is_weil_generator(*qi, i * i).ok);
}

TEST_CASE("module generated by powers has the field discriminant") {
    auto z5 = cat().find("Q(zeta5)");
    NFElement z = z5->K->generator();
    for (const NFElement& alpha : {z, -z, z5->conj(z)}) {
        std::vector<NFElement> gens;
        NFElement ab = z5->conj(alpha);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) gens.push_back(alpha.pow(i) * ab.pow(j));
        CHECK(module_discriminant(gens) == Rational(z5->disc_K));
    }
}
