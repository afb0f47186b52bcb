#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burniat/cyclotomic.hpp"
#include "burniat/elliptic.hpp"
#include "burniat/poly.hpp"

using namespace burniat;

TEST_CASE("polynomial arithmetic basics")
{
    Poly x = Poly::variable("px");
    Poly y = Poly::variable("py");

    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + Poly(2) * x * y + y * y);
    CHECK((x - x).is_zero());
    CHECK(Poly(0).is_zero());
    CHECK((x * y + x).strip_content() == y + Poly(1));

    // substitution
    std::map<int, Poly> sub = {{poly_var_id("px"), y + Poly(1)}};
    CHECK(x.pow(2).substitute(sub) == (y + Poly(1)).pow(2));

    // division and ideal membership
    Poly f = x.pow(2) - y.pow(2);
    CHECK((f * (x + Poly(3)) + Poly(0)).reduce({f}).is_zero());
    CHECK_FALSE((f + Poly(1)).reduce({f}).is_zero());

    // canonical order: equal polynomials print identically
    CHECK((x + y).to_string() == (y + x).to_string());
}

TEST_CASE("cyclotomic field Q(zeta_8)")
{
    Zeta8 z = Zeta8::zeta(1);
    CHECK(z.pow(4) == Zeta8(-1));
    CHECK(z.pow(8) == Zeta8(1));
    CHECK(z.pow(5) == -z);
    CHECK((z.pow(5)).pow(2) == z.pow(2));

    // inverses
    Zeta8 u = z.pow(3) + Zeta8(2);
    CHECK(u * u.inverse() == Zeta8(1));
    CHECK_THROWS_AS(Zeta8(0).inverse(), std::invalid_argument);

    // zeta^-1 = -zeta^3
    CHECK(z.inverse() == -z.pow(3));
}

TEST_CASE("cover transforms and the sign table")
{
    auto ts = {cover_g1(), cover_f2(), cover_f3(), cover_g2(), cover_g3()};
    for (const auto &t : ts)
        CHECK(t.compose(t).projectively_equal(CoverTransform::identity_transform()));

    // the full certified table
    Report rep = verify_sign_table();
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name, " ", c.detail);

    // explicit entries
    CHECK(section_sign_V(cover_g1()) == -1);
    CHECK(section_sign_W(cover_g1()) == -1);
    CHECK(section_sign_V(cover_f2()) == 1);
    CHECK(section_sign_W(cover_f2()) == -1);
    CHECK(section_sign_V(cover_g3()) == 1);
    CHECK(section_sign_W(cover_g3()) == -1);
}

TEST_CASE("splitting lemma identities")
{
    Report rep = verify_splitting();
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("u_i covering identity")
{
    Report rep = verify_ui_identity();
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("K^2 = 2 constants over Q(zeta_8)")
{
    K2TwoConstants k = solve_k2_two_constant();
    for (const auto &c : k.report.checks)
        CHECK_MESSAGE(c.pass, c.name);

    CHECK(k.c == Zeta8::zeta(3));
    CHECK(k.zeta == -Zeta8::zeta(1));
    CHECK(k.records[0].e_prime_part == std::array<int, 3>{0, 1, 1});
    CHECK(k.records[1].e_prime_part == std::array<int, 3>{1, 0, 1});
    CHECK(k.records[2].e_prime_part == std::array<int, 3>{1, 1, 0});
    for (const auto &r : k.records) CHECK(r.center_bit == 1);
}
