#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "burniat/gamma_bar.hpp"
#include "burniat/group_table.hpp"

using namespace burniat;

TEST_CASE("reference tables are groups with the expected shape")
{
    auto q = quaternion_table();
    q.validate();
    CHECK(q.n() == 8);
    CHECK_FALSE(q.is_abelian());
    CHECK(q.exponent() == 4);
    // one element of order 2 (that is -1), six of order 4
    auto fpq = fingerprint(q);
    CHECK(fpq.order_histogram.at(2) == 1);
    CHECK(fpq.order_histogram.at(4) == 6);
    CHECK(fpq.abelianization.is_elementary_abelian_2(2));
    CHECK(fpq.center_order == 2);

    auto d = dihedral8_table();
    d.validate();
    CHECK_FALSE(d.is_abelian());
    auto fpd = fingerprint(d);
    CHECK(fpd.order_histogram.at(2) == 5);
    CHECK(fpd.order_histogram.at(4) == 2);
    CHECK(fpd != fpq);

    auto ea3 = elementary_abelian_table(3);
    ea3.validate();
    CHECK(ea3.is_abelian());
    CHECK(ea3.exponent() == 2);
}

TEST_CASE("gamma-bar enumeration")
{
    GammaBarGroup gb = enumerate_gamma_bar();
    CHECK(gb.table.n() == 512);
    gb.table.validate();

    // the designated lattice subgroup has order 64, is central, elementary abelian
    CHECK(gb.lattice_subgroup.size() == 64);
    auto center = gb.table.center();
    std::set<int> zset(center.begin(), center.end());
    for (int a : gb.lattice_subgroup) {
        CHECK(zset.count(a) == 1);
        int o = gb.table.element_order(a);
        CHECK(o <= 2);
    }

    // quotient by it is (Z/2)^3
    auto q = quotient(gb.table, gb.lattice_subgroup);
    CHECK(q.group.n() == 8);
    auto cls = classify(q.group);
    CHECK(cls.tag == IsoClass::Tag::ElementaryAbelian);
    CHECK(cls.k == 3);

    // gamma images have order 4 in gamma-bar (gamma_i^2 = e_i is not killed)
    for (int i = 0; i < 3; ++i) CHECK(gb.table.element_order(gb.gamma[i]) == 4);
}

TEST_CASE("normal closure")
{
    GammaBarGroup gb = enumerate_gamma_bar();

    // trivial seed
    auto triv = normal_closure(gb.table, {gb.table.identity});
    CHECK(triv.size() == 1);

    // one central element of order 2: closure adds nothing
    int central2 = -1;
    auto center = gb.table.center();
    for (int a : center)
        if (gb.table.element_order(a) == 2) {
            central2 = a;
            break;
        }
    REQUIRE(central2 >= 0);
    auto c2 = normal_closure(gb.table, {central2});
    CHECK(c2.size() == 2);

    // seeds over the K^2 = 5 relation set: the closure of gamma1 gamma2 gamma3
    // has index 64
    GammaSystem gs = build_gamma();
    int g123 = gb.index_of_affine(gs.gamma123());
    auto n = normal_closure(gb.table, {g123});
    CHECK(n.size() == 8);
    CHECK(512 % n.size() == 0);
    CHECK(512 / n.size() == 64);
    CHECK(is_normal(gb.table, n));

    CHECK_THROWS_AS(normal_closure(gb.table, {51200}), std::invalid_argument);
}

TEST_CASE("quotients")
{
    GammaBarGroup gb = enumerate_gamma_bar();

    // quotient by the trivial subgroup is isomorphic (same order, fingerprint)
    auto q0 = quotient(gb.table, {gb.table.identity});
    CHECK(q0.group.n() == 512);
    CHECK(fingerprint(q0.group) == fingerprint(gb.table));

    // non-normal subgroup must be rejected: <gamma1> is not normal
    auto h = gb.table.generated_subgroup({gb.gamma[0]});
    CHECK_FALSE(is_normal(gb.table, h));
    CHECK_THROWS_AS(quotient(gb.table, h), std::invalid_argument);

    // |quotient| * |normal| = |G|
    GammaSystem gs = build_gamma();
    auto n = normal_closure(gb.table, {gb.index_of_affine(gs.gamma123())});
    auto q = quotient(gb.table, n);
    CHECK(q.group.n() * static_cast<int>(n.size()) == gb.table.n());
}

TEST_CASE("classification catalog")
{
    // catalog self-test: the 8-element group {+-1, +-i, +-j, +-k}
    auto clsq = classify(quaternion_table());
    CHECK(clsq.tag == IsoClass::Tag::QuaternionTimesElementaryAbelian);
    CHECK(clsq.k == 0);
    CHECK(clsq.to_string() == "H");

    // (Z/2)^3
    auto cls3 = classify(elementary_abelian_table(3));
    CHECK(cls3.tag == IsoClass::Tag::ElementaryAbelian);
    CHECK(cls3.k == 3);
    CHECK(cls3.to_string() == "(Z/2)^3");

    // dihedral of order 8 is neither
    auto clsd = classify(dihedral8_table());
    CHECK(clsd.tag == IsoClass::Tag::Other);

    // H x (Z/2)^k for k = 0..3, built by direct product
    for (int k = 0; k <= 3; ++k) {
        FiniteGroupTable t = quaternion_table();
        if (k > 0) t = direct_product(t, elementary_abelian_table(k));
        auto cls = classify(t);
        CHECK(cls.tag == IsoClass::Tag::QuaternionTimesElementaryAbelian);
        CHECK(cls.k == k);
        // witness is an explicit isomorphism
        auto w = find_quaternion_witness(t);
        REQUIRE(w.has_value());
        CHECK(static_cast<int>(w->central_factors.size()) == k);
    }

    // D4 x (Z/2)^k impostors are rejected
    for (int k = 0; k <= 3; ++k) {
        FiniteGroupTable t = dihedral8_table();
        if (k > 0) t = direct_product(t, elementary_abelian_table(k));
        auto cls = classify(t);
        CHECK(cls.tag == IsoClass::Tag::Other);
        CHECK_FALSE(find_quaternion_witness(t).has_value());
    }
}

TEST_CASE("fingerprint is invariant under relabeling")
{
    std::mt19937 rng(321);
    for (const FiniteGroupTable &t :
         {quaternion_table(), dihedral8_table(),
          direct_product(quaternion_table(), elementary_abelian_table(2))}) {
        auto fp = fingerprint(t);
        for (int it = 0; it < 5; ++it) {
            std::vector<int> perm(t.n());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto r = relabel(t, perm);
            r.validate();
            CHECK(fingerprint(r) == fp);
            CHECK(classify(r) == classify(t));
        }
    }
}

TEST_CASE("abelianization from tables")
{
    GammaBarGroup gb = enumerate_gamma_bar();
    auto ab = table_abelianization(gb.table);
    // gamma-bar abelianization is (Z/2)^6: same as Gamma since 2Lambda
    // dies in any abelian quotient of Gamma
    CHECK(ab.is_elementary_abelian_2(6));

    auto abq = table_abelianization(quaternion_table());
    CHECK(abq.is_elementary_abelian_2(2));

    // Z/4 x Z/2 as a table
    FiniteGroupTable z4;
    z4.mul.assign(4, std::vector<int>(4, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) z4.mul[a][b] = (a + b) % 4;
    z4.identity = 0;
    auto mixed = table_abelianization(direct_product(z4, elementary_abelian_table(1)));
    CHECK(mixed.free_rank == 0);
    CHECK(mixed.torsion == std::vector<BigInt>{2, 4});
}
