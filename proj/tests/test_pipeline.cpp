#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burniat/fixtures.hpp"
#include "burniat/pipeline.hpp"

using namespace burniat;

TEST_CASE("canonical relation sets")
{
    CHECK(canonical_relation_set(5).entries.empty());
    CHECK(canonical_relation_set(3).entries.size() == 2);
    auto rs2 = canonical_relation_set(2);
    REQUIRE(rs2.entries.size() == 3);
    for (const auto &e : rs2.entries) {
        REQUIRE(e.center_bit.has_value());
        CHECK(*e.center_bit == 1);
    }
    CHECK_THROWS_AS(canonical_relation_set(7), std::invalid_argument);
}

TEST_CASE("theorem rows from canonical data")
{
    TheoremRow r6 = compute_pi1(6);
    CHECK(r6.pi1 == "Gamma (infinite)");
    CHECK(r6.h1.is_elementary_abelian_2(6));
    CHECK(r6.conditional_topology);
    CHECK(r6.witness_ok);

    TheoremRow r5 = compute_pi1(5);
    REQUIRE(r5.pi1_class.has_value());
    CHECK(r5.pi1_class->tag == IsoClass::Tag::QuaternionTimesElementaryAbelian);
    CHECK(r5.pi1_class->k == 3);
    CHECK(r5.quotient_order == 64);
    CHECK(r5.h1.is_elementary_abelian_2(5));
    CHECK_MESSAGE(r5.witness_ok, r5.witness);

    TheoremRow r4 = compute_pi1(4);
    CHECK(r4.pi1_class->tag == IsoClass::Tag::QuaternionTimesElementaryAbelian);
    CHECK(r4.pi1_class->k == 2);
    CHECK(r4.quotient_order == 32);
    CHECK(r4.h1.is_elementary_abelian_2(4));
    CHECK(r4.witness_ok);

    TheoremRow r3 = compute_pi1(3);
    CHECK(r3.pi1_class->tag == IsoClass::Tag::QuaternionTimesElementaryAbelian);
    CHECK(r3.pi1_class->k == 1);
    CHECK(r3.quotient_order == 16);
    CHECK(r3.h1.is_elementary_abelian_2(3));
    CHECK_MESSAGE(r3.witness_ok, r3.witness);

    TheoremRow r2 = compute_pi1(2);
    CHECK(r2.pi1_class->tag == IsoClass::Tag::ElementaryAbelian);
    CHECK(r2.pi1_class->k == 3);
    CHECK(r2.pi1 == "(Z/2)^3");
    CHECK(r2.quotient_order == 8);
    CHECK(r2.h1.is_elementary_abelian_2(3));

    CHECK_THROWS_AS(compute_pi1(1), std::invalid_argument);
}

TEST_CASE("arrangement-sourced rows agree with canonical ones")
{
    for (int k : {6, 5, 4, 3, 2}) {
        auto arr = reference_arrangement(k);
        TheoremRow from_arr = compute_pi1(k, Pi1Source::Arrangement, &arr);
        TheoremRow canon = compute_pi1(k);
        CHECK(from_arr.pi1 == canon.pi1);
        CHECK(from_arr.h1 == canon.h1);
    }
    // the nodal K^2 = 4 flavor as well
    auto nodal = reference_arrangement(4, true);
    TheoremRow from_nodal = compute_pi1(4, Pi1Source::Arrangement, &nodal);
    CHECK(from_nodal.pi1 == compute_pi1(4).pi1);

    // class mismatch is an error
    auto arr5 = reference_arrangement(5);
    CHECK_THROWS_AS(compute_pi1(3, Pi1Source::Arrangement, &arr5), std::invalid_argument);
    CHECK_THROWS_AS(compute_pi1(3, Pi1Source::Arrangement, nullptr), std::invalid_argument);
}

TEST_CASE("arrangement relation vectors match canonical up to coordinate permutation")
{
    auto matches_up_to_permutation = [](const RelationSet &a, const RelationSet &b) {
        if (a.entries.size() != b.entries.size()) return false;
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto &p : perms) {
            bool all = true;
            for (std::size_t e = 0; e < a.entries.size() && all; ++e)
                for (int k = 0; k < 3; ++k)
                    if (a.entries[e].e_prime_part[p[k]] != b.entries[e].e_prime_part[k])
                        all = false;
            if (all) return true;
        }
        return false;
    };

    for (int k : {5, 4, 3, 2}) {
        auto arr = reference_arrangement(k);
        auto derived = arrangement_relation_set(arr);
        auto canon = canonical_relation_set(k);
        CHECK_MESSAGE(matches_up_to_permutation(derived, canon), "K^2 = ", k);
    }
    auto derived_nodal = arrangement_relation_set(reference_arrangement(4, true));
    CHECK(matches_up_to_permutation(derived_nodal, canonical_relation_set(4, true)));

    // K^2 = 2 center bits come from the cyclotomic computation
    auto rs2 = arrangement_relation_set(reference_arrangement(2));
    for (const auto &e : rs2.entries) CHECK(e.center_bit == 1);
}

TEST_CASE("full theorem table with discrepancy checks")
{
    Report rep = verify_theorem_table();
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name, " [", c.detail, "]");
}

TEST_CASE("invariant section dimension and moduli report")
{
    CHECK(invariant_section_dimension() == 2);
    Report rep = invariant_section_report();
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name);

    ModuliReport mr = moduli_dimension_report();
    CHECK(mr.dimension == 4);
    for (const auto &c : mr.checks.checks)
        CHECK_MESSAGE(c.pass, c.name);
}
