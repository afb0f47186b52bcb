#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "burniat/torus.hpp"

using namespace burniat;

TEST_CASE("fixed point set")
{
    auto fp = fixed_points();
    CHECK(fp.size() == 64);

    // quarter-epsilon is among them
    CHECK(std::find(fp.begin(), fp.end(), quarter_epsilon()) != fp.end());

    // every returned point satisfies the defining torus equation
    for (const auto &z : fp) CHECK(apply_gamma123(z) == z);

    // independent oracle: enumerate all 4096 points of (1/4)Lambda / Lambda
    int count = 0;
    for (int mask = 0; mask < 4096; ++mask) {
        TorusPoint z;
        int m = mask;
        for (int j = 0; j < 6; ++j) {
            z.q[j] = static_cast<std::uint8_t>(m % 4);
            m /= 4;
        }
        if (is_fixed_point(z)) {
            ++count;
            CHECK(std::find(fp.begin(), fp.end(), z) != fp.end());
        }
    }
    CHECK(count == 64);
}

TEST_CASE("lambda-hat map")
{
    // z = epsilon/4 has lambda-hat zero
    CHECK(lambda_hat(quarter_epsilon()).is_zero());

    // z = epsilon/4 + e1'/2 has lambda-hat (0,0,0 | 1,0,0)
    TorusPoint z = quarter_epsilon();
    z.q[3] = static_cast<std::uint8_t>((z.q[3] + 2) % 4);
    LambdaHat lh = lambda_hat(z);
    CHECK(lh.bits == std::array<std::uint8_t, 6>{0, 0, 0, 1, 0, 0});

    // bijection onto (Z/2)^6
    std::set<LambdaHat> values;
    for (const auto &p : fixed_points()) values.insert(lambda_hat(p));
    CHECK(values.size() == 64);

    // not defined away from the fixed locus
    TorusPoint bad;
    CHECK_THROWS_AS(lambda_hat(bad), std::invalid_argument);
}

TEST_CASE("gamma action on lambda-hat, exhaustively")
{
    // increments (e1,e2,0), (0,e2,e3), (e1,0,e3)
    LambdaHat zero;
    CHECK(gamma_action_on_lambda_hat(zero, 1).bits ==
          std::array<std::uint8_t, 6>{1, 1, 0, 0, 0, 0});
    CHECK(gamma_action_on_lambda_hat(zero, 2).bits ==
          std::array<std::uint8_t, 6>{0, 1, 1, 0, 0, 0});
    CHECK(gamma_action_on_lambda_hat(zero, 3).bits ==
          std::array<std::uint8_t, 6>{1, 0, 1, 0, 0, 0});

    // applying the same generator twice returns lambda-hat (2-torsion)
    for (int i = 1; i <= 3; ++i)
        CHECK(gamma_action_on_lambda_hat(gamma_action_on_lambda_hat(zero, i), i) == zero);

    // all 64 x 3 cases: lambda_hat(gamma_i z) = action_i(lambda_hat(z))
    int cases = 0;
    for (const auto &z : fixed_points())
        for (int i = 1; i <= 3; ++i) {
            CHECK(lambda_hat(apply_gamma(z, i)) ==
                  gamma_action_on_lambda_hat(lambda_hat(z), i));
            ++cases;
        }
    CHECK(cases == 192);

    // composite action of gamma1 gamma2 adds (e1,0,e3), the gamma3 increment
    for (const auto &z : fixed_points()) {
        LambdaHat via_points = lambda_hat(apply_gamma(apply_gamma(z, 2), 1));
        LambdaHat via_action =
            gamma_action_on_lambda_hat(gamma_action_on_lambda_hat(lambda_hat(z), 2), 1);
        CHECK(via_points == via_action);
        CHECK(via_points == gamma_action_on_lambda_hat(lambda_hat(z), 3));
    }

    CHECK_THROWS_AS(gamma_action_on_lambda_hat(zero, 0), std::invalid_argument);
}

TEST_CASE("fixed point check for gamma1 gamma2 gamma3 t_lambda")
{
    TorusPoint z = quarter_epsilon();

    LatticeVector zero;
    CHECK(fixed_point_check(zero, z));

    // lambda = e1: gamma(z) = z - e1 on the cover, no exact fixed point over z
    CHECK_FALSE(fixed_point_check(LatticeVector::basis(0), z));

    // lambda = 2 e1' lies in 2 Lambda
    LatticeVector two_e1p;
    two_e1p.c[3] = 2;
    CHECK(fixed_point_check(two_e1p, z));

    // invariance under lambda -> lambda + 2 lambda'
    for (const auto &p : fixed_points())
        for (int slot = 0; slot < 6; ++slot) {
            LatticeVector l = LatticeVector::basis(slot);
            LatticeVector l2 = l + l + l; // l + 2l
            CHECK(fixed_point_check(l, p) == fixed_point_check(l2, p));
        }

    // replacing the representative z by z + lambda' in C^3 replaces the
    // exact lambda-hat by lambda-hat + 2 lambda'; checked with integer
    // quarter-coordinates, lambda-hat = 2z - epsilon/2
    for (const auto &p : fixed_points()) {
        LambdaHat lh = lambda_hat(p);
        std::array<BigInt, 6> zq; // exact quarter-numerators of a representative
        TorusPoint eps = quarter_epsilon();
        for (int j = 0; j < 6; ++j) zq[j] = BigInt(eps.q[j]) + 2 * BigInt(lh.bits[j]);
        for (int slot = 0; slot < 6; ++slot) {
            std::array<BigInt, 6> shifted = zq;
            shifted[slot] += 4; // + lambda' with lambda' = e_slot
            for (int j = 0; j < 6; ++j) {
                BigInt lam_hat_j = (2 * shifted[j] - 2 * BigInt(eps.q[j])) / 4;
                BigInt expect = BigInt(lh.bits[j]) + (j == slot ? 2 : 0);
                CHECK(lam_hat_j == expect);
            }
        }
    }

    // z not in the fixed locus: never a fixed point
    TorusPoint off;
    CHECK_FALSE(fixed_point_check(zero, off));
}
