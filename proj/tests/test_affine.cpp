#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "burniat/affine.hpp"

using namespace burniat;

namespace {

AffineMap random_word_map(std::mt19937 &rng, const std::vector<AffineMap> &gens, int len)
{
    std::uniform_int_distribution<int> pick(1, static_cast<int>(gens.size()));
    std::uniform_int_distribution<int> sgn(0, 1);
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(sgn(rng) ? pick(rng) : -pick(rng));
    return evaluate_word(w, gens);
}

} // namespace

TEST_CASE("generator construction")
{
    GammaSystem gs = build_gamma();

    // gamma1 applied to symbolic z gives (z1 + e1/2, -z2, z3)
    CHECK(gs.gamma[0].linear.s == std::array<int, 3>{1, -1, 1});
    CHECK(gs.gamma[0].translation.num == std::array<BigInt, 6>{1, 0, 0, 0, 0, 0});
    CHECK(gs.gamma[1].linear.s == std::array<int, 3>{1, 1, -1});
    CHECK(gs.gamma[1].translation.num[1] == 1);
    CHECK(gs.gamma[2].linear.s == std::array<int, 3>{-1, 1, 1});
    CHECK(gs.gamma[2].translation.num[2] == 1);

    // identity from gamma1 composed with its inverse
    CHECK(gs.gamma[0].compose(gs.gamma[0].inverse()).is_identity());

    // gamma_i^2 = t_{e_i}
    for (int i = 0; i < 3; ++i)
        CHECK(gs.gamma[i].compose(gs.gamma[i]) == gs.lattice[i]);

    // gamma1 gamma2 gamma3 is the affine involution -z + (e1 - e2 - e3)/2
    AffineMap g123 = gs.gamma123();
    CHECK(g123.linear.s == std::array<int, 3>{-1, -1, -1});
    CHECK(g123.translation.num == std::array<BigInt, 6>{1, -1, -1, 0, 0, 0});
    CHECK(g123.compose(g123).is_identity());
}

TEST_CASE("relation suite")
{
    Report rep = verify_relations();
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name);
    CHECK(rep.ok());

    // anticommutation where the paper has a twisted relation
    GammaSystem gs = build_gamma();
    CHECK_FALSE(commutes(gs.gamma[0], gs.lattice[1]));
    CHECK(gs.gamma[0].compose(gs.lattice[1]) ==
          gs.lattice[1].inverse().compose(gs.gamma[0]));
}

TEST_CASE("presentation relators evaluate to the identity")
{
    GammaSystem gs = build_gamma();
    auto ga = gs.group_generators();
    std::vector<AffineMap> gens(ga.begin(), ga.end());
    Presentation p = gamma_presentation();
    CHECK(p.generator_names.size() == 6);
    Report rep = verify_presentation(p, gens);
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("composition is associative on random words")
{
    GammaSystem gs = build_gamma();
    auto ga = gs.group_generators();
    std::vector<AffineMap> gens(ga.begin(), ga.end());
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len(0, 6);
    for (int it = 0; it < 200; ++it) {
        AffineMap a = random_word_map(rng, gens, len(rng));
        AffineMap b = random_word_map(rng, gens, len(rng));
        AffineMap c = random_word_map(rng, gens, len(rng));
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    }
}

TEST_CASE("generator pairs: commute or twist by a lattice basis translation")
{
    GammaSystem gs = build_gamma();
    std::vector<AffineMap> all = {gs.gamma[0], gs.gamma[1], gs.gamma[2]};
    for (const auto &t : gs.lattice) all.push_back(t);

    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b) {
            if (a == b) continue;
            const AffineMap gh = all[a].compose(all[b]);
            const AffineMap hg = all[b].compose(all[a]);
            if (gh == hg) continue;
            // gh = t_lambda hg, with lambda = +-e_i for a gamma-gamma pair and
            // +-2e_i (from gamma t gamma^-1 = t^-1) for a twisted lattice pair
            bool matched = false;
            for (int slot = 0; slot < 6 && !matched; ++slot)
                for (int scale : {1, -1, 2, -2}) {
                    LatticeVector v = LatticeVector::basis(slot);
                    for (int j = 0; j < 6; ++j) v.c[j] *= scale;
                    if (gh == AffineMap::pure_translation(v).compose(hg)) {
                        matched = true;
                        bool gamma_pair = a < 3 && b < 3;
                        CHECK((gamma_pair ? (scale == 1 || scale == -1)
                                          : (scale == 2 || scale == -2)));
                        break;
                    }
                }
            CHECK_MESSAGE(matched, "pair ", a, ",", b);
        }
}

TEST_CASE("quotient map to (Z/2)^3 kills the lattice")
{
    GammaSystem gs = build_gamma();
    auto ga = gs.group_generators();
    std::vector<AffineMap> gens(ga.begin(), ga.end());
    std::mt19937 rng(77);

    // homomorphism property of the gamma-parity map on random pairs
    for (int it = 0; it < 200; ++it) {
        AffineMap a = random_word_map(rng, gens, 6);
        AffineMap b = random_word_map(rng, gens, 6);
        auto pa = gamma_parity(a), pb = gamma_parity(b), pab = gamma_parity(a.compose(b));
        for (int i = 0; i < 3; ++i) CHECK(pab[i] == (pa[i] + pb[i]) % 2);
    }
    // kernel contains the lattice
    for (const auto &t : gs.lattice)
        CHECK(gamma_parity(t) == std::array<int, 3>{0, 0, 0});
    // words evaluating into the lattice have trivial parity: t_{e2} = g2^2
    std::vector<AffineMap> gg = {gs.gamma[0], gs.gamma[1], gs.gamma[2],
                                 gs.lattice[3], gs.lattice[4], gs.lattice[5]};
    AffineMap w = evaluate_word({2, 2}, gg);
    CHECK(w.is_translation());
    CHECK(gamma_parity(w) == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("abelianization of the full group")
{
    AbelianInvariants inv = gamma_abelianization();
    CHECK(inv.free_rank == 0);
    CHECK(inv.is_elementary_abelian_2(6));

    Report rep = gamma_abelianization_report();
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name, ": ", c.detail);

    // sanity: dropping the gamma-gamma commutator relations keeps free rank
    auto reduced = abelian_invariants(
        gamma_relation_matrix(GammaRelations::DropGammaCommutators), 9);
    CHECK(reduced.free_rank >= 1);

    // relator order does not matter: shuffle rows and recompute
    IntMatrix m = gamma_relation_matrix();
    std::mt19937 rng(5);
    for (int it = 0; it < 10; ++it) {
        IntMatrix p(0, m.cols());
        std::vector<std::size_t> order(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) order[r] = r;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t r : order) {
            std::vector<BigInt> row(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(r, j);
            p.append_row(row);
        }
        CHECK(abelian_invariants(p, 9) == gamma_abelianization());
    }
}

TEST_CASE("index-two subgroups")
{
    GammaSystem gs = build_gamma();
    auto g3 = index2_subgroup(3);

    // contains gamma1 and gamma3 but not gamma2
    auto contains = [&](const AffineMap &m) {
        for (const auto &g : g3)
            if (g == m) return true;
        return false;
    };
    CHECK(contains(gs.gamma[0]));
    CHECK(contains(gs.gamma[2]));
    CHECK_FALSE(contains(gs.gamma[1]));

    // each subgroup recovers the full lattice: e_i = gamma_i^2
    for (int i = 1; i <= 3; ++i) {
        auto sub = index2_subgroup(i);
        std::vector<AffineMap> gens(sub.begin(), sub.end());
        gens.push_back(sub[0].compose(sub[0])); // e_i
        gens.push_back(sub[2].compose(sub[2])); // e_{i+1}
        for (int slot = 0; slot < 6; ++slot) {
            bool found = false;
            AffineMap t = AffineMap::pure_translation(LatticeVector::basis(slot));
            for (const auto &g : gens) found = found || g == t;
            CHECK_MESSAGE(found, "subgroup ", i, " lattice slot ", slot);
        }
    }

    // index check by enumeration in the 8-element quotient (Z/2)^3:
    // the span of the generator images has order 4, so index 2
    for (int i = 1; i <= 3; ++i) {
        auto sub = index2_subgroup(i);
        std::set<std::array<int, 3>> span = {{0, 0, 0}};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto &g : sub)
                for (auto v : std::set<std::array<int, 3>>(span)) {
                    auto p = gamma_parity(g);
                    std::array<int, 3> w{(v[0] + p[0]) % 2, (v[1] + p[1]) % 2,
                                         (v[2] + p[2]) % 2};
                    grew = span.insert(w).second || grew;
                }
        }
        CHECK(span.size() == 4);
    }

    CHECK_THROWS_AS(index2_subgroup(0), std::invalid_argument);
    CHECK_THROWS_AS(index2_subgroup(4), std::invalid_argument);
}

TEST_CASE("subgroup abelianizations")
{
    AbelianInvariants expected;
    expected.free_rank = 2;
    expected.torsion = {2, 2, 2, 2};

    for (int i = 1; i <= 3; ++i) {
        CHECK(subgroup_abelianization(i) == expected);
        Report rep = subgroup_abelianization_report(i);
        for (const auto &c : rep.checks)
            CHECK_MESSAGE(c.pass, "subgroup ", i, ": ", c.name);
    }
    // all three have the same invariants
    CHECK(subgroup_abelianization(1) == subgroup_abelianization(2));
    CHECK(subgroup_abelianization(2) == subgroup_abelianization(3));
}
