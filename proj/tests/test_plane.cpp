#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "burniat/arrangement_io.hpp"
#include "burniat/fixtures.hpp"
#include "burniat/plane.hpp"

using namespace burniat;

namespace {

// random unimodular change of coordinates together with its exact inverse
struct ProjChange {
    std::array<std::array<BigInt, 3>, 3> m, minv;
};

ProjChange random_unimodular(std::mt19937 &rng)
{
    ProjChange t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            t.m[i][j] = i == j;
            t.minv[i][j] = i == j;
        }
    std::uniform_int_distribution<int> row(0, 2), coef(-2, 2);
    for (int step = 0; step < 8; ++step) {
        int i = row(rng), j = row(rng);
        int c = coef(rng);
        if (i == j || c == 0) continue;
        // m <- E m with E = (row_i += c row_j); minv <- minv E^-1
        for (int k = 0; k < 3; ++k) t.m[i][k] += c * t.m[j][k];
        for (int k = 0; k < 3; ++k) t.minv[k][j] -= c * t.minv[k][i];
    }
    return t;
}

BurniatArrangement transform(const BurniatArrangement &arr, const ProjChange &t)
{
    BurniatArrangement out;
    for (int p = 0; p < 3; ++p) {
        std::array<BigRat, 3> v{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) v[i] += BigRat(t.m[i][j]) * arr.base[p].h[j];
        out.base[p] = ProjPoint(v[0], v[1], v[2]);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::array<BigRat, 3> v{};
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) v[a] += arr.d[i][j].c[b] * BigRat(t.minv[b][a]);
            out.d[i][j] = ProjLine(v[0], v[1], v[2]);
        }
    return out;
}

} // namespace

TEST_CASE("exact projective primitives")
{
    ProjLine l1(0, 0, 1), l2(0, 1, 0);
    CHECK(meet(l1, l2) == ProjPoint(1, 0, 0));
    CHECK_THROWS_AS(meet(l1, ProjLine(0, 0, 7)), std::invalid_argument);

    // canonical scaling makes rescaled data identical
    CHECK(ProjLine(2, 4, 6) == ProjLine(BigRat(1, 3), BigRat(2, 3), 1));
    CHECK(ProjPoint(0, 5, 10) == ProjPoint(0, 1, 2));

    ProjPoint a(1, 0, 0), b(0, 1, 0);
    CHECK(join(a, b) == ProjLine(0, 0, 1));
    CHECK(collinear(a, b, ProjPoint(1, 1, 0)));
    CHECK_FALSE(collinear(a, b, ProjPoint(1, 1, 1)));
}

TEST_CASE("validation")
{
    for (int k : {6, 5, 3, 2}) {
        auto arr = reference_arrangement(k);
        CHECK_MESSAGE(validate(arr).ok(), "K^2 = ", k);
    }
    CHECK(validate(reference_arrangement(4, true)).ok());
    CHECK(validate(reference_arrangement(4, false)).ok());

    // duplicated D_{1,2} = D_{1,3}
    auto dup = reference_arrangement(6);
    dup.d[0][2] = dup.d[0][1];
    Report r = validate(dup);
    CHECK_FALSE(r.ok());
    bool line_check_failed = false;
    for (const auto &c : r.checks)
        if (c.name == "all nine lines distinct" && !c.pass) line_check_failed = true;
    CHECK(line_check_failed);

    // collinear base points
    auto bad = reference_arrangement(6);
    bad.base[2] = ProjPoint(1, 1, 0);
    CHECK_FALSE(validate(bad).ok());
    CHECK_THROWS_AS(triple_points(bad), std::invalid_argument);
}

TEST_CASE("triple points and classification of the reference arrangements")
{
    CHECK(triple_points(reference_arrangement(6)).empty());

    auto t5 = triple_points(reference_arrangement(5));
    REQUIRE(t5.size() == 1);
    CHECK(t5[0].location == ProjPoint(1, 6, 3));
    CHECK(t5[0].lines == std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}});

    CHECK(triple_points(reference_arrangement(4, false)).size() == 2);
    CHECK(triple_points(reference_arrangement(4, true)).size() == 2);
    CHECK(triple_points(reference_arrangement(3)).size() == 3);
    CHECK(triple_points(reference_arrangement(2)).size() == 4);

    auto c6 = classify(reference_arrangement(6));
    CHECK(c6.k_squared == 6);
    CHECK(c6.kind == BurniatKind::Primary);

    auto c5 = classify(reference_arrangement(5));
    CHECK(c5.k_squared == 5);
    CHECK(c5.kind == BurniatKind::Secondary);

    auto c4n = classify(reference_arrangement(4, true));
    CHECK(c4n.k_squared == 4);
    CHECK(c4n.kind == BurniatKind::Secondary);
    CHECK(c4n.nodal);

    auto c4 = classify(reference_arrangement(4, false));
    CHECK(c4.k_squared == 4);
    CHECK_FALSE(c4.nodal);

    auto c3 = classify(reference_arrangement(3));
    CHECK(c3.k_squared == 3);
    CHECK(c3.kind == BurniatKind::Tertiary);

    auto c2 = classify(reference_arrangement(2));
    CHECK(c2.k_squared == 2);
    CHECK(c2.kind == BurniatKind::Tertiary);
}

TEST_CASE("classification is invariant under projective changes of coordinates")
{
    std::mt19937 rng(99);
    for (int k : {6, 5, 4, 3, 2}) {
        for (bool nodal : {false, true}) {
            if (k != 4 && nodal) continue;
            auto arr = reference_arrangement(k, nodal);
            auto base = classify(arr);
            for (int it = 0; it < 6; ++it) {
                auto tr = transform(arr, random_unimodular(rng));
                CHECK(validate(tr).ok());
                auto cls = classify(tr);
                CHECK(cls.k_squared == base.k_squared);
                CHECK(cls.kind == base.kind);
                CHECK(cls.nodal == base.nodal);
                CHECK(triple_points(tr).size() == static_cast<std::size_t>(base.m));
            }
        }
    }
}

TEST_CASE("lambda-hat difference vectors from incidence")
{
    using V3 = std::array<int, 3>;
    auto v2 = lambda_hat_differences(reference_arrangement(2));
    CHECK(v2 == std::vector<V3>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

    auto v3 = lambda_hat_differences(reference_arrangement(3));
    CHECK(v3 == std::vector<V3>{{0, 1, 1}, {1, 0, 1}});

    // K^2 = 4: the claim is only that the vector is nonzero
    auto v4 = lambda_hat_differences(reference_arrangement(4, false));
    REQUIRE(v4.size() == 1);
    CHECK(v4[0] != V3{0, 0, 0});
    auto v4n = lambda_hat_differences(reference_arrangement(4, true));
    REQUIRE(v4n.size() == 1);
    CHECK(v4n[0] != V3{0, 0, 0});
    // nodal: the shared branch line kills exactly the shared color bit
    CHECK(v4n[0] == V3{0, 1, 1});
    CHECK(v4[0] == V3{1, 1, 1});

    CHECK_THROWS_AS(lambda_hat_differences(reference_arrangement(5)), std::invalid_argument);
    CHECK_THROWS_AS(lambda_hat_differences(reference_arrangement(6)), std::invalid_argument);
}

TEST_CASE("bidouble cover equations")
{
    auto sys = bidouble_equations(reference_arrangement(6));
    CHECK(sys.equations.size() == 6);
    for (int i = 0; i < 3; ++i) CHECK(sys.delta[i].total_degree() == 3);
    CHECK(sys.exceptional == std::array<int, 3>{3, 1, 2});
    for (const auto &c : sys.consistency.checks)
        CHECK_MESSAGE(c.pass, c.name);

    // the displayed pattern
    CHECK(sys.equations[0].lhs == "u1 u2");
    CHECK(sys.equations[0].rhs == "delta1 u3");
    CHECK(sys.equations[1].lhs == "u1^2");
    CHECK(sys.equations[1].rhs == "delta3 delta1");
}

TEST_CASE("singularity descriptor at a (1,1,1) point")
{
    auto arr = reference_arrangement(5);
    auto tps = triple_points(arr);
    REQUIRE(tps.size() == 1);
    auto s = singularity_type(arr, tps[0]);
    CHECK(s.type == "quarter(1,1)");
    CHECK(s.local_relation == "w3^2 = w1^2 - w2^2");
    for (int i = 0; i < 3; ++i) CHECK(s.scales[i] != 0);

    // two lines of the same color is not a (1,1,1) point
    TriplePoint fake;
    fake.location = tps[0].location;
    fake.lines = {{1, 2}, {1, 3}, {2, 2}};
    CHECK_THROWS_AS(singularity_type(arr, fake), std::invalid_argument);
}

TEST_CASE("campedelli structure of the K^2 = 2 arrangement")
{
    auto rep = campedelli_check(reference_arrangement(2));
    for (const auto &c : rep.checks)
        CHECK_MESSAGE(c.pass, c.name);

    CHECK_THROWS_AS(campedelli_check(reference_arrangement(3)), std::invalid_argument);

    // tautological cover equations for an assignment of the seven lines
    std::array<int, 7> assignment = {1, 2, 3, 4, 5, 6, 7};
    auto eqs = campedelli_cover_equations(assignment);
    CHECK(eqs.size() == 21); // unordered pairs of distinct nontrivial characters
    for (const auto &e : eqs) {
        CHECK(e.chi_sum == (e.chi ^ e.chi_prime));
        CHECK(e.chi_sum != 0);
        // two independent linear conditions leave exactly two of the seven lines
        CHECK(e.line_labels.size() == 2);
    }
    CHECK_THROWS_AS(campedelli_cover_equations({1, 1, 2, 3, 4, 5, 6}),
                    std::invalid_argument);
}

TEST_CASE("arrangement JSON round trip and errors")
{
    for (int k : {6, 5, 4, 3, 2}) {
        auto arr = reference_arrangement(k);
        auto text = arrangement_to_json(arr);
        auto back = parse_arrangement(text);
        CHECK(back.base == arr.base);
        CHECK(back.d == arr.d);
        // serialization is byte-stable
        CHECK(arrangement_to_json(back) == text);
    }

    CHECK_THROWS_WITH_AS(parse_arrangement("{}"),
                         "arrangement: missing field 'base_points'",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_arrangement("not json"), std::invalid_argument);

    // field-located errors
    try {
        parse_arrangement(R"({"base_points": [[[1,1],[0,1],[0,1]],
                                              [[0,1],[1,1],[0,1]],
                                              [[0,1],[0,1],[1,0]]],
                              "lines": {}})");
        CHECK(false);
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("base_points[2][2]") != std::string::npos);
    }
}
