#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "burniat/poly.hpp"
#include "burniat/rational.hpp"
#include "burniat/report.hpp"

namespace burniat {

// Projective point with exact rational coordinates in canonical scaling:
// first nonzero coordinate equal to 1.
struct ProjPoint {
    std::array<BigRat, 3> h{};

    ProjPoint() = default;
    ProjPoint(BigRat a, BigRat b, BigRat c);

    bool operator==(const ProjPoint &o) const { return h == o.h; }
    bool operator<(const ProjPoint &o) const { return h < o.h; }
    std::string to_string() const;
};

// Projective line (coefficients of l0 y1 + l1 y2 + l2 y3), same scaling.
struct ProjLine {
    std::array<BigRat, 3> c{};

    ProjLine() = default;
    ProjLine(BigRat a, BigRat b, BigRat cc);

    bool contains(const ProjPoint &p) const;
    bool operator==(const ProjLine &o) const { return c == o.c; }
    std::string to_string() const;
};

ProjPoint meet(const ProjLine &a, const ProjLine &b); // throws if equal
ProjLine join(const ProjPoint &a, const ProjPoint &b); // throws if equal
bool collinear(const ProjPoint &a, const ProjPoint &b, const ProjPoint &p);

// Nine labeled lines D_{i,j} (i = color 1..3, j = 1..3) with base points
// P1, P2, P3; D_{i,1} joins P_i and P_{i+1}, D_{i,2}, D_{i,3} pass through
// P_i only.
struct BurniatArrangement {
    std::array<ProjPoint, 3> base;
    std::array<std::array<ProjLine, 3>, 3> d; // d[i][j] = D_{i+1, j+1}

    const ProjLine &line(int i, int j) const { return d[i - 1][j - 1]; } // 1-based
};

Report validate(const BurniatArrangement &arr);

// A point of multiplicity >= 3 of the nine-line divisor away from the base
// points; for valid arrangements these are exactly the (1,1,1) points.
struct TriplePoint {
    ProjPoint location;
    std::vector<std::pair<int, int>> lines; // 1-based (i, j) labels
};

std::vector<TriplePoint> triple_points(const BurniatArrangement &arr);

enum class BurniatKind { Primary, Secondary, Tertiary };

struct BurniatClass {
    int k_squared = 6;
    BurniatKind kind = BurniatKind::Primary;
    int m = 0; // number of triple points
    bool nodal = false;

    std::string to_string() const;
};

BurniatClass classify(const BurniatArrangement &arr);

// For each pair (first triple point, later triple point), the image of the
// lambda-hat difference in + e_i' Z/2: bit k is 0 iff both points lie on a
// common branch line through P_k.  Triple points are ordered by their
// incident line labels.
std::vector<std::array<int, 3>> lambda_hat_differences(const BurniatArrangement &arr);

// Bidouble cover data: the six equations u_i u_{i+1} = delta_i u_{i+2},
// u_i^2 = delta_{i-1} delta_i with delta_i the cubic product of the D_i
// line forms, plus the divisor bookkeeping over (L, E1, E2, E3).
struct BidoubleSystem {
    std::array<Poly, 3> delta;          // cubic forms
    std::array<int, 3> exceptional;     // the E_{i+2} label carried by D_i
    struct Equation {
        std::string lhs, rhs;
        Poly rhs_form; // the delta-part of the right-hand side
    };
    std::vector<Equation> equations;                  // six of them
    std::array<std::array<int, 4>, 3> script_l;       // L_i over (L, E1, E2, E3)
    Report consistency;
};

BidoubleSystem bidouble_equations(const BurniatArrangement &arr);

// Local model of a (1,1,1) point: quotient singularity of type 1/4 (1,1).
struct SingularityDescriptor {
    std::string type;                       // "quarter(1,1)"
    std::array<std::array<BigRat, 3>, 3> chart; // rational change of coordinates
    std::array<BigRat, 3> scales;           // c_i with c1 l1 - c2 l2 - c3 l3 = 0
    std::string local_relation;             // "w3^2 = w1^2 - w2^2"
};

SingularityDescriptor singularity_type(const BurniatArrangement &arr, const TriplePoint &tp);

// Verifies the seven-line structure induced by a K^2 = 2 arrangement: the
// four (1,1,1) points form a complete quadrangle whose six sides are the
// D_{i,j>=2} lines and whose diagonal triangle is P1 P2 P3, every D_{i,1}
// avoids the (1,1,1) points, and the proper transform of D_{i,1} meets
// exactly the two contracted lines of one other color.
Report campedelli_check(const BurniatArrangement &arr);

// Tautological (Z/2)^3 cover equations for seven labeled lines: one
// equation per unordered pair of distinct nontrivial characters.
struct CampedelliCoverEquation {
    int chi, chi_prime, chi_sum;  // characters as nonzero bitmasks 1..7
    std::vector<int> line_labels; // group elements nu with chi(nu) = chi'(nu) = 1
};

std::vector<CampedelliCoverEquation>
campedelli_cover_equations(const std::array<int, 7> &line_assignment);

} // namespace burniat
