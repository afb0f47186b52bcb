#include "burniat/plane.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burniat {

namespace {

std::array<BigRat, 3> scale_first_nonzero(std::array<BigRat, 3> v, const char *what)
{
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (v[i] != 0) {
            lead = i;
            break;
        }
    if (lead < 0) throw std::invalid_argument(std::string(what) + ": all coordinates zero");
    BigRat d = v[lead];
    for (int i = 0; i < 3; ++i) v[i] /= d;
    return v;
}

std::string triple_to_string(const std::array<BigRat, 3> &v, char l, char r)
{
    std::ostringstream os;
    os << l;
    for (int i = 0; i < 3; ++i) os << (i ? " : " : "") << v[i];
    os << r;
    return os.str();
}

} // namespace

ProjPoint::ProjPoint(BigRat a, BigRat b, BigRat c)
{
    h = scale_first_nonzero({std::move(a), std::move(b), std::move(c)}, "ProjPoint");
}

std::string ProjPoint::to_string() const
{
    return triple_to_string(h, '(', ')');
}

ProjLine::ProjLine(BigRat a, BigRat b, BigRat cc)
{
    c = scale_first_nonzero({std::move(a), std::move(b), std::move(cc)}, "ProjLine");
}

bool ProjLine::contains(const ProjPoint &p) const
{
    return c[0] * p.h[0] + c[1] * p.h[1] + c[2] * p.h[2] == 0;
}

std::string ProjLine::to_string() const
{
    return triple_to_string(c, '[', ']');
}

ProjPoint meet(const ProjLine &a, const ProjLine &b)
{
    std::array<BigRat, 3> x = {a.c[1] * b.c[2] - a.c[2] * b.c[1],
                               a.c[2] * b.c[0] - a.c[0] * b.c[2],
                               a.c[0] * b.c[1] - a.c[1] * b.c[0]};
    if (x[0] == 0 && x[1] == 0 && x[2] == 0)
        throw std::invalid_argument("meet: lines coincide");
    return ProjPoint(x[0], x[1], x[2]);
}

ProjLine join(const ProjPoint &a, const ProjPoint &b)
{
    std::array<BigRat, 3> x = {a.h[1] * b.h[2] - a.h[2] * b.h[1],
                               a.h[2] * b.h[0] - a.h[0] * b.h[2],
                               a.h[0] * b.h[1] - a.h[1] * b.h[0]};
    if (x[0] == 0 && x[1] == 0 && x[2] == 0)
        throw std::invalid_argument("join: points coincide");
    return ProjLine(x[0], x[1], x[2]);
}

bool collinear(const ProjPoint &a, const ProjPoint &b, const ProjPoint &p)
{
    BigRat det = a.h[0] * (b.h[1] * p.h[2] - b.h[2] * p.h[1]) -
                 a.h[1] * (b.h[0] * p.h[2] - b.h[2] * p.h[0]) +
                 a.h[2] * (b.h[0] * p.h[1] - b.h[1] * p.h[0]);
    return det == 0;
}

Report validate(const BurniatArrangement &arr)
{
    Report rep;

    bool distinct_base = !(arr.base[0] == arr.base[1]) && !(arr.base[1] == arr.base[2]) &&
                         !(arr.base[0] == arr.base[2]);
    rep.add("base points pairwise distinct", distinct_base);
    rep.add("base points not collinear",
            distinct_base && !collinear(arr.base[0], arr.base[1], arr.base[2]));

    bool distinct = true;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            if (arr.d[a / 3][a % 3] == arr.d[b / 3][b % 3]) distinct = false;
    rep.add("all nine lines distinct", distinct);

    for (int i = 1; i <= 3; ++i) {
        const int inext = i % 3 + 1;
        rep.add("D_" + std::to_string(i) + ",1 joins P_" + std::to_string(i) + " and P_" +
                    std::to_string(inext),
                arr.line(i, 1).contains(arr.base[i - 1]) &&
                    arr.line(i, 1).contains(arr.base[inext - 1]));
        for (int j = 2; j <= 3; ++j) {
            std::string nm = "D_" + std::to_string(i) + "," + std::to_string(j);
            rep.add(nm + " passes through P_" + std::to_string(i),
                    arr.line(i, j).contains(arr.base[i - 1]));
            bool off_others = true;
            for (int k = 1; k <= 3; ++k)
                if (k != i && arr.line(i, j).contains(arr.base[k - 1])) off_others = false;
            rep.add(nm + " avoids the other base points", off_others);
        }
    }
    return rep;
}

std::vector<TriplePoint> triple_points(const BurniatArrangement &arr)
{
    if (!validate(arr).ok())
        throw std::invalid_argument("triple_points: invalid arrangement");

    std::map<ProjPoint, std::set<std::pair<int, int>>> through;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b) {
            const ProjLine &la = arr.d[a / 3][a % 3];
            const ProjLine &lb = arr.d[b / 3][b % 3];
            ProjPoint p = meet(la, lb);
            through[p].insert({a / 3 + 1, a % 3 + 1});
            through[p].insert({b / 3 + 1, b % 3 + 1});
        }

    std::vector<TriplePoint> out;
    for (const auto &[p, label_set] : through) {
        if (label_set.size() < 3) continue;
        bool is_base = p == arr.base[0] || p == arr.base[1] || p == arr.base[2];
        if (is_base) continue;
        if (label_set.size() > 3)
            throw std::invalid_argument(
                "triple_points: external point of multiplicity > 3 at " + p.to_string());
        TriplePoint tp;
        tp.location = p;
        tp.lines.assign(label_set.begin(), label_set.end());
        out.push_back(tp);
    }
    std::sort(out.begin(), out.end(), [](const TriplePoint &a, const TriplePoint &b) {
        return a.lines < b.lines;
    });
    return out;
}

std::string BurniatClass::to_string() const
{
    std::ostringstream os;
    switch (kind) {
    case BurniatKind::Primary: os << "primary"; break;
    case BurniatKind::Secondary: os << "secondary(" << m << ")"; break;
    case BurniatKind::Tertiary: os << "tertiary(" << m << ")"; break;
    }
    os << ", K^2 = " << k_squared;
    if (k_squared == 4) os << (nodal ? ", nodal" : ", non-nodal");
    return os.str();
}

BurniatClass classify(const BurniatArrangement &arr)
{
    auto tps = triple_points(arr);
    const int m = static_cast<int>(tps.size());
    if (m > 4)
        throw std::invalid_argument("classify: more than 4 triple points, "
                                    "not a Burniat configuration");
    BurniatClass cls;
    cls.m = m;
    cls.k_squared = 6 - m;
    cls.kind = m == 0 ? BurniatKind::Primary
                      : (m <= 2 ? BurniatKind::Secondary : BurniatKind::Tertiary);

    if (cls.k_squared == 4) {
        // nodal iff three points of multiplicity >= 3 of the total divisor
        // (the base points included) are collinear
        std::vector<ProjPoint> pts = {arr.base[0], arr.base[1], arr.base[2]};
        for (const auto &tp : tps) pts.push_back(tp.location);
        for (std::size_t a = 0; a < pts.size() && !cls.nodal; ++a)
            for (std::size_t b = a + 1; b < pts.size() && !cls.nodal; ++b)
                for (std::size_t c = b + 1; c < pts.size() && !cls.nodal; ++c)
                    if (collinear(pts[a], pts[b], pts[c])) cls.nodal = true;
    }
    return cls;
}

namespace {

// The (1,1,1) structure of a triple point: for each color the unique
// incident line index j in {2, 3}.
std::array<int, 3> color_profile(const TriplePoint &tp)
{
    std::array<int, 3> prof{0, 0, 0};
    for (const auto &[i, j] : tp.lines) {
        if (prof[i - 1] != 0)
            throw std::invalid_argument("triple point has two lines of color " +
                                        std::to_string(i));
        prof[i - 1] = j;
    }
    for (int i = 0; i < 3; ++i) {
        if (prof[i] == 0)
            throw std::invalid_argument("triple point misses color " + std::to_string(i + 1));
        if (prof[i] == 1)
            throw std::logic_error("triple point on a D_{i,1} line");
    }
    return prof;
}

} // namespace

std::vector<std::array<int, 3>> lambda_hat_differences(const BurniatArrangement &arr)
{
    auto tps = triple_points(arr);
    if (tps.size() < 2)
        throw std::invalid_argument("lambda_hat_differences: fewer than 2 triple points");

    std::vector<std::pair<std::array<int, 3>, const TriplePoint *>> profs;
    for (const auto &tp : tps) profs.push_back({color_profile(tp), &tp});
    std::sort(profs.begin(), profs.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });

    std::vector<std::array<int, 3>> out;
    for (std::size_t j = 1; j < profs.size(); ++j) {
        std::array<int, 3> bits;
        for (int k = 0; k < 3; ++k)
            bits[k] = profs[0].first[k] == profs[j].first[k] ? 0 : 1;
        out.push_back(bits);
    }
    return out;
}

BidoubleSystem bidouble_equations(const BurniatArrangement &arr)
{
    if (!validate(arr).ok())
        throw std::invalid_argument("bidouble_equations: invalid arrangement");

    BidoubleSystem sys;
    std::array<Poly, 3> y = {Poly::variable("y1"), Poly::variable("y2"), Poly::variable("y3")};

    for (int i = 0; i < 3; ++i) {
        Poly d(1);
        for (int j = 0; j < 3; ++j) {
            const ProjLine &l = arr.d[i][j];
            Poly form;
            for (int k = 0; k < 3; ++k) form += Poly(BigRat(l.c[k])) * y[k];
            d *= form;
        }
        sys.delta[i] = d;
        sys.exceptional[i] = (i + 2) % 3 + 1; // D_i carries E_{i+2}
    }

    auto uname = [](int i) { return "u" + std::to_string(i + 1); };
    auto dname = [](int i) { return "delta" + std::to_string(i + 1); };
    for (int i = 0; i < 3; ++i) {
        BidoubleSystem::Equation mixed;
        mixed.lhs = uname(i) + " " + uname((i + 1) % 3);
        mixed.rhs = dname(i) + " " + uname((i + 2) % 3);
        mixed.rhs_form = sys.delta[i];
        sys.equations.push_back(mixed);
        BidoubleSystem::Equation square;
        square.lhs = uname(i) + "^2";
        square.rhs = dname((i + 2) % 3) + " " + dname(i);
        square.rhs_form = sys.delta[(i + 2) % 3] * sys.delta[i];
        sys.equations.push_back(square);
    }

    // script L_i = 3L - 2E_{i-1} - E_{i+1}; D_{i-1} + D_{i+1} = 2 script L_i
    auto class_D = [](int i) {
        std::array<int, 4> d{3, 0, 0, 0};
        d[1 + i] += -3;
        d[1 + (i + 1) % 3] += -1;
        d[1 + (i + 2) % 3] += 1;
        return d;
    };
    bool picard_ok = true;
    for (int i = 0; i < 3; ++i) {
        std::array<int, 4> li{3, 0, 0, 0};
        li[1 + (i + 2) % 3] = -2;
        li[1 + (i + 1) % 3] = -1;
        sys.script_l[i] = li;
        auto dm = class_D((i + 2) % 3), dp = class_D((i + 1) % 3);
        for (int k = 0; k < 4; ++k)
            if (dm[k] + dp[k] != 2 * li[k]) picard_ok = false;
    }
    sys.consistency.add("D_{i-1} + D_{i+1} = 2 L_i in Pic(Y) for all i", picard_ok);

    // product of the three square equations against the square of the
    // product of the three mixed equations
    Poly d123 = sys.delta[0] * sys.delta[1] * sys.delta[2];
    Poly square_product(1);
    for (int i = 0; i < 3; ++i) square_product *= sys.delta[(i + 2) % 3] * sys.delta[i];
    sys.consistency.add("product of u_i^2 equations equals (delta1 delta2 delta3)^2",
                        square_product == d123 * d123);
    std::array<Poly, 3> u = {Poly::variable("u1"), Poly::variable("u2"), Poly::variable("u3")};
    Poly mixed_lhs(1), mixed_rhs(1);
    for (int i = 0; i < 3; ++i) {
        mixed_lhs *= u[i] * u[(i + 1) % 3];
        mixed_rhs *= sys.delta[i] * u[(i + 2) % 3];
    }
    Poly u123 = u[0] * u[1] * u[2];
    sys.consistency.add("square of the mixed product matches the u_i^2 product",
                        mixed_lhs * mixed_lhs == u123 * u123 * u123 * u123 &&
                            mixed_rhs * mixed_rhs == square_product * u123 * u123);
    sys.consistency.add("equation count = 6", sys.equations.size() == 6);

    return sys;
}

SingularityDescriptor singularity_type(const BurniatArrangement &arr, const TriplePoint &tp)
{
    auto prof = color_profile(tp); // throws unless one line per color

    std::array<ProjLine, 3> l;
    for (int i = 0; i < 3; ++i) l[i] = arr.line(i + 1, prof[i]);

    // scalars with c1 l1 - c2 l2 - c3 l3 = 0: solve the 3x3 homogeneous
    // system with columns (l1, -l2, -l3) by elimination
    std::array<std::array<BigRat, 3>, 3> m;
    for (int row = 0; row < 3; ++row)
        m[row] = {l[0].c[row], -l[1].c[row], -l[2].c[row]};
    // eliminate to find the kernel vector
    std::array<int, 3> piv{-1, -1, -1};
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int p = -1;
        for (int r = rank; r < 3; ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        BigRat d = m[rank][col];
        for (int k = 0; k < 3; ++k) m[rank][k] /= d;
        for (int r = 0; r < 3; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            BigRat f = m[r][col];
            for (int k = 0; k < 3; ++k) m[r][k] -= f * m[rank][k];
        }
        piv[rank] = col;
        ++rank;
    }
    if (rank != 2)
        throw std::logic_error("singularity_type: concurrent lines have rank != 2");
    int free_col = 3 - piv[0] - piv[1];
    std::array<BigRat, 3> c;
    c[free_col] = 1;
    for (int r = 0; r < rank; ++r) c[piv[r]] = -m[r][free_col];
    for (int i = 0; i < 3; ++i)
        if (c[i] == 0)
            throw std::logic_error("singularity_type: degenerate scaling coefficient");

    // verify the normalization c1 l1 = c2 l2 + c3 l3 exactly
    for (int k = 0; k < 3; ++k)
        if (c[0] * l[0].c[k] - c[1] * l[1].c[k] - c[2] * l[2].c[k] != 0)
            throw std::logic_error("singularity_type: scaling equation fails");

    SingularityDescriptor out;
    out.type = "quarter(1,1)";
    out.scales = c;
    out.local_relation = "w3^2 = w1^2 - w2^2";

    // chart rows: scaled germs of l1, l2 and a form not vanishing at tp,
    // sending the germs to x, y (and hence l3 to x - y) and tp to (0:0:1)
    int zrow = 0;
    while (tp.location.h[zrow] == 0) ++zrow;
    for (int k = 0; k < 3; ++k) {
        out.chart[0][k] = c[0] * l[0].c[k];
        out.chart[1][k] = c[1] * l[1].c[k];
        out.chart[2][k] = k == zrow ? BigRat(1) : BigRat(0);
    }
    BigRat det = out.chart[0][0] * (out.chart[1][1] * out.chart[2][2] - out.chart[1][2] * out.chart[2][1]) -
                 out.chart[0][1] * (out.chart[1][0] * out.chart[2][2] - out.chart[1][2] * out.chart[2][0]) +
                 out.chart[0][2] * (out.chart[1][0] * out.chart[2][1] - out.chart[1][1] * out.chart[2][0]);
    if (det == 0) throw std::logic_error("singularity_type: chart is singular");
    return out;
}

Report campedelli_check(const BurniatArrangement &arr)
{
    BurniatClass cls = classify(arr);
    if (cls.k_squared != 2)
        throw std::invalid_argument("campedelli_check: arrangement has K^2 = " +
                                    std::to_string(cls.k_squared) + ", need 2");
    Report rep;
    auto tps = triple_points(arr);
    rep.add("four (1,1,1) points", tps.size() == 4);

    // general position
    bool general = true;
    for (std::size_t a = 0; a < tps.size(); ++a)
        for (std::size_t b = a + 1; b < tps.size(); ++b)
            for (std::size_t c = b + 1; c < tps.size(); ++c)
                if (collinear(tps[a].location, tps[b].location, tps[c].location))
                    general = false;
    rep.add("the four points are in general position", general);

    // the six D_{i,j>=2} lines carry the six point pairs, opposite lines of
    // one color carrying complementary pairs that meet in P_i
    bool sides_ok = true, complementary = true;
    std::set<std::set<int>> pairs;
    for (int i = 1; i <= 3; ++i) {
        std::array<std::set<int>, 2> pair_of;
        for (int j = 2; j <= 3; ++j) {
            std::set<int> on;
            for (std::size_t t = 0; t < tps.size(); ++t)
                if (arr.line(i, j).contains(tps[t].location)) on.insert(static_cast<int>(t));
            if (on.size() != 2) sides_ok = false;
            pairs.insert(on);
            pair_of[j - 2] = on;
        }
        std::set<int> all;
        for (const auto &s : pair_of) all.insert(s.begin(), s.end());
        if (all.size() != 4) complementary = false;
    }
    rep.add("each D_{i,j>=2} contains exactly two of the points", sides_ok);
    rep.add("the six lines realize the six distinct pairs", pairs.size() == 6);
    rep.add("opposite sides carry complementary pairs meeting in P_i", complementary);

    // D_{i,1} avoids the (1,1,1) points
    bool avoid = true;
    for (int i = 1; i <= 3; ++i)
        for (const auto &tp : tps)
            if (arr.line(i, 1).contains(tp.location)) avoid = false;
    rep.add("the D_{i,1} lines avoid the (1,1,1) points", avoid);

    // incidence i)-iii): the proper transform of each D_{i,1} meets exactly
    // the two contracted lines of a single other color, and the assignment
    // i -> color is a 3-cycle
    std::vector<ProjPoint> special = {arr.base[0], arr.base[1], arr.base[2]};
    for (const auto &tp : tps) special.push_back(tp.location);
    std::array<int, 3> sigma{0, 0, 0};
    bool incidences = true;
    for (int i = 1; i <= 3; ++i) {
        std::set<std::pair<int, int>> met;
        for (int k = 1; k <= 3; ++k) {
            if (k == i) continue;
            for (int j = 2; j <= 3; ++j) {
                ProjPoint q = meet(arr.line(i, 1), arr.line(k, j));
                bool is_special = false;
                for (const auto &s : special) is_special = is_special || s == q;
                if (!is_special) met.insert({k, j});
            }
        }
        if (met.size() == 2 && met.begin()->first == met.rbegin()->first &&
            met.begin()->first != i)
            sigma[i - 1] = met.begin()->first;
        else
            incidences = false;
    }
    bool cycle = incidences && sigma[0] != 0 &&
                 std::set<int>(sigma.begin(), sigma.end()).size() == 3;
    rep.add("each D_{i,1} meets exactly the two contracted lines of one other color",
            incidences);
    rep.add("the color assignment i -> sigma(i) is a fixed-point-free 3-cycle", cycle);

    rep.add("induced configuration: complete quadrilateral plus diagonals "
            "(dual of the quadrangle with diagonal triangle P1 P2 P3)",
            general && sides_ok && pairs.size() == 6 && complementary && avoid);
    return rep;
}

std::vector<CampedelliCoverEquation>
campedelli_cover_equations(const std::array<int, 7> &line_assignment)
{
    std::set<int> seen(line_assignment.begin(), line_assignment.end());
    if (seen.size() != 7 || seen.count(0) || *seen.rbegin() > 7 || *seen.begin() < 1)
        throw std::invalid_argument(
            "campedelli_cover_equations: assignment must be a bijection onto the "
            "seven nonzero elements of (Z/2)^3");

    auto pairing = [](int chi, int nu) {
        int x = chi & nu;
        return (__builtin_popcount(static_cast<unsigned>(x))) % 2;
    };

    std::vector<CampedelliCoverEquation> out;
    for (int chi = 1; chi <= 7; ++chi)
        for (int chip = chi + 1; chip <= 7; ++chip) {
            CampedelliCoverEquation eq;
            eq.chi = chi;
            eq.chi_prime = chip;
            eq.chi_sum = chi ^ chip;
            for (int line = 0; line < 7; ++line)
                if (pairing(chi, line_assignment[line]) == 1 &&
                    pairing(chip, line_assignment[line]) == 1)
                    eq.line_labels.push_back(line);
            out.push_back(eq);
        }
    return out;
}

} // namespace burniat
