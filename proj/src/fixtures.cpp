#include "burniat/fixtures.hpp"

#include <stdexcept>

namespace burniat {

BurniatArrangement arrangement_from_pencils(const std::array<BigRat, 2> &a,
                                            const std::array<BigRat, 2> &b,
                                            const std::array<BigRat, 2> &c)
{
    BurniatArrangement arr;
    arr.base = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)};
    arr.d[0][0] = ProjLine(0, 0, 1); // y3 = 0, joins P1 P2
    arr.d[1][0] = ProjLine(1, 0, 0); // y1 = 0, joins P2 P3
    arr.d[2][0] = ProjLine(0, 1, 0); // y2 = 0, joins P3 P1
    for (int j = 0; j < 2; ++j) {
        arr.d[0][1 + j] = ProjLine(0, 1, -a[j]);
        arr.d[1][1 + j] = ProjLine(-b[j], 0, 1);
        arr.d[2][1 + j] = ProjLine(1, -c[j], 0);
    }
    return arr;
}

BurniatArrangement reference_arrangement(int k_squared, bool nodal)
{
    switch (k_squared) {
    case 6:
        // no product of parameters equals 1
        return arrangement_from_pencils({2, 3}, {5, 7}, {11, 13});
    case 5:
        // single coincidence a2 b2 c2 = 1: D_{1,2}, D_{2,2}, D_{3,2} meet once
        return arrangement_from_pencils({2, 5}, {3, 7}, {BigRat(1, 6), 11});
    case 4:
        if (nodal)
            // two coincidences sharing D_{1,2}: the two triple points are
            // collinear with P1 along that branch line
            return arrangement_from_pencils({2, 5}, {3, 7}, {BigRat(1, 6), BigRat(1, 14)});
        // two coincidences with disjoint line triples
        return arrangement_from_pencils({2, 5}, {3, 7}, {BigRat(1, 6), BigRat(1, 35)});
    case 3:
        // profiles (2,2,2), (2,3,3), (3,2,3)
        return arrangement_from_pencils({2, BigRat(10, 3)}, {3, 5},
                                        {BigRat(1, 6), BigRat(1, 10)});
    case 2:
        // the rigid configuration: opposite parameters negated
        return arrangement_from_pencils({2, -2}, {3, -3}, {BigRat(1, 6), BigRat(-1, 6)});
    default:
        throw std::invalid_argument("reference_arrangement: K^2 must be 2..6");
    }
}

} // namespace burniat
