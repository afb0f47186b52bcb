#pragma once
#include "burniat/plane.hpp"

namespace burniat {

// Explicit rational reference arrangements.  Base points are the standard
// coordinate triangle; the pencils through P1, P2, P3 are parametrized by
//   D_{1,j}: y2 = a_j y3,   D_{2,j}: y3 = b_j y1,   D_{3,j}: y1 = c_j y2,
// and three lines of distinct colors meet away from the triangle iff the
// product of their parameters is 1, at the point (1 : ab : b).
//
// k in {2,...,6}; the nodal flag selects between the two K^2 = 4 shapes.
BurniatArrangement reference_arrangement(int k_squared, bool nodal = false);

// Parameter-driven builder used by the fixtures and tests.
BurniatArrangement arrangement_from_pencils(const std::array<BigRat, 2> &a,
                                            const std::array<BigRat, 2> &b,
                                            const std::array<BigRat, 2> &c);

} // namespace burniat
