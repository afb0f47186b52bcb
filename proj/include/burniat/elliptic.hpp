#pragma once
#include <array>
#include <optional>
#include <string>

#include "burniat/cyclotomic.hpp"
#include "burniat/poly.hpp"
#include "burniat/report.hpp"

namespace burniat {

// Substitution on the coordinate pairs ((x':x),(v':v),(w':w)) with
// polynomial entries, identified projectively pair by pair.
struct CoverTransform {
    std::string name;
    std::array<Poly, 6> image; // images of x', x, v', v, w', w in that order

    static CoverTransform identity_transform();

    Poly apply(const Poly &p) const;

    // Substitution composition: apply `inner` first, then this one.
    CoverTransform compose(const CoverTransform &inner) const;

    bool projectively_equal(const CoverTransform &o) const;
};

CoverTransform cover_g1();
CoverTransform cover_f2();
CoverTransform cover_f3();
CoverTransform cover_g2();
CoverTransform cover_g3();

// Signs of the induced action on the sections V = v v' and W = w x' / w',
// determined modulo the curve equations; nullopt if the image is not +-1
// times the section.
std::optional<int> section_sign_V(const CoverTransform &t);
std::optional<int> section_sign_W(const CoverTransform &t);

// The eigenvector table for V and W under (g1, f2, f3, g2, g3), the
// involution and composition laws, and the order-8 substitution group.
Report verify_sign_table();

// Splitting of the preimage of the (1,1,1) hypersurface into two del Pezzo
// factors, with the stabilizer coset behaviour.
Report verify_splitting();

// The covering identity u_i^2 = delta_i delta_{i-1} = (W_{i-1} W_i v_i v_i')^2
// modulo the cover equations, with the divisor-class bookkeeping and the
// stabilizer condition for the Galois group of X-hat over X.
Report verify_ui_identity();

struct CenterBitRecord {
    int pair_index;                  // which (z(4), z(j)), j = 5, 6, 7
    std::array<int, 3> e_prime_part; // image in + e_i' Z/2
    int center_bit;                  // sum of the e-components mod 2
};

struct K2TwoConstants {
    Zeta8 c;    // a^3
    Zeta8 zeta; // -a
    std::array<CenterBitRecord, 3> records;
    Report report;
};

// Determines the del Pezzo constant c = a^3, the second coordinate
// zeta = -a of z(5) forced by a^4 = -1, and the three center-bit records
// whose sum kills the quaternion center.
K2TwoConstants solve_k2_two_constant();

} // namespace burniat
