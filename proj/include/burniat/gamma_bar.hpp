#pragma once
#include <array>
#include <cstdint>
#include <map>

#include "burniat/affine.hpp"
#include "burniat/group_table.hpp"

namespace burniat {

// Element of Gamma/2Lambda in canonical form: diagonal signs plus the six
// translation numerators (over denominator 2) reduced mod 4.  The linear
// part acts on residues by s * r = r or (4 - r) mod 4.
struct QuotElement {
    std::array<std::int8_t, 3> sign{1, 1, 1};
    std::array<std::uint8_t, 6> t{};

    static QuotElement from_affine(const AffineMap &m);

    QuotElement mul(const QuotElement &o) const;
    QuotElement inv() const;

    bool operator==(const QuotElement &o) const { return sign == o.sign && t == o.t; }
    bool operator<(const QuotElement &o) const
    {
        if (sign != o.sign) return sign < o.sign;
        return t < o.t;
    }

    bool is_lattice_translation() const;
};

// The finite group Gamma/2Lambda of order 512, enumerated by closure from
// the six generators, with the distinguished elements labeled.
struct GammaBarGroup {
    FiniteGroupTable table;
    std::vector<QuotElement> elements;
    std::array<int, 3> gamma;   // indices of the gamma_i images
    std::array<int, 6> lattice; // indices of e1,e2,e3,e1',e2',e3' images
    std::vector<int> lattice_subgroup; // the 64 images of Lambda/2Lambda

    int index_of(const QuotElement &q) const;
    int index_of_affine(const AffineMap &m) const { return index_of(QuotElement::from_affine(m)); }
};

GammaBarGroup enumerate_gamma_bar();

} // namespace burniat
