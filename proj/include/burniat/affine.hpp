#pragma once
#include <array>
#include <string>
#include <vector>

#include "burniat/rational.hpp"
#include "burniat/report.hpp"
#include "burniat/smith.hpp"

namespace burniat {

// Coordinates throughout are over the fixed lattice basis
// (e1, e2, e3, e1', e2', e3'); slots 0..2 are the e-part, 3..5 the e'-part.

struct LatticeVector {
    std::array<BigInt, 6> c{};

    static LatticeVector basis(int slot)
    {
        LatticeVector v;
        v.c[slot] = 1;
        return v;
    }

    LatticeVector operator+(const LatticeVector &o) const
    {
        LatticeVector r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }

    LatticeVector operator-() const
    {
        LatticeVector r;
        for (int i = 0; i < 6; ++i) r.c[i] = -c[i];
        return r;
    }

    bool operator==(const LatticeVector &o) const { return c == o.c; }
    bool is_zero() const
    {
        for (const auto &x : c)
            if (x != 0) return false;
        return true;
    }
};

// An element of (1/2)Lambda: numerators over the fixed denominator 2.
struct HalfVector {
    std::array<BigInt, 6> num{};

    static HalfVector of_lattice(const LatticeVector &v)
    {
        HalfVector h;
        for (int i = 0; i < 6; ++i) h.num[i] = 2 * v.c[i];
        return h;
    }

    bool operator==(const HalfVector &o) const { return num == o.num; }
    bool is_zero() const
    {
        for (const auto &x : num)
            if (x != 0) return false;
        return true;
    }

    // True if the vector lies in Lambda; fills the coordinates if so.
    bool to_lattice(LatticeVector &out) const
    {
        for (int i = 0; i < 6; ++i) {
            if (num[i] % 2 != 0) return false;
            out.c[i] = num[i] / 2;
        }
        return true;
    }
};

// Diagonal +-1 linear part acting on C^3; sign i multiplies the lattice
// slots i and i+3.
struct SignVector {
    std::array<int, 3> s{1, 1, 1};

    static SignVector identity() { return {}; }

    SignVector operator*(const SignVector &o) const
    {
        SignVector r;
        for (int i = 0; i < 3; ++i) r.s[i] = s[i] * o.s[i];
        return r;
    }

    HalfVector apply(const HalfVector &v) const
    {
        HalfVector r;
        for (int i = 0; i < 3; ++i) {
            r.num[i] = s[i] * v.num[i];
            r.num[i + 3] = s[i] * v.num[i + 3];
        }
        return r;
    }

    bool operator==(const SignVector &o) const { return s == o.s; }
    bool is_identity() const { return s[0] == 1 && s[1] == 1 && s[2] == 1; }
};

// Element of the affine group: z -> linear*z + translation, exact arithmetic.
struct AffineMap {
    SignVector linear;
    HalfVector translation;

    static AffineMap identity() { return {}; }

    static AffineMap pure_translation(const LatticeVector &v)
    {
        return {SignVector::identity(), HalfVector::of_lattice(v)};
    }

    // (A,t)(B,s) = (AB, A s + t): apply `o` first, then this map.
    AffineMap compose(const AffineMap &o) const
    {
        AffineMap r;
        r.linear = linear * o.linear;
        HalfVector as = linear.apply(o.translation);
        for (int i = 0; i < 6; ++i) r.translation.num[i] = as.num[i] + translation.num[i];
        return r;
    }

    AffineMap inverse() const
    {
        AffineMap r;
        r.linear = linear; // diagonal +-1, self-inverse
        HalfVector at = linear.apply(translation);
        for (int i = 0; i < 6; ++i) r.translation.num[i] = -at.num[i];
        return r;
    }

    bool operator==(const AffineMap &o) const
    {
        return linear == o.linear && translation == o.translation;
    }

    bool is_identity() const { return linear.is_identity() && translation.is_zero(); }
    bool is_translation() const { return linear.is_identity(); }
};

inline AffineMap commutator(const AffineMap &a, const AffineMap &b)
{
    return a.compose(b).compose(a.inverse()).compose(b.inverse());
}

inline bool commutes(const AffineMap &a, const AffineMap &b)
{
    return a.compose(b) == b.compose(a);
}

// The generators of the affine group: three glide-type maps gamma_i with
// linear parts (+,-,+), (+,+,-), (-,+,+) and translations e_i/2, together
// with the six lattice translations.
struct GammaSystem {
    std::array<AffineMap, 3> gamma;
    std::array<AffineMap, 6> lattice; // t_{e1},t_{e2},t_{e3},t_{e1'},t_{e2'},t_{e3'}

    // Generating set in the order (gamma1, e1', gamma2, e2', gamma3, e3').
    std::array<AffineMap, 6> group_generators() const
    {
        return {gamma[0], lattice[3], gamma[1], lattice[4], gamma[2], lattice[5]};
    }

    AffineMap gamma123() const { return gamma[0].compose(gamma[1]).compose(gamma[2]); }
};

GammaSystem build_gamma();

// Words are sequences of signed 1-based generator indices, evaluated by
// left-to-right composition (the leftmost letter is applied last).
using Word = std::vector<int>;

AffineMap evaluate_word(const Word &w, const std::vector<AffineMap> &generators);

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;
};

// The generating set (gamma1, e1', gamma2, e2', gamma3, e3') with the
// relation calculus as relator words.
Presentation gamma_presentation();
Report verify_presentation(const Presentation &p, const std::vector<AffineMap> &gens);

// Exact check of the commutation lists, the six twisted relations
// gamma_i t = t^-1 gamma_i, and the three commutator-translation identities.
Report verify_relations();

enum class GammaRelations {
    Full,
    // Sanity variant: keep only the generator squares and the relations not
    // forcing e1, e2, e3 to vanish; the abelianization then keeps free rank.
    DropGammaCommutators,
};

// Relation matrix on the generators (g1,g2,g3,e1',e2',e3',e1,e2,e3), rows
// derived from exact commutator computations plus gamma_i^2 = e_i.
IntMatrix gamma_relation_matrix(GammaRelations which = GammaRelations::Full);

AbelianInvariants gamma_abelianization();

// Same computation together with the completeness certificate: the candidate
// quotient map onto (Z/2)^6 is a homomorphism, is surjective, and its target
// has the same order as the relation-matrix quotient.
Report gamma_abelianization_report();

// Index-two subgroups, 1-based i; generator order
// (gamma_i, e_i', gamma_{i+1}, e_{i+1}', e_{i+2}, e_{i+2}').
std::array<AffineMap, 6> index2_subgroup(int i);

AbelianInvariants subgroup_abelianization(int i);
Report subgroup_abelianization_report(int i);

// Parity of the gamma_j exponents of g, read off the diagonal sign pattern.
std::array<int, 3> gamma_parity(const AffineMap &g);

// Candidate abelianization image of the full group in (Z/2)^3 + (Z/2)^3:
// gamma parities followed by e'-coordinate parities.
std::array<int, 6> gamma_ab_image(const AffineMap &g);

} // namespace burniat
