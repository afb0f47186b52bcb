#pragma once
#include <string>
#include <vector>

#include "burniat/intmat.hpp"

namespace burniat {

// left * original * right == diagonal, both transforms unimodular.
// diagonal holds min(rows, cols) nonnegative entries with d_i | d_{i+1}
// (zeros trail, and everything divides 0).
struct SmithForm {
    std::vector<BigInt> diagonal;
    IntMatrix left;
    IntMatrix right;

    std::size_t rank() const
    {
        std::size_t r = 0;
        for (const auto &d : diagonal)
            if (d != 0) ++r;
        return r;
    }
};

SmithForm smith_normal_form(const IntMatrix &m);

// Canonical invariants of a finitely generated abelian group:
// free rank plus torsion coefficients >= 2 in divisibility order.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    bool operator==(const AbelianInvariants &o) const
    {
        return free_rank == o.free_rank && torsion == o.torsion;
    }

    bool is_elementary_abelian_2(std::size_t k) const
    {
        if (free_rank != 0 || torsion.size() != k) return false;
        for (const auto &t : torsion)
            if (t != 2) return false;
        return true;
    }

    BigInt torsion_order() const
    {
        BigInt n = 1;
        for (const auto &t : torsion) n *= t;
        return n;
    }

    std::string to_string() const;
};

// Invariants of Z^n_generators / rowspan(relations).
AbelianInvariants abelian_invariants(const IntMatrix &relations, std::size_t n_generators);

} // namespace burniat
