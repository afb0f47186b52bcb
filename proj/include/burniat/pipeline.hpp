#pragma once
#include <optional>
#include <string>
#include <vector>

#include "burniat/affine.hpp"
#include "burniat/gamma_bar.hpp"
#include "burniat/group_table.hpp"
#include "burniat/plane.hpp"
#include "burniat/report.hpp"

namespace burniat {

// One torsion relation per pair (z(4), z(j)): the e'-part of the lambda-hat
// difference, plus the center bit (the e-part sum mod 2) when it is pinned.
struct RelationEntry {
    std::array<int, 3> e_prime_part{};
    std::optional<int> center_bit;
};

struct RelationSet {
    int k_squared = 6;
    bool nodal = false; // meaningful flavor for K^2 = 4
    std::vector<RelationEntry> entries;
};

// The relation data as stated for each K^2; for K^2 = 4 the single vector
// depends on the flavor (sharing a branch line zeroes the shared bit).
RelationSet canonical_relation_set(int k_squared, bool nodal = false);

// Relation data computed from an arrangement through the incidence rule;
// the center bits for K^2 = 2 come from the cyclotomic computation.
RelationSet arrangement_relation_set(const BurniatArrangement &arr);

struct TheoremRow {
    int k_squared = 0;
    std::string pi1;
    std::optional<IsoClass> pi1_class; // empty for the infinite K^2 = 6 row
    AbelianInvariants h1;
    BigInt quotient_order = 0;         // |pi1| for the finite rows
    bool conditional_topology = false; // K^2 = 6 uses the cited topological input
    bool witness_ok = false;           // gamma_i -> i, j, -k witness verified
    std::string witness;
};

enum class Pi1Source { Canonical, Arrangement };

TheoremRow compute_pi1(int k_squared, Pi1Source source = Pi1Source::Canonical,
                       const BurniatArrangement *arr = nullptr);

// Runs the five rows from canonical data, checks them against the expected
// table, and checks the two historical discrepancies at K^2 = 2.
Report verify_theorem_table();

// G^2-invariants of H_1 x H_2 x H_3 with the character-graded pieces of the
// three spaces of sections; returns 2.
int invariant_section_dimension();
Report invariant_section_report();

// Dimension of the family of primary surfaces: 3 curve moduli plus the
// projectivized invariant pencil; cross-checked numerology 48, 48, 10.
struct ModuliReport {
    int dimension = 0;
    Report checks;
};
ModuliReport moduli_dimension_report();

} // namespace burniat
