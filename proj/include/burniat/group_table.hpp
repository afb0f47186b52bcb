#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burniat/smith.hpp"

namespace burniat {

// An explicitly enumerated finite group: index-based multiplication table.
struct FiniteGroupTable {
    std::vector<std::vector<int>> mul;
    int identity = 0;

    int n() const { return static_cast<int>(mul.size()); }

    int inverse(int a) const;
    int conjugate(int g, int a) const { return mul[mul[g][a]][inverse(g)]; }
    int element_order(int a) const;

    // Throws std::logic_error if the table is not a group or |G| > 512.
    void validate() const;

    bool is_abelian() const;
    int exponent() const;
    std::vector<int> center() const;
    std::vector<int> commutator_subgroup() const;

    // Subgroup generated by the given elements.
    std::vector<int> generated_subgroup(std::vector<int> seeds) const;
};

// Smallest normal subgroup containing the seeds, as a sorted element list.
std::vector<int> normal_closure(const FiniteGroupTable &g, const std::vector<int> &seeds);

bool is_normal(const FiniteGroupTable &g, const std::vector<int> &subgroup);

struct QuotientResult {
    FiniteGroupTable group;
    std::vector<int> projection; // element index -> coset index
};

// Coset group by a normal subgroup; throws std::invalid_argument otherwise.
QuotientResult quotient(const FiniteGroupTable &g, const std::vector<int> &normal_subgroup);

// Isomorphism-invariant data recomputable from the table.  Equal fingerprints
// are necessary for isomorphism; the classifier adds an explicit witness.
struct GroupFingerprint {
    BigInt order;
    std::map<int, int> order_histogram; // element order -> count
    AbelianInvariants abelianization;
    BigInt commutator_order;
    BigInt center_order;
    int exponent = 1;

    bool operator==(const GroupFingerprint &o) const = default;
    std::string to_string() const;
};

GroupFingerprint fingerprint(const FiniteGroupTable &g);

// Abelianization invariants of the (2-group) table.
AbelianInvariants table_abelianization(const FiniteGroupTable &g);

struct IsoClass {
    enum class Tag { ElementaryAbelian, QuaternionTimesElementaryAbelian, Other };
    Tag tag = Tag::Other;
    int k = 0; // the (Z/2)^k part
    GroupFingerprint fp;

    bool operator==(const IsoClass &o) const { return tag == o.tag && k == o.k; }
    std::string to_string() const;
};

// Classification against the catalog {(Z/2)^k, H x (Z/2)^k} with H the
// order-8 quaternion group.  Quaternion-type answers are backed by an
// explicit isomorphism found by generator-image search.
IsoClass classify(const FiniteGroupTable &g);

// Explicit isomorphism data for H x (Z/2)^k: images of i, j and of the k
// elementary-abelian factors inside the classified group.
struct QuaternionWitness {
    int image_i = -1;
    int image_j = -1;
    std::vector<int> central_factors;
};

std::optional<QuaternionWitness> find_quaternion_witness(const FiniteGroupTable &g);

// Reference tables.
FiniteGroupTable quaternion_table();
FiniteGroupTable dihedral8_table();
FiniteGroupTable elementary_abelian_table(int k);
FiniteGroupTable direct_product(const FiniteGroupTable &a, const FiniteGroupTable &b);

// Relabels elements by a permutation; iso-invariants must not change.
FiniteGroupTable relabel(const FiniteGroupTable &g, const std::vector<int> &perm);

} // namespace burniat
