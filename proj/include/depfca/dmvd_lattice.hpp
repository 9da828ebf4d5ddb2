#pragma once

#include <set>
#include <vector>

#include "depfca/mvd.hpp"
#include "depfca/relation.hpp"

namespace depfca {

/// One boolean per attribute: true where a pair of tuples agrees.
using AgreementVector = std::vector<bool>;

/// Meet-closed set of attribute partitions, kept in canonical sorted order.
struct PartitionLattice {
    std::vector<AttrPartition> elements;

    bool contains(const AttrPartition& p) const;
    bool operator==(const PartitionLattice&) const = default;
};

/// bin(T): one agreement vector per unordered pair of distinct tuples,
/// duplicates collapsed.
std::set<AgreementVector> bin_vectors(const Relation& rel);

/// part(t): attributes with value 0 form one block, each 1 a singleton.
AttrPartition vector_to_partition(const AgreementVector& t);

/// ⟨S⟩∧: smallest meet-closed superset, by fixpoint iteration of pairwise meets.
PartitionLattice meet_closure(const std::vector<AttrPartition>& parts);

/// The DMVD-characterizing lattice ⟨part(bin(T))⟩∧.
PartitionLattice dmvd_lattice(const Relation& rel);

/// The Γ-closed attribute partitions, by exhaustive enumeration of Part(A).
/// Requires at most `max_attrs_for_enumeration` attributes.
PartitionLattice mvd_lattice(const Relation& rel, const MvdLimits& limits = {});
inline constexpr std::size_t max_attrs_for_enumeration = 6;

/// Degenerated MVD: every pair of tuples agreeing on lhs disagrees in at
/// most one rhs block.
bool dmvd_holds(const Relation& rel, const GeneralizedMVD& d);

/// All partitions of {0..m-1}, canonical order (Bell(m) of them).
std::vector<AttrPartition> all_attr_partitions(std::size_t m);

}  // namespace depfca
