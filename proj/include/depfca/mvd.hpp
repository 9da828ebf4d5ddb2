#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depfca/relation.hpp"

namespace depfca {

/// Partition of the full attribute index set, an element of Part(A).
/// Canonical form: blocks sorted by minimum element, elements ascending.
class AttrPartition {
public:
    AttrPartition() = default;

    static AttrPartition from_blocks(std::size_t attr_count,
                                     const std::vector<std::vector<std::size_t>>& blocks);
    static AttrPartition from_labels(std::vector<std::uint32_t> labels);
    static AttrPartition singletons(std::size_t attr_count);
    static AttrPartition single_block(std::size_t attr_count);

    std::size_t attr_count() const { return labels_.size(); }
    std::size_t block_count() const { return block_count_; }
    std::uint32_t label(std::size_t a) const { return labels_[a]; }
    std::vector<std::vector<std::size_t>> blocks() const;

    /// True iff every block of this partition lies inside a block of other.
    bool refines(const AttrPartition& other) const;
    /// Common refinement (blockwise intersection), the lattice meet.
    AttrPartition meet_with(const AttrPartition& other) const;
    /// Finest common coarsening (transitive merging), the lattice join.
    AttrPartition join_with(const AttrPartition& other) const;

    bool operator==(const AttrPartition&) const = default;
    bool operator<(const AttrPartition& other) const { return labels_ < other.labels_; }

private:
    std::vector<std::uint32_t> labels_;  // normalized by first occurrence
    std::size_t block_count_ = 0;
};

/// Antichain of tuple-index classes; the tolerance relation returned by φ.
struct ClassFamily {
    std::vector<std::vector<std::size_t>> classes;  // each ascending; family sorted

    bool operator==(const ClassFamily&) const = default;
};

/// Generalized MVD X ↠ Y₁ | … | Yₘ; rhs_blocks partition A ∖ X.
struct GeneralizedMVD {
    AttrSet lhs;
    std::vector<AttrSet> rhs_blocks;
};

/// Tuple caps for the exponential class-enumeration operators.
struct MvdLimits {
    std::size_t max_tuples = 16;
    static constexpr std::size_t hard_ceiling = 24;
};

/// Matching test: the rows of c (set semantics) equal the cross
/// product of their projections onto the blocks of p.
bool matches(const Relation& rel, const AttrPartition& p, const std::vector<std::size_t>& c);

/// φ: all subset-maximal tuple classes matched by p.
ClassFamily phi(const Relation& rel, const AttrPartition& p, const MvdLimits& limits = {});

/// ψ: the finest attribute partition matching every class of s.
AttrPartition psi(const Relation& rel, const ClassFamily& s);

/// Γ = ψ∘φ, a closure operator on Part(A).
AttrPartition gamma(const Relation& rel, const AttrPartition& p, const MvdLimits& limits = {});

/// Γ' = φ∘ψ, a closure operator on class families.
ClassFamily gamma_prime(const Relation& rel, const ClassFamily& s, const MvdLimits& limits = {});

/// Closure-based test: Γ(⟨X₁|…|Xₙ|Y⟩) = Γ(⟨X₁|…|Xₙ|Y₁|…|Yₘ⟩).
bool mvd_holds(const Relation& rel, const GeneralizedMVD& d, const MvdLimits& limits = {});

/// Validates the GeneralizedMVD invariants against rel; throws ContractError.
void check_mvd_shape(const Relation& rel, const GeneralizedMVD& d);

/// Premise/conclusion partitions of the closure test (X attrs as singletons).
AttrPartition mvd_premise_partition(const Relation& rel, const GeneralizedMVD& d);
AttrPartition mvd_conclusion_partition(const Relation& rel, const GeneralizedMVD& d);

}  // namespace depfca
