#pragma once

#include <cstdint>
#include <vector>

#include "depfca/relation.hpp"

namespace depfca {

/// Partition of the tuple indices 0..n-1, an element of the lattice (D, ⊓).
/// Stored as a label array normalized by first occurrence, so structural
/// equality of label arrays is equality of partitions. Canonical blocks
/// (sorted by minimum element, elements ascending) are materialized on demand.
class TuplePartition {
public:
    TuplePartition() = default;

    /// Builds from an arbitrary label array (labels need not be dense).
    static TuplePartition from_labels(const std::vector<std::uint32_t>& labels);
    static TuplePartition from_blocks(std::size_t n,
                                      const std::vector<std::vector<std::size_t>>& blocks);
    static TuplePartition single_block(std::size_t n);
    static TuplePartition singletons(std::size_t n);

    std::size_t element_count() const { return labels_.size(); }
    std::size_t block_count() const { return block_count_; }
    std::uint32_t label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::uint32_t>& labels() const { return labels_; }

    std::vector<std::vector<std::size_t>> blocks() const;

    bool operator==(const TuplePartition&) const = default;

private:
    std::vector<std::uint32_t> labels_;  // normalized: first occurrences are 0,1,2,...
    std::size_t block_count_ = 0;
};

/// δ(a): equivalence classes of value equality on column a.
TuplePartition delta(const Relation& rel, std::size_t a);

/// Partition intersection ⊓: the coarsest common refinement.
TuplePartition meet(const TuplePartition& p, const TuplePartition& q);

/// True iff every block of p is contained in some block of q.
bool refines(const TuplePartition& p, const TuplePartition& q);

/// {X}^□ realized as the meet of δ(a) over a ∈ xs; the single block for xs = ∅.
TuplePartition partition_of_set(const Relation& rel, const AttrSet& xs);

/// FD test: partition_of_set(xs) == partition_of_set(xs ∪ ys).
bool fd_holds(const Relation& rel, const AttrSet& xs, const AttrSet& ys);

}  // namespace depfca
