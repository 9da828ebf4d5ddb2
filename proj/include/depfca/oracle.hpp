#pragma once

#include "depfca/dmvd_lattice.hpp"
#include "depfca/mvd.hpp"
#include "depfca/relation.hpp"

namespace depfca::oracle {

// Definition-level reference implementations. These deliberately share no
// algorithmic code with the characterization modules: FD checks scan tuple
// pairs, MVD checks materialize cross products, and the class/partition
// sweeps enumerate power sets and Bell-number partitions outright.

/// FD by definition: every pair agreeing on xs agrees on ys. O(n²) scan.
bool oracle_fd(const Relation& rel, const AttrSet& xs, const AttrSet& ys);

/// Generalized MVD by definition: per X-group, the projection onto A∖X
/// equals the materialized cross product of the projections onto the blocks.
bool oracle_mvd(const Relation& rel, const GeneralizedMVD& d);

/// φ by power-set sweep; tuple count capped at 12.
ClassFamily oracle_maximal_classes(const Relation& rel, const AttrPartition& p);

/// ψ by Bell-number sweep over Part(A), |A| ≤ 6. Throws ContractError when
/// no unique refinement-minimal matching partition exists (that would
/// falsify the meet-closure assumption the fast path relies on).
AttrPartition oracle_finest_matching(const Relation& rel, const ClassFamily& s);

}  // namespace depfca::oracle
