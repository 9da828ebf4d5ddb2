#pragma once

#include <cstddef>
#include <vector>

#include "depfca/relation.hpp"

namespace depfca {

/// Minimal non-trivial FD with a singleton right-hand side.
struct FunctionalDependency {
    AttrSet lhs;
    std::size_t rhs;

    bool operator==(const FunctionalDependency&) const = default;
};

inline constexpr std::size_t fd_attr_cap = 32;

/// All minimal non-trivial FDs X→a with |X| ≤ max_lhs, levelwise with
/// partition refinement. Output sorted by (|lhs|, lhs, rhs).
/// max_lhs defaults to |A|-1 (no effective bound).
std::vector<FunctionalDependency> discover_minimal_fds(
    const Relation& rel, std::size_t max_lhs = static_cast<std::size_t>(-1));

/// True iff every listed FD holds in rel.
bool fd_cover_check(const Relation& rel, const std::vector<FunctionalDependency>& fds);

}  // namespace depfca
