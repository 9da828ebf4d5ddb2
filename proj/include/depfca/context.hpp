#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "depfca/relation.hpp"

namespace depfca {

/// Formal context K = (℘₂(T), A, I): one object per unordered pair of
/// distinct tuples, incident with an attribute exactly when the two tuples
/// agree on it. Incidence is stored as one bit row per object.
class FormalContext {
public:
    FormalContext(std::vector<std::pair<std::size_t, std::size_t>> objects,
                  std::vector<std::string> attributes,
                  std::vector<std::vector<std::uint64_t>> incidence_rows);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attr_count() const { return attributes_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }

    bool incident(std::size_t obj, std::size_t attr) const;
    /// All objects incident with every attribute of xs; all objects for xs = ∅.
    std::vector<std::size_t> extent(const AttrSet& xs) const;
    /// Double derivation X'': attributes shared by every object of extent(xs).
    AttrSet attr_closure(const AttrSet& xs) const;
    /// True iff ys ⊆ attr_closure(xs), i.e. extent(xs) ⊆ extent(ys).
    bool implication_holds(const AttrSet& xs, const AttrSet& ys) const;

private:
    std::vector<std::uint64_t> attr_mask(const AttrSet& xs) const;
    bool has_all(std::size_t obj, const std::vector<std::uint64_t>& mask) const;

    std::vector<std::pair<std::size_t, std::size_t>> objects_;
    std::vector<std::string> attributes_;
    std::vector<std::vector<std::uint64_t>> rows_;  // bit rows, |A| bits each
    std::size_t words_ = 0;
};

/// Pair-agreement binarization: objects are unordered pairs {i,j}, i<j.
FormalContext binarize(const Relation& rel);

}  // namespace depfca
