#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "depfca/errors.hpp"

namespace depfca {

/// Subset of attribute indices in canonical ascending order.
class AttrSet {
public:
    AttrSet() = default;
    AttrSet(std::initializer_list<std::size_t> idx);
    explicit AttrSet(std::vector<std::size_t> idx);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    bool contains(std::size_t a) const;
    bool is_subset_of(const AttrSet& other) const;

    AttrSet with(std::size_t a) const;
    AttrSet without(std::size_t a) const;
    AttrSet united(const AttrSet& other) const;

    const std::vector<std::size_t>& indices() const { return idx_; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    bool operator==(const AttrSet&) const = default;
    bool operator<(const AttrSet& other) const { return idx_ < other.idx_; }

private:
    std::vector<std::size_t> idx_;
};

struct LoadOptions {
    char delimiter = ',';
    bool dedupe_rows = false;
    bool null_distinct = false;
};

/// Immutable relational table: named attributes, indexed tuples of opaque
/// string values compared by byte equality. Tuple indices are stable.
class Relation {
public:
    static Relation from_rows(std::vector<std::string> attributes,
                              std::vector<std::vector<std::string>> rows,
                              std::string provenance = "inline",
                              bool null_distinct = false);

    /// RFC 4180 CSV with a mandatory header row.
    static Relation load_csv(const std::string& path, const LoadOptions& opts = {});

    /// Parses CSV text directly (used by load_csv and tests).
    static Relation from_csv_text(const std::string& text, const LoadOptions& opts,
                                  std::string provenance = "inline");

    std::size_t attr_count() const { return attributes_.size(); }
    std::size_t tuple_count() const { return rows_.size(); }
    const std::vector<std::string>& attributes() const { return attributes_; }
    const std::string& attribute_name(std::size_t a) const { return attributes_.at(a); }
    /// Returns the index of a named attribute, or npos when absent.
    std::size_t attr_index(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const std::vector<std::string>& row(std::size_t i) const { return rows_.at(i); }
    const std::string& value(std::size_t i, std::size_t a) const { return rows_.at(i).at(a); }
    const std::string& provenance() const { return provenance_; }
    bool null_distinct() const { return null_distinct_; }

    /// Whether tuples i and j agree on attribute a. Under null_distinct an
    /// empty cell agrees with nothing, itself included.
    bool agree(std::size_t i, std::size_t j, std::size_t a) const;

    /// Projection with set semantics: distinct projected rows only.
    /// Projection onto the empty set yields {()} when the relation is non-empty.
    std::set<std::vector<std::string>> project(const AttrSet& xs) const;

    /// Per-column integer codes under byte equality; codes are dense per column.
    /// Used by operators that only need an equivalence on values.
    const std::vector<std::vector<std::uint32_t>>& column_codes() const;

    void check_attrs(const AttrSet& xs) const;

private:
    Relation() = default;

    std::vector<std::string> attributes_;
    std::vector<std::vector<std::string>> rows_;
    std::string provenance_;
    bool null_distinct_ = false;
    mutable std::vector<std::vector<std::uint32_t>> codes_;  // lazily built
};

}  // namespace depfca
