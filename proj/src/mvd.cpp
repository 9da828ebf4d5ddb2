#include "depfca/mvd.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_map>

namespace depfca {

AttrPartition AttrPartition::from_labels(std::vector<std::uint32_t> labels) {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    for (auto& l : labels) {
        auto [it, _] = remap.emplace(l, static_cast<std::uint32_t>(remap.size()));
        l = it->second;
    }
    AttrPartition p;
    p.labels_ = std::move(labels);
    p.block_count_ = remap.size();
    return p;
}

AttrPartition AttrPartition::from_blocks(
    std::size_t attr_count, const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<std::uint32_t> labels(attr_count, UINT32_MAX);
    std::uint32_t next = 0;
    std::size_t covered = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw ContractError("empty attribute block");
        for (auto a : b) {
            if (a >= attr_count || labels[a] != UINT32_MAX)
                throw ContractError("attribute blocks must be disjoint and in range");
            labels[a] = next;
            ++covered;
        }
        ++next;
    }
    if (covered != attr_count) throw ContractError("attribute blocks must cover all attributes");
    return from_labels(std::move(labels));
}

AttrPartition AttrPartition::singletons(std::size_t attr_count) {
    std::vector<std::uint32_t> labels(attr_count);
    std::iota(labels.begin(), labels.end(), 0u);
    return from_labels(std::move(labels));
}

AttrPartition AttrPartition::single_block(std::size_t attr_count) {
    return from_labels(std::vector<std::uint32_t>(attr_count, 0));
}

std::vector<std::vector<std::size_t>> AttrPartition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t a = 0; a < labels_.size(); ++a) out[labels_[a]].push_back(a);
    return out;
}

bool AttrPartition::refines(const AttrPartition& other) const {
    if (attr_count() != other.attr_count())
        throw ContractError("refines over mismatched attribute sets");
    std::vector<std::uint32_t> image(block_count_, UINT32_MAX);
    for (std::size_t a = 0; a < labels_.size(); ++a) {
        auto& slot = image[labels_[a]];
        if (slot == UINT32_MAX)
            slot = other.labels_[a];
        else if (slot != other.labels_[a])
            return false;
    }
    return true;
}

AttrPartition AttrPartition::meet_with(const AttrPartition& other) const {
    if (attr_count() != other.attr_count())
        throw ContractError("meet over mismatched attribute sets");
    std::vector<std::uint32_t> labels(labels_.size());
    std::unordered_map<std::uint64_t, std::uint32_t> pairs;
    for (std::size_t a = 0; a < labels_.size(); ++a) {
        std::uint64_t key = (static_cast<std::uint64_t>(labels_[a]) << 32) | other.labels_[a];
        auto [it, _] = pairs.emplace(key, static_cast<std::uint32_t>(pairs.size()));
        labels[a] = it->second;
    }
    return from_labels(std::move(labels));
}

AttrPartition AttrPartition::join_with(const AttrPartition& other) const {
    if (attr_count() != other.attr_count())
        throw ContractError("join over mismatched attribute sets");
    std::size_t m = labels_.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto link_same_labels = [&](const std::vector<std::uint32_t>& labels) {
        std::unordered_map<std::uint32_t, std::size_t> first;
        for (std::size_t a = 0; a < m; ++a) {
            auto [it, fresh] = first.emplace(labels[a], a);
            if (!fresh) parent[find(a)] = find(it->second);
        }
    };
    link_same_labels(labels_);
    link_same_labels(other.labels_);
    std::vector<std::uint32_t> labels(m);
    for (std::size_t a = 0; a < m; ++a) labels[a] = static_cast<std::uint32_t>(find(a));
    return from_labels(std::move(labels));
}

namespace {

using Mask = std::uint32_t;

// Distinct projected rows of the tuples in `c` onto attribute list `attrs`.
// Projections are relational, so duplicates collapse. Column codes are
// < tuple count, so small projections pack into one 64-bit key.
std::size_t distinct_count(const Relation& rel, const std::vector<std::size_t>& c,
                           const std::vector<std::size_t>& attrs) {
    const auto& codes = rel.column_codes();
    if (attrs.empty()) return c.empty() ? 0 : 1;
    unsigned bits = std::bit_width(std::max<std::size_t>(rel.tuple_count(), 1));
    if (bits * attrs.size() <= 64) {
        std::vector<std::uint64_t> keys;
        keys.reserve(c.size());
        for (auto i : c) {
            std::uint64_t key = 0;
            for (auto a : attrs) key = (key << bits) | codes[a][i];
            keys.push_back(key);
        }
        std::sort(keys.begin(), keys.end());
        return std::unique(keys.begin(), keys.end()) - keys.begin();
    }
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> key(attrs.size());
    for (auto i : c) {
        for (std::size_t k = 0; k < attrs.size(); ++k) key[k] = codes[attrs[k]][i];
        seen.insert(key);
    }
    return seen.size();
}

std::vector<std::size_t> all_attrs(std::size_t m) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

std::vector<std::size_t> mask_to_indices(Mask mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

void validate_class(const Relation& rel, const std::vector<std::size_t>& c) {
    if (c.empty()) throw ContractError("empty tuple class");
    for (auto i : c)
        if (i >= rel.tuple_count())
            throw ContractError("tuple index " + std::to_string(i) + " out of range");
}

// Finest partition of the attribute list `atoms` whose product decomposition
// matches the class `c`. Recursively peels off binary splits; any valid
// binary split is a union of blocks of the finest decomposition, so the
// recursion is order-independent.
void finest_decomposition(const Relation& rel, const std::vector<std::size_t>& c,
                          const std::vector<std::size_t>& atoms,
                          std::vector<std::vector<std::size_t>>& out) {
    if (atoms.size() <= 1) {
        out.push_back(atoms);
        return;
    }
    if (atoms.size() > 30) throw CapacityError("attribute split search limited to 30 attributes");
    std::size_t total = distinct_count(rel, c, atoms);
    std::size_t rest = atoms.size() - 1;
    // Candidate side B always contains atoms[0]; the complement is non-empty.
    for (Mask mask = 0; mask + 1 < (Mask{1} << rest); ++mask) {
        std::vector<std::size_t> left{atoms[0]}, right;
        for (std::size_t k = 0; k < rest; ++k)
            ((mask >> k) & 1u ? left : right).push_back(atoms[k + 1]);
        std::size_t nl = distinct_count(rel, c, left);
        if (nl > total) continue;
        if (nl * distinct_count(rel, c, right) == total) {
            finest_decomposition(rel, c, left, out);
            finest_decomposition(rel, c, right, out);
            return;
        }
    }
    out.push_back(atoms);
}

AttrPartition finest_matching_single(const Relation& rel, const std::vector<std::size_t>& c) {
    std::vector<std::vector<std::size_t>> blocks;
    finest_decomposition(rel, c, all_attrs(rel.attr_count()), blocks);
    return AttrPartition::from_blocks(rel.attr_count(), blocks);
}

void check_phi_cap(const Relation& rel, const MvdLimits& limits) {
    std::size_t cap = std::min(limits.max_tuples, MvdLimits::hard_ceiling);
    if (rel.tuple_count() > cap)
        throw CapacityError("class enumeration capped at " + std::to_string(cap) +
                            " tuples (" + std::to_string(rel.tuple_count()) + " present)");
}

}  // namespace

bool matches(const Relation& rel, const AttrPartition& p, const std::vector<std::size_t>& c) {
    if (p.attr_count() != rel.attr_count())
        throw ContractError("partition does not cover the relation's attributes");
    validate_class(rel, c);
    // c is always a subset of the product of its block projections, so
    // equality holds exactly when the cardinalities agree.
    std::size_t total = distinct_count(rel, c, all_attrs(rel.attr_count()));
    std::size_t product = 1;
    for (const auto& block : p.blocks()) {
        product *= distinct_count(rel, c, block);
        if (product > total) return false;
    }
    return product == total;
}

ClassFamily phi(const Relation& rel, const AttrPartition& p, const MvdLimits& limits) {
    check_phi_cap(rel, limits);
    std::size_t n = rel.tuple_count();
    std::vector<Mask> maximal;
    // Descending cardinality with subset pruning keeps exactly the maximal
    // matched classes.
    for (std::size_t k = n; k >= 1; --k) {
        Mask mask = (k == 32) ? ~Mask{0} : (Mask{1} << k) - 1;
        Mask end = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
        while (mask <= end) {
            bool covered = false;
            for (Mask kept : maximal)
                if ((mask & kept) == mask) {
                    covered = true;
                    break;
                }
            if (!covered && matches(rel, p, mask_to_indices(mask))) maximal.push_back(mask);
            if (k == n) break;
            // Gosper's hack: next subset of the same cardinality.
            Mask c = mask & -mask;
            Mask r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    ClassFamily fam;
    for (Mask m : maximal) fam.classes.push_back(mask_to_indices(m));
    std::sort(fam.classes.begin(), fam.classes.end());
    return fam;
}

AttrPartition psi(const Relation& rel, const ClassFamily& s) {
    // Partitions matching a fixed class form a filter in the coarseness order
    // whose minimum is the class's finest product decomposition; the finest
    // partition matching all of s is therefore the join of the per-class
    // minima.
    AttrPartition acc = AttrPartition::singletons(rel.attr_count());
    for (const auto& c : s.classes) {
        validate_class(rel, c);
        acc = acc.join_with(finest_matching_single(rel, c));
    }
    return acc;
}

AttrPartition gamma(const Relation& rel, const AttrPartition& p, const MvdLimits& limits) {
    return psi(rel, phi(rel, p, limits));
}

ClassFamily gamma_prime(const Relation& rel, const ClassFamily& s, const MvdLimits& limits) {
    return phi(rel, psi(rel, s), limits);
}

void check_mvd_shape(const Relation& rel, const GeneralizedMVD& d) {
    rel.check_attrs(d.lhs);
    std::vector<bool> seen(rel.attr_count(), false);
    for (auto a : d.lhs) seen[a] = true;
    for (const auto& block : d.rhs_blocks) {
        if (block.empty()) throw ContractError("empty rhs block");
        for (auto a : block) {
            if (a >= rel.attr_count() || seen[a])
                throw ContractError("rhs blocks must be disjoint from each other and from lhs");
            seen[a] = true;
        }
    }
    for (std::size_t a = 0; a < rel.attr_count(); ++a)
        if (!seen[a])
            throw ContractError("rhs blocks must cover all attributes outside lhs (missing \"" +
                                rel.attribute_name(a) + "\")");
}

namespace {

AttrPartition premise_like(const Relation& rel, const GeneralizedMVD& d, bool split_rhs) {
    std::vector<std::vector<std::size_t>> blocks;
    for (auto a : d.lhs) blocks.push_back({a});
    if (split_rhs) {
        for (const auto& y : d.rhs_blocks) blocks.emplace_back(y.begin(), y.end());
    } else {
        std::vector<std::size_t> merged;
        for (const auto& y : d.rhs_blocks) merged.insert(merged.end(), y.begin(), y.end());
        if (!merged.empty()) blocks.push_back(std::move(merged));
    }
    return AttrPartition::from_blocks(rel.attr_count(), blocks);
}

}  // namespace

AttrPartition mvd_premise_partition(const Relation& rel, const GeneralizedMVD& d) {
    return premise_like(rel, d, false);
}

AttrPartition mvd_conclusion_partition(const Relation& rel, const GeneralizedMVD& d) {
    return premise_like(rel, d, true);
}

bool mvd_holds(const Relation& rel, const GeneralizedMVD& d, const MvdLimits& limits) {
    check_mvd_shape(rel, d);
    if (d.rhs_blocks.empty()) return true;  // X = A: every group is a single point
    return gamma(rel, mvd_premise_partition(rel, d), limits) ==
           gamma(rel, mvd_conclusion_partition(rel, d), limits);
}

}  // namespace depfca
