#include "depfca/partitions.hpp"

#include <algorithm>
#include <unordered_map>

namespace depfca {

namespace {

// Renumber labels by first occurrence; returns the block count.
std::size_t normalize(std::vector<std::uint32_t>& labels) {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    for (auto& l : labels) {
        auto [it, _] = remap.emplace(l, static_cast<std::uint32_t>(remap.size()));
        l = it->second;
    }
    return remap.size();
}

}  // namespace

TuplePartition TuplePartition::from_labels(const std::vector<std::uint32_t>& labels) {
    TuplePartition p;
    p.labels_ = labels;
    p.block_count_ = normalize(p.labels_);
    return p;
}

TuplePartition TuplePartition::from_blocks(
    std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<std::uint32_t> labels(n, UINT32_MAX);
    std::uint32_t next = 0;
    std::size_t covered = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw ContractError("empty block");
        for (auto i : b) {
            if (i >= n || labels[i] != UINT32_MAX)
                throw ContractError("blocks must be disjoint and within 0..n-1");
            labels[i] = next;
            ++covered;
        }
        ++next;
    }
    if (covered != n) throw ContractError("blocks must cover 0..n-1");
    return from_labels(labels);
}

TuplePartition TuplePartition::single_block(std::size_t n) {
    return from_labels(std::vector<std::uint32_t>(n, 0));
}

TuplePartition TuplePartition::singletons(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i);
    return from_labels(labels);
}

std::vector<std::vector<std::size_t>> TuplePartition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
    // First-occurrence labels already order blocks by minimum element.
    return out;
}

TuplePartition delta(const Relation& rel, std::size_t a) {
    if (a >= rel.attr_count())
        throw ContractError("attribute index " + std::to_string(a) + " out of range");
    std::size_t n = rel.tuple_count();
    std::vector<std::uint32_t> labels(n);
    const auto& codes = rel.column_codes()[a];
    if (rel.null_distinct()) {
        // Each empty cell is its own class; give them fresh labels.
        std::uint32_t fresh = static_cast<std::uint32_t>(n);
        for (std::size_t i = 0; i < n; ++i)
            labels[i] = rel.value(i, a).empty() ? fresh++ : codes[i];
    } else {
        labels = codes;
    }
    return TuplePartition::from_labels(labels);
}

TuplePartition meet(const TuplePartition& p, const TuplePartition& q) {
    if (p.element_count() != q.element_count())
        throw ContractError("meet over mismatched index ranges");
    std::size_t n = p.element_count();
    std::vector<std::uint32_t> labels(n);
    std::unordered_map<std::uint64_t, std::uint32_t> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t key = (static_cast<std::uint64_t>(p.label(i)) << 32) | q.label(i);
        auto [it, _] = pairs.emplace(key, static_cast<std::uint32_t>(pairs.size()));
        labels[i] = it->second;
    }
    return TuplePartition::from_labels(labels);
}

bool refines(const TuplePartition& p, const TuplePartition& q) {
    if (p.element_count() != q.element_count())
        throw ContractError("refines over mismatched index ranges");
    // p refines q iff p-label -> q-label is a function.
    std::vector<std::uint32_t> image(p.block_count(), UINT32_MAX);
    for (std::size_t i = 0; i < p.element_count(); ++i) {
        auto& slot = image[p.label(i)];
        if (slot == UINT32_MAX)
            slot = q.label(i);
        else if (slot != q.label(i))
            return false;
    }
    return true;
}

TuplePartition partition_of_set(const Relation& rel, const AttrSet& xs) {
    rel.check_attrs(xs);
    TuplePartition acc = TuplePartition::single_block(rel.tuple_count());
    for (auto a : xs) acc = meet(acc, delta(rel, a));
    return acc;
}

bool fd_holds(const Relation& rel, const AttrSet& xs, const AttrSet& ys) {
    // partition_of_set(xs ∪ ys) always refines partition_of_set(xs),
    // so equality reduces to equal block counts.
    return partition_of_set(rel, xs).block_count() ==
           partition_of_set(rel, xs.united(ys)).block_count();
}

}  // namespace depfca
